#pragma once

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "semiflow/hamiltonian.hpp"

namespace semiflow {

// ============================================================================
// Right-hand sides
// ============================================================================

struct ReducedRate
{
    Field dv;
    Field drho;
};

struct ConservativeRate
{
    Field dm;
    Field drho;
};

/// Rate of the material state: (eta_dot, eta_ddot). rho0 is frozen.
struct MaterialRate
{
    Field deta;
    Field deta_dot;
};

ReducedRate operator+(const ReducedRate& a, const ReducedRate& b);
ReducedRate operator*(double s, const ReducedRate& a);
ConservativeRate operator+(const ConservativeRate& a, const ConservativeRate& b);
ConservativeRate operator*(double s, const ConservativeRate& a);
MaterialRate operator+(const MaterialRate& a, const MaterialRate& b);
MaterialRate operator*(double s, const MaterialRate& a);

/// s + dt * rate. Rebuilding the state re-checks positivity and monotonicity.
ReducedState advance(const ReducedState& s, const ReducedRate& r, double dt);
ConservativeState advance(const ConservativeState& s, const ConservativeRate& r, double dt);
MaterialState advance(const MaterialState& s, const MaterialRate& r, double dt);

/// Euler-Poincare in velocity form: dv = -v v_x - (W + rho W')_x, drho = -(rho v)_x.
ReducedRate rhs_euler_poincare(const ReducedState& state, const BarotropicLaw& law);

/// Localized Lie-Poisson rate: dm = -(m u)_x - m u_x - rho (dH/drho)_x, drho = -m_x, u = m / rho.
ConservativeRate rhs_lie_poisson(const ConservativeState& state, const BarotropicLaw& law);

/// Classical conservation form: dm = -(m^2 / rho + p)_x, drho = -m_x.
ConservativeRate rhs_flux_form(const ConservativeState& state, const BarotropicLaw& law);

/// Material acceleration -(p(rho0 / eta'))_X / rho0. Throws std::domain_error when eta' <= 0.
Field rhs_material(const MaterialState& state, const BarotropicLaw& law);

struct SpatialFields
{
    ConservativeState conservative;
    ReducedState reduced;
};

/// rho = (rho0 / eta') o eta^-1, u = eta_dot o eta^-1, m = rho u on the spatial nodes.
SpatialFields material_to_spatial(const MaterialState& state);

// ============================================================================
// Time stepping
// ============================================================================

template <class State, class Rate>
concept RungeKuttaSystem = requires(const State& s, const Rate& r, double a) {
    { advance(s, r, a) } -> std::same_as<State>;
    { r + r } -> std::same_as<Rate>;
    { a * r } -> std::same_as<Rate>;
};

/// Classical four-stage Runge-Kutta step.
template <class State, class Rhs, class Rate = std::invoke_result_t<const Rhs&, const State&>>
    requires RungeKuttaSystem<State, Rate>
State step_rk4(const Rhs& rhs, const State& state, double dt)
{
    const Rate k1 = rhs(state);
    const Rate k2 = rhs(advance(state, k1, 0.5 * dt));
    const Rate k3 = rhs(advance(state, k2, 0.5 * dt));
    const Rate k4 = rhs(advance(state, k3, dt));
    return advance(state, k1 + 2.0 * k2 + 2.0 * k3 + k4, dt / 6.0);
}

// ============================================================================
// Simulation driver
// ============================================================================

enum class Solver
{
    material,
    euler_poincare,
    lie_poisson,
    flux_form
};

std::string to_string(Solver s);
/// Throws std::invalid_argument for unknown names.
Solver parse_solver(const std::string& name);

struct SimulationConfig
{
    Grid grid{256};
    LawPtr law = make_polytropic(1.0, 1.4);
    double dt = 5e-4;
    double t_end = 0.5;
    std::size_t output_stride = 1; ///< snapshots at t = 0 and every output_stride steps
    Solver solver = Solver::flux_form;
    std::string ic_name = "acoustic";
    std::map<std::string, double> ic_params;
    double cfl_factor = 0.4;
};

/// Throws std::invalid_argument on out-of-range values or an unknown initial condition.
void validate(const SimulationConfig& config);

struct InitialCondition
{
    Density rho;
    Field u;
};

/**
 * acoustic:      rho = 1 + A sin(2 pi k x / L), u = 0       (amplitude, wavenumber)
 * gaussian_bump: rho = 1 + A exp(-(x - L/2)^2 / sigma^2), periodized, u = 0  (amplitude, sigma)
 * constant:      rho = rho, u = u                           (rho, u)
 */
InitialCondition make_initial_condition(const Grid& grid, const std::string& name, const std::map<std::string, double>& params);

struct Snapshot
{
    Field rho;
    Field u;
    Field m;
};

struct Diagnostics
{
    double mass;
    double momentum;
    double energy;
};

struct TrajectoryRecord
{
    std::vector<double> times;
    std::vector<Snapshot> states;
    std::vector<Diagnostics> diagnostics;
};

/// Raised when a run loses positivity, monotonicity or the CFL bound.
class SolverAbort : public std::runtime_error
{
public:
    SolverAbort(double time, const std::string& what);
    double time() const { return time_; }

private:
    double time_;
};

/// Number of RK4 steps a configuration takes: floor(t_end / dt), tolerant of rounding.
std::size_t step_count(const SimulationConfig& config);

/// Largest stable step dt = cfl * h / (max|u| + max c).
double cfl_limit(const Field& u, const Density& rho, const BarotropicLaw& law, double cfl_factor);

TrajectoryRecord simulate(const SimulationConfig& config);

Diagnostics diagnose(const Snapshot& snapshot, const BarotropicLaw& law);

} // namespace semiflow
