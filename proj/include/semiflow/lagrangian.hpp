#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "semiflow/algebra.hpp"

namespace semiflow {

// ============================================================================
// Barotropic stored energy
// ============================================================================

/// Stored energy per unit mass W(rho). The pressure is p = rho^2 W'(rho).
class BarotropicLaw
{
public:
    virtual ~BarotropicLaw() = default;

    virtual std::string name() const = 0;
    virtual double energy(double rho) const = 0;
    virtual double energy_prime(double rho) const = 0;
    virtual double energy_second(double rho) const = 0;
};

using LawPtr = std::shared_ptr<const BarotropicLaw>;

/// W = kappa rho^(gamma - 1) / (gamma - 1), so p = kappa rho^gamma.
class PolytropicLaw final : public BarotropicLaw
{
public:
    PolytropicLaw(double kappa, double gamma);

    double kappa() const { return kappa_; }
    double gamma() const { return gamma_; }

    std::string name() const override { return "polytropic"; }
    double energy(double rho) const override;
    double energy_prime(double rho) const override;
    double energy_second(double rho) const override;

private:
    double kappa_;
    double gamma_;
};

LawPtr make_polytropic(double kappa, double gamma);

/// These reject rho <= 0 with std::domain_error.
double energy(const BarotropicLaw& law, double rho);
double energy_prime(const BarotropicLaw& law, double rho);
double pressure(const BarotropicLaw& law, double rho);
/// dp/drho = 2 rho W' + rho^2 W''.
double sound_speed_squared(const BarotropicLaw& law, double rho);

/// W(rho) + rho W'(rho), the specific enthalpy; its gradient times rho is p_x.
double enthalpy(const BarotropicLaw& law, double rho);

/// Pointwise maps over a density field.
Field energy_field(const BarotropicLaw& law, const Field& rho);
Field enthalpy_field(const BarotropicLaw& law, const Field& rho);
Field pressure_field(const BarotropicLaw& law, const Field& rho);

// ============================================================================
// States
// ============================================================================

/// Material description: configuration eta, its velocity, frozen reference density.
struct MaterialState
{
    Diffeo eta;
    Field eta_dot;
    Density rho0;
};

/// Eulerian velocity v = eta_dot o eta^{-1} with the advected density.
struct ReducedState
{
    Field v;
    Density rho;
};

/// Additive perturbation used by the functional finite-difference oracle.
ReducedState perturbed(const ReducedState& s, const ReducedState& dir, double step);

/// gamma acting on the material state: (eta o gamma, eta_dot o gamma, gamma^* rho0).
MaterialState group_action(const Diffeo& gamma, const MaterialState& state);

// ============================================================================
// Lagrangians and variational derivatives
// ============================================================================

/// l(v, mu) = int (v^2 / 2 - W(rho)) rho dx.
double reduced_lagrangian(const ReducedState& state, const BarotropicLaw& law);

/// L = int (eta_dot^2 / 2 - W(rho0 / eta')) rho0 dX. Throws when eta' <= 0.
double unreduced_lagrangian(const MaterialState& state, const BarotropicLaw& law);

/// delta l / delta v = v dx (x) rho dx.
OneFormDensity dl_dv(const ReducedState& state);

/// delta l / delta mu = v^2 / 2 - W(rho) - rho W'(rho).
Field dl_dmu(const ReducedState& state, const BarotropicLaw& law);

/// int W'(rho) rho1 rho2 dx, the second variation of the potential term.
double potential_hessian_form(const BarotropicLaw& law, const Density& mu, const Field& rho1, const Field& rho2);

// ============================================================================
// Finite-difference oracle
// ============================================================================

template <class State>
concept Perturbable = requires(const State& s, double step) {
    { perturbed(s, s, step) } -> std::same_as<State>;
};

/// Central difference (F(s + step dir) - F(s - step dir)) / (2 step).
template <Perturbable State, class Functional>
double functional_fd(const Functional& functional, const State& state, const State& direction, double step = 1e-5)
{
    if (!(step > 0.0) || step < 1e-300)
        throw std::invalid_argument("finite-difference step must be positive and representable");
    const double plus = functional(perturbed(state, direction, step));
    const double minus = functional(perturbed(state, direction, -step));
    const double slope = (plus - minus) / (2.0 * step);
    if (!std::isfinite(slope))
        throw std::runtime_error("finite-difference quotient is not finite at step " + std::to_string(step));
    return slope;
}

struct FdEstimate
{
    double value;       ///< Richardson-extrapolated slope
    double fine;        ///< central difference at the fine step
    double coarse;      ///< central difference at the coarse step
    double discrepancy; ///< |fine - coarse|
};

/// Central differences at steps 1e-4 and 1e-5 combined by Richardson extrapolation.
template <Perturbable State, class Functional>
FdEstimate functional_fd_richardson(const Functional& functional, const State& state, const State& direction)
{
    const double coarse = functional_fd(functional, state, direction, 1e-4);
    const double fine = functional_fd(functional, state, direction, 1e-5);
    return {fine + (fine - coarse) / 99.0, fine, coarse, std::abs(fine - coarse)};
}

// ============================================================================
// Variational constraints on reduced variations
// ============================================================================

/// Analytic two-parameter family of circle diffeomorphisms eta(X; t, eps).
struct DiffeoFamily
{
    std::function<double(double X, double t, double eps)> eta;
    std::function<double(double X, double t, double eps)> eta_t;   ///< d eta / dt
    std::function<double(double X, double t, double eps)> eta_eps; ///< d eta / d eps
};

/// X + 0.1 t sin X + 0.05 eps sin 2X.
DiffeoFamily reference_variation_family();

struct ConstraintReport
{
    double velocity_residual; ///< || du - (dw/dt + [u, w]_M) ||_inf
    double density_residual;  ///< || drho + (rho w)' ||_inf
    double eps_step;
    double t_step;
};

/**
 * Checks the reduced variations u^eps = eta_t o eta^-1 and rho^eps = (rho0 / eta') o eta^-1
 * against the constraint formulas, with w = eta_eps o eta^-1. The variation of u and rho are
 * obtained by differencing in eps and w-dot by differencing in t; neither uses the formulas
 * being checked. Throws std::domain_error if a family member stops being monotone.
 */
ConstraintReport variation_constraint_check(const Grid& grid,
                                            const DiffeoFamily& family,
                                            const Density& rho0,
                                            double t0,
                                            double eps0,
                                            double eps_step = 1e-4,
                                            double t_step = 1e-4);

} // namespace semiflow
