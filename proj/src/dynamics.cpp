#include "semiflow/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semiflow/kernels.hpp"

namespace semiflow {

ReducedRate operator+(const ReducedRate& a, const ReducedRate& b) { return {a.dv + b.dv, a.drho + b.drho}; }
ReducedRate operator*(double s, const ReducedRate& a) { return {s * a.dv, s * a.drho}; }
ConservativeRate operator+(const ConservativeRate& a, const ConservativeRate& b) { return {a.dm + b.dm, a.drho + b.drho}; }
ConservativeRate operator*(double s, const ConservativeRate& a) { return {s * a.dm, s * a.drho}; }
MaterialRate operator+(const MaterialRate& a, const MaterialRate& b) { return {a.deta + b.deta, a.deta_dot + b.deta_dot}; }
MaterialRate operator*(double s, const MaterialRate& a) { return {s * a.deta, s * a.deta_dot}; }

ReducedState advance(const ReducedState& s, const ReducedRate& r, double dt)
{
    return {s.v + dt * r.dv, Density(s.rho.rho() + dt * r.drho)};
}

ConservativeState advance(const ConservativeState& s, const ConservativeRate& r, double dt)
{
    return {s.m + dt * r.dm, Density(s.rho.rho() + dt * r.drho)};
}

MaterialState advance(const MaterialState& s, const MaterialRate& r, double dt)
{
    return {Diffeo(s.eta.eta() + dt * r.deta), s.eta_dot + dt * r.deta_dot, s.rho0};
}

// ============================================================================
namespace {

double inv_2h(const Grid& grid) { return 0.5 / grid.spacing(); }

Field positive_stretch(const Diffeo& eta)
{
    auto stretch = jacobian(eta);
    if (!(stretch.min() > 0.0))
        throw std::domain_error("material map folded: eta' = " + std::to_string(stretch.min()));
    return stretch;
}

} // namespace

ReducedRate rhs_euler_poincare(const ReducedState& state, const BarotropicLaw& law)
{
    const auto& grid = state.v.grid();
    const auto& rho = state.rho.rho();
    const auto h = enthalpy_field(law, rho);
    std::vector<double> dv(grid.size()), drho(grid.size());
    kernels::omp::euler_poincare_rate(state.v.values(), rho.values(), h.values(), inv_2h(grid), dv, drho);
    return {Field(grid, std::move(dv)), Field(grid, std::move(drho))};
}

ConservativeRate rhs_lie_poisson(const ConservativeState& state, const BarotropicLaw& law)
{
    const auto& grid = state.m.grid();
    const auto u = dH_dm(state);
    const auto h = dH_drho(state, law);
    std::vector<double> dm(grid.size()), drho(grid.size());
    kernels::omp::lie_poisson_rate(state.m.values(), u.values(), state.rho.rho().values(), h.values(), inv_2h(grid), dm, drho);
    return {Field(grid, std::move(dm)), Field(grid, std::move(drho))};
}

ConservativeRate rhs_flux_form(const ConservativeState& state, const BarotropicLaw& law)
{
    const auto& grid = state.m.grid();
    const auto& rho = state.rho.rho();
    const auto flux = state.m * state.m / rho + pressure_field(law, rho);
    std::vector<double> dm(grid.size()), drho(grid.size());
    kernels::omp::flux_form_rate(state.m.values(), flux.values(), inv_2h(grid), dm, drho);
    return {Field(grid, std::move(dm)), Field(grid, std::move(drho))};
}

Field rhs_material(const MaterialState& state, const BarotropicLaw& law)
{
    const auto& grid = state.eta_dot.grid();
    const auto& rho0 = state.rho0.rho();
    const auto p = pressure_field(law, rho0 / positive_stretch(state.eta));
    std::vector<double> out(grid.size());
    kernels::omp::material_rate(p.values(), rho0.values(), inv_2h(grid), out);
    return Field(grid, std::move(out));
}

SpatialFields material_to_spatial(const MaterialState& state)
{
    const auto inverse = invert_diffeo(state.eta);
    const Density rho(pullback_scalar(inverse, state.rho0.rho() / positive_stretch(state.eta)));
    auto u = pullback_scalar(inverse, state.eta_dot);
    return {{rho.rho() * u, rho}, {std::move(u), rho}};
}

// ============================================================================
std::string to_string(Solver s)
{
    switch (s) {
    case Solver::material: return "material";
    case Solver::euler_poincare: return "euler_poincare";
    case Solver::lie_poisson: return "lie_poisson";
    case Solver::flux_form: return "flux_form";
    }
    return "unknown";
}

Solver parse_solver(const std::string& name)
{
    for (auto s : {Solver::material, Solver::euler_poincare, Solver::lie_poisson, Solver::flux_form})
        if (to_string(s) == name)
            return s;
    throw std::invalid_argument("unknown solver '" + name + "'");
}

namespace {

const std::map<std::string, std::set<std::string>>& known_initial_conditions()
{
    static const std::map<std::string, std::set<std::string>> table{
        {"acoustic", {"amplitude", "wavenumber"}},
        {"gaussian_bump", {"amplitude", "sigma"}},
        {"constant", {"rho", "u"}},
    };
    return table;
}

double param(const std::map<std::string, double>& params, const std::string& key, double fallback)
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

InitialCondition make_initial_condition(const Grid& grid, const std::string& name, const std::map<std::string, double>& params)
{
    const auto& table = known_initial_conditions();
    auto entry = table.find(name);
    if (entry == table.end())
        throw std::invalid_argument("unknown initial condition '" + name + "'");
    for (const auto& [key, value] : params) {
        if (!entry->second.contains(key))
            throw std::invalid_argument("initial condition '" + name + "' has no parameter '" + key + "'");
        if (!std::isfinite(value))
            throw std::invalid_argument("initial condition parameter '" + key + "' is not finite");
    }

    const double L = grid.length();
    if (name == "acoustic") {
        const double A = param(params, "amplitude", 0.01);
        const double k = param(params, "wavenumber", 1.0);
        return {Density(Field::sample(grid, [&](double x) { return 1.0 + A * std::sin(2.0 * std::numbers::pi * k * x / L); })),
                Field(grid)};
    }
    if (name == "gaussian_bump") {
        const double A = param(params, "amplitude", 0.01);
        const double sigma = param(params, "sigma", L / 10.0);
        if (!(sigma > 0.0))
            throw std::invalid_argument("gaussian_bump sigma must be positive");
        auto bump = [&](double x) {
            double sum = 0.0;
            for (int image = -3; image <= 3; ++image) {
                const double d = x - 0.5 * L + image * L;
                sum += std::exp(-d * d / (sigma * sigma));
            }
            return 1.0 + A * sum;
        };
        return {Density(Field::sample(grid, bump)), Field(grid)};
    }
    return {Density(Field(grid, param(params, "rho", 1.0))), Field(grid, param(params, "u", 0.0))};
}

void validate(const SimulationConfig& config)
{
    if (!config.law)
        throw std::invalid_argument("simulation needs a barotropic law");
    if (!(config.dt > 0.0) || !std::isfinite(config.dt))
        throw std::invalid_argument("dt must be positive");
    if (!(config.t_end > 0.0) || !std::isfinite(config.t_end))
        throw std::invalid_argument("t_end must be positive");
    if (config.output_stride == 0)
        throw std::invalid_argument("output_stride must be at least 1");
    if (!(config.cfl_factor > 0.0))
        throw std::invalid_argument("cfl factor must be positive");
    const auto ic = make_initial_condition(config.grid, config.ic_name, config.ic_params);
    const double limit = cfl_limit(ic.u, ic.rho, *config.law, config.cfl_factor);
    if (config.dt > limit)
        throw std::invalid_argument("dt = " + std::to_string(config.dt) + " exceeds the CFL limit " + std::to_string(limit));
}

// ============================================================================
SolverAbort::SolverAbort(double time, const std::string& what)
    : std::runtime_error("solver aborted at t = " + std::to_string(time) + ": " + what)
    , time_(time)
{
}

std::size_t step_count(const SimulationConfig& config)
{
    return static_cast<std::size_t>(std::floor(config.t_end / config.dt * (1.0 + 1e-12)));
}

double cfl_limit(const Field& u, const Density& rho, const BarotropicLaw& law, double cfl_factor)
{
    double max_c = 0.0;
    for (double r : rho.rho().values())
        max_c = std::max(max_c, std::sqrt(std::max(0.0, sound_speed_squared(law, r))));
    const double speed = u.max_abs() + max_c;
    const double h = u.grid().spacing();
    return speed > 0.0 ? cfl_factor * h / speed : std::numeric_limits<double>::infinity();
}

Diagnostics diagnose(const Snapshot& snapshot, const BarotropicLaw& law)
{
    return {integrate(snapshot.rho),
            integrate(snapshot.m),
            hamiltonian_eval(ConservativeState{snapshot.m, Density(snapshot.rho)}, law)};
}

namespace {

Snapshot snapshot_of(const ReducedState& s) { return {s.rho.rho(), s.v, s.rho.rho() * s.v}; }
Snapshot snapshot_of(const ConservativeState& s) { return {s.rho.rho(), s.velocity(), s.m}; }

Snapshot snapshot_of(const MaterialState& s)
{
    const auto spatial = material_to_spatial(s);
    return {spatial.reduced.rho.rho(), spatial.reduced.v, spatial.conservative.m};
}

// Material cells have width h eta'; rho = rho0 / eta' sets the sound speed.
double stable_step(const MaterialState& s, const BarotropicLaw& law, double cfl_factor)
{
    const auto stretch = positive_stretch(s.eta);
    const auto& rho0 = s.rho0.rho();
    const double h = s.eta_dot.grid().spacing();
    double max_c = 0.0;
    for (std::size_t i = 0; i < rho0.size(); ++i)
        max_c = std::max(max_c, std::sqrt(std::max(0.0, sound_speed_squared(law, rho0[i] / stretch[i]))));
    const double speed = s.eta_dot.max_abs() + max_c;
    return speed > 0.0 ? cfl_factor * h * stretch.min() / speed : std::numeric_limits<double>::infinity();
}

double stable_step(const ReducedState& s, const BarotropicLaw& law, double cfl_factor)
{
    return cfl_limit(s.v, s.rho, law, cfl_factor);
}

double stable_step(const ConservativeState& s, const BarotropicLaw& law, double cfl_factor)
{
    return cfl_limit(s.velocity(), s.rho, law, cfl_factor);
}

template <class State, class Rhs>
TrajectoryRecord run(const SimulationConfig& config, State state, const Rhs& rhs)
{
    const auto& law = *config.law;
    const auto steps = step_count(config);

    TrajectoryRecord record;
    auto store = [&](double t, const State& s) {
        auto snap = snapshot_of(s);
        record.diagnostics.push_back(diagnose(snap, law));
        record.states.push_back(std::move(snap));
        record.times.push_back(t);
    };

    store(0.0, state);
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        try {
            const double limit = stable_step(state, law, config.cfl_factor);
            if (config.dt > limit)
                throw SolverAbort(t, "CFL violated: dt = " + std::to_string(config.dt) + " > " + std::to_string(limit));
            state = step_rk4(rhs, state, config.dt);
            if ((k + 1) % config.output_stride == 0)
                store(static_cast<double>(k + 1) * config.dt, state);
        } catch (const SolverAbort&) {
            throw;
        } catch (const std::exception& e) {
            throw SolverAbort(t, e.what());
        }
    }
    return record;
}

} // namespace

TrajectoryRecord simulate(const SimulationConfig& config)
{
    validate(config);
    const auto& law = *config.law;
    const auto& grid = config.grid;
    auto ic = make_initial_condition(grid, config.ic_name, config.ic_params);

    switch (config.solver) {
    case Solver::euler_poincare:
        return run(config, ReducedState{ic.u, ic.rho}, [&](const ReducedState& s) { return rhs_euler_poincare(s, law); });
    case Solver::lie_poisson:
        return run(config, ConservativeState{ic.rho.rho() * ic.u, ic.rho},
                   [&](const ConservativeState& s) { return rhs_lie_poisson(s, law); });
    case Solver::flux_form:
        return run(config, ConservativeState{ic.rho.rho() * ic.u, ic.rho},
                   [&](const ConservativeState& s) { return rhs_flux_form(s, law); });
    case Solver::material:
        // Labels start at the spatial nodes, so rho0 and eta_dot are the initial spatial fields.
        return run(config, MaterialState{Diffeo::identity(grid), ic.u, ic.rho}, [&](const MaterialState& s) {
            return MaterialRate{s.eta_dot, rhs_material(s, law)};
        });
    }
    throw std::invalid_argument("unhandled solver");
}

} // namespace semiflow
