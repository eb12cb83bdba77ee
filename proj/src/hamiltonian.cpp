#include "semiflow/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace semiflow {

ConservativeState perturbed(const ConservativeState& s, const ConservativeState& dir, double step)
{
    return {s.m + step * dir.m, Density(s.rho.rho() + step * dir.rho.rho())};
}

ConservativeState to_conservative(const ReducedState& s)
{
    return {s.rho.rho() * s.v, s.rho};
}

ReducedState to_reduced(const ConservativeState& s)
{
    return {s.velocity(), s.rho};
}

// ============================================================================
double hamiltonian_eval(const ConservativeState& state, const BarotropicLaw& law)
{
    const auto& rho = state.rho.rho();
    return 0.5 * integrate(state.m * state.m / rho) + integrate(rho * energy_field(law, rho));
}

Field dH_dm(const ConservativeState& state)
{
    return state.velocity();
}

Field dH_drho(const ConservativeState& state, const BarotropicLaw& law)
{
    const auto u = state.velocity();
    return -0.5 * (u * u) + enthalpy_field(law, state.rho.rho());
}

Functional hamiltonian_functional(LawPtr law)
{
    return {
        "H",
        [law](const ConservativeState& s) { return hamiltonian_eval(s, *law); },
        [](const ConservativeState& s) { return dH_dm(s); },
        [law](const ConservativeState& s) { return dH_drho(s, *law); },
    };
}

Functional weighted_linear_functional(WeightedOn which, const Field& w)
{
    const Field zero(w.grid());
    if (which == WeightedOn::momentum)
        return {
            "int m w",
            [w](const ConservativeState& s) { return integrate(s.m * w); },
            [w](const ConservativeState&) { return w; },
            [zero](const ConservativeState&) { return zero; },
        };
    return {
        "int rho w",
        [w](const ConservativeState& s) { return integrate(s.rho.rho() * w); },
        [zero](const ConservativeState&) { return zero; },
        [w](const ConservativeState&) { return w; },
    };
}

Functional linear_combination(double a, const Functional& F, double b, const Functional& G)
{
    return {
        "a F + b G",
        [=](const ConservativeState& s) { return a * F(s) + b * G(s); },
        [=](const ConservativeState& s) { return a * F.dF_dm(s) + b * G.dF_dm(s); },
        [=](const ConservativeState& s) { return a * F.dF_drho(s) + b * G.dF_drho(s); },
    };
}

double lie_poisson_bracket(const Functional& F, const Functional& G, const ConservativeState& state)
{
    const auto f_m = F.dF_dm(state);
    const auto f_rho = F.dF_drho(state);
    const auto g_m = G.dF_dm(state);
    const auto g_rho = G.dF_drho(state);
    const auto df_m = derivative(f_m);
    const auto df_rho = derivative(f_rho);
    const auto dg_m = derivative(g_m);
    const auto dg_rho = derivative(g_rho);

    const auto& m = state.m;
    const auto& rho = state.rho.rho();
    double sum = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double algebra_part = g_m[i] * df_m[i] - f_m[i] * dg_m[i];
        const double advected_part = g_m[i] * df_rho[i] - f_m[i] * dg_rho[i];
        sum += m[i] * algebra_part + rho[i] * advected_part;
    }
    return m.grid().spacing() * sum;
}

double evolution_rate(const Functional& F, const ConservativeState& state, const BarotropicLaw& law)
{
    const Functional H{
        "H",
        [&law](const ConservativeState& s) { return hamiltonian_eval(s, law); },
        [](const ConservativeState& s) { return dH_dm(s); },
        [&law](const ConservativeState& s) { return dH_drho(s, law); },
    };
    return lie_poisson_bracket(F, H, state);
}

FunctionalCheck validate_functional(const Functional& F,
                                    const ConservativeState& state,
                                    const ConservativeState& direction,
                                    double step)
{
    const double analytic =
        integrate(F.dF_dm(state) * direction.m) + integrate(F.dF_drho(state) * direction.rho.rho());
    const double fd = functional_fd(F.eval, state, direction, step);
    const double scale = std::max(std::abs(analytic), std::abs(fd));
    return {analytic, fd, scale > 0.0 ? std::abs(analytic - fd) / scale : 0.0};
}

// ============================================================================
namespace {

// Central differences of F with respect to one nodal component, divided by h.
Field fd_partial(const std::function<double(const ConservativeState&)>& F,
                 const ConservativeState& state,
                 double step,
                 WeightedOn which)
{
    const auto& grid = state.m.grid();
    const double scale = 1.0 / (2.0 * step * grid.spacing());

    std::vector<double> m(state.m.values().begin(), state.m.values().end());
    std::vector<double> rho(state.rho.rho().values().begin(), state.rho.rho().values().end());
    auto& varied = which == WeightedOn::momentum ? m : rho;
    std::vector<double> grad(grid.size());

    auto eval = [&] { return F(ConservativeState{Field(grid, m), Density(Field(grid, rho))}); };

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double saved = varied[i];
        varied[i] = saved + step;
        const double plus = eval();
        varied[i] = saved - step;
        const double minus = eval();
        varied[i] = saved;
        grad[i] = (plus - minus) * scale;
    }
    return Field(grid, std::move(grad));
}

} // namespace

std::pair<Field, Field> fd_gradient(const std::function<double(const ConservativeState&)>& F,
                                    const ConservativeState& state,
                                    double step)
{
    return {fd_partial(F, state, step, WeightedOn::momentum), fd_partial(F, state, step, WeightedOn::density)};
}

Functional bracket_functional(const Functional& F, const Functional& G, double step)
{
    auto value = [F, G](const ConservativeState& s) { return lie_poisson_bracket(F, G, s); };
    return {
        "{" + F.name + ", " + G.name + "}",
        value,
        [value, step](const ConservativeState& s) { return fd_partial(value, s, step, WeightedOn::momentum); },
        [value, step](const ConservativeState& s) { return fd_partial(value, s, step, WeightedOn::density); },
    };
}

namespace {

double cyclic_sum(const Functional& F,
                  const Functional& G,
                  const Functional& K,
                  const ConservativeState& state,
                  double step)
{
    return lie_poisson_bracket(bracket_functional(F, G, step), K, state) +
           lie_poisson_bracket(bracket_functional(G, K, step), F, state) +
           lie_poisson_bracket(bracket_functional(K, F, step), G, state);
}

} // namespace

JacobiatorResult jacobiator(const Functional& F,
                            const Functional& G,
                            const Functional& K,
                            const ConservativeState& state,
                            double step)
{
    const double value = cyclic_sum(F, G, K, state, step);
    const double check = cyclic_sum(F, G, K, state, 10.0 * step);
    if (!std::isfinite(value) || !std::isfinite(check))
        throw std::runtime_error("jacobiator finite differences broke down at step " + std::to_string(step));
    return {value, step, check, std::abs(value - check)};
}

} // namespace semiflow
