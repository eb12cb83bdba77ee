#include "semiflow/lagrangian.hpp"

#include <algorithm>

namespace semiflow {

PolytropicLaw::PolytropicLaw(double kappa, double gamma)
    : kappa_(kappa)
    , gamma_(gamma)
{
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("polytropic kappa must be positive");
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw std::invalid_argument("polytropic exponent must exceed 1");
}

double PolytropicLaw::energy(double rho) const
{
    return kappa_ * std::pow(rho, gamma_ - 1.0) / (gamma_ - 1.0);
}

double PolytropicLaw::energy_prime(double rho) const
{
    return kappa_ * std::pow(rho, gamma_ - 2.0);
}

double PolytropicLaw::energy_second(double rho) const
{
    return kappa_ * (gamma_ - 2.0) * std::pow(rho, gamma_ - 3.0);
}

LawPtr make_polytropic(double kappa, double gamma)
{
    return std::make_shared<PolytropicLaw>(kappa, gamma);
}

namespace {

void require_positive(double rho)
{
    if (!(rho > 0.0))
        throw std::domain_error("density must be positive, got " + std::to_string(rho));
}

template <class F>
Field map_density(const Field& rho, F&& f)
{
    std::vector<double> out(rho.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f(rho[i]);
    return Field(rho.grid(), std::move(out));
}

} // namespace

double energy(const BarotropicLaw& law, double rho)
{
    require_positive(rho);
    return law.energy(rho);
}

double energy_prime(const BarotropicLaw& law, double rho)
{
    require_positive(rho);
    return law.energy_prime(rho);
}

double pressure(const BarotropicLaw& law, double rho)
{
    require_positive(rho);
    return rho * rho * law.energy_prime(rho);
}

double sound_speed_squared(const BarotropicLaw& law, double rho)
{
    require_positive(rho);
    return 2.0 * rho * law.energy_prime(rho) + rho * rho * law.energy_second(rho);
}

double enthalpy(const BarotropicLaw& law, double rho)
{
    require_positive(rho);
    return law.energy(rho) + rho * law.energy_prime(rho);
}

Field energy_field(const BarotropicLaw& law, const Field& rho)
{
    return map_density(rho, [&](double r) { return energy(law, r); });
}

Field enthalpy_field(const BarotropicLaw& law, const Field& rho)
{
    return map_density(rho, [&](double r) { return enthalpy(law, r); });
}

Field pressure_field(const BarotropicLaw& law, const Field& rho)
{
    return map_density(rho, [&](double r) { return pressure(law, r); });
}

// ============================================================================
ReducedState perturbed(const ReducedState& s, const ReducedState& dir, double step)
{
    return {s.v + step * dir.v, Density(s.rho.rho() + step * dir.rho.rho())};
}

MaterialState group_action(const Diffeo& gamma, const MaterialState& state)
{
    return {compose(state.eta, gamma), pullback_scalar(gamma, state.eta_dot), pullback_density(gamma, state.rho0)};
}

double reduced_lagrangian(const ReducedState& state, const BarotropicLaw& law)
{
    const auto& rho = state.rho.rho();
    return integrate((0.5 * (state.v * state.v) - energy_field(law, rho)) * rho);
}

double unreduced_lagrangian(const MaterialState& state, const BarotropicLaw& law)
{
    const auto stretch = jacobian(state.eta);
    if (!(stretch.min() > 0.0))
        throw std::domain_error("material map has a non-positive Jacobian");
    const auto& rho0 = state.rho0.rho();
    const auto spatial_density = rho0 / stretch;
    return integrate((0.5 * (state.eta_dot * state.eta_dot) - energy_field(law, spatial_density)) * rho0);
}

OneFormDensity dl_dv(const ReducedState& state)
{
    return OneFormDensity(state.v, state.rho);
}

Field dl_dmu(const ReducedState& state, const BarotropicLaw& law)
{
    const auto& rho = state.rho.rho();
    const auto w_prime = map_density(rho, [&](double r) { return energy_prime(law, r); });
    return 0.5 * (state.v * state.v) - energy_field(law, rho) - w_prime * rho;
}

double potential_hessian_form(const BarotropicLaw& law, const Density& mu, const Field& rho1, const Field& rho2)
{
    const auto w_prime = map_density(mu.rho(), [&](double r) { return energy_prime(law, r); });
    return integrate(w_prime * rho1 * rho2);
}

// ============================================================================
DiffeoFamily reference_variation_family()
{
    return {
        [](double X, double t, double eps) { return X + 0.1 * t * std::sin(X) + 0.05 * eps * std::sin(2.0 * X); },
        [](double X, double, double) { return 0.1 * std::sin(X); },
        [](double X, double, double) { return 0.05 * std::sin(2.0 * X); },
    };
}

namespace {

struct SpatialSnapshot
{
    Field u;
    Field rho;
};

using FamilyFn = std::function<double(double, double, double)>;

Field sample_member(const Grid& grid, const FamilyFn& f, double t, double eps)
{
    return Field::sample(grid, [&](double X) { return f(X, t, eps); });
}

// u = eta_t o eta^{-1}, rho = (rho0 / eta') o eta^{-1}
SpatialSnapshot spatial_member(const Grid& grid, const DiffeoFamily& family, const Density& rho0, double t, double eps)
{
    const Diffeo eta(sample_member(grid, family.eta, t, eps));
    const auto inverse = invert_diffeo(eta);
    return {pullback_scalar(inverse, sample_member(grid, family.eta_t, t, eps)),
            pullback_scalar(inverse, rho0.rho() / jacobian(eta))};
}

// w = eta_eps o eta^{-1}
Field variation_field(const Grid& grid, const DiffeoFamily& family, double t, double eps)
{
    const Diffeo eta(sample_member(grid, family.eta, t, eps));
    return pullback_scalar(invert_diffeo(eta), sample_member(grid, family.eta_eps, t, eps));
}

} // namespace

ConstraintReport variation_constraint_check(const Grid& grid,
                                            const DiffeoFamily& family,
                                            const Density& rho0,
                                            double t0,
                                            double eps0,
                                            double eps_step,
                                            double t_step)
{
    if (!(eps_step > 0.0) || !(t_step > 0.0))
        throw std::invalid_argument("constraint check needs positive difference steps");

    const auto centre = spatial_member(grid, family, rho0, t0, eps0);
    const auto plus = spatial_member(grid, family, rho0, t0, eps0 + eps_step);
    const auto minus = spatial_member(grid, family, rho0, t0, eps0 - eps_step);

    const auto delta_u = (plus.u - minus.u) * (0.5 / eps_step);
    const auto delta_rho = (plus.rho - minus.rho) * (0.5 / eps_step);

    const auto w = variation_field(grid, family, t0, eps0);
    const auto w_dot =
        (variation_field(grid, family, t0 + t_step, eps0) - variation_field(grid, family, t0 - t_step, eps0)) *
        (0.5 / t_step);

    const auto predicted_u = w_dot + jacobi_lie_bracket(centre.u, w);
    const auto predicted_rho = -derivative(centre.rho * w);

    return {max_abs_difference(delta_u, predicted_u), max_abs_difference(delta_rho, predicted_rho), eps_step, t_step};
}

} // namespace semiflow
