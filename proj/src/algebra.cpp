#include "semiflow/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace semiflow {

Density::Density(Field rho)
    : rho_(std::move(rho))
{
    for (std::size_t i = 0; i < rho_.size(); ++i)
        if (!(rho_[i] > 0.0))
            throw std::domain_error("density must be positive; rho[" + std::to_string(i) + "] = " + std::to_string(rho_[i]));
}

OneFormDensity::OneFormDensity(Field a, Density mu)
    : a_(std::move(a))
    , mu_(std::move(mu))
{
    require_same_grid(a_, mu_.rho());
}

// ============================================================================
namespace {

Field checked_monotone(Field eta)
{
    const auto n = eta.size();
    const double length = eta.grid().length();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(eta[i + 1] > eta[i]))
            throw std::domain_error("diffeo is not strictly increasing at node " + std::to_string(i));
    if (!(eta[0] + length > eta[n - 1]))
        throw std::domain_error("diffeo does not have winding number one");
    return eta;
}

} // namespace

Diffeo::Diffeo(Field eta)
    : eta_(checked_monotone(std::move(eta)))
    , interpolant_(eta_, eta_.grid().length())
{
}

Diffeo Diffeo::identity(const Grid& grid)
{
    return Diffeo(Field(grid, grid.nodes()));
}

Field jacobian(const Diffeo& g)
{
    // Differencing the periodic displacement eta - x keeps eta' = 1 exact for the identity.
    const auto& grid = g.grid();
    std::vector<double> displacement(grid.size());
    for (std::size_t i = 0; i < displacement.size(); ++i)
        displacement[i] = g.eta()[i] - grid.node(i);
    return derivative(Field(grid, std::move(displacement))) + Field(grid, 1.0);
}

// ============================================================================
double pair_v(const Density& mu, const Field& f)
{
    return integrate(f * mu.rho());
}

double pair_g(const OneFormDensity& md, const Field& xi)
{
    return integrate(md.a() * xi * md.rho());
}

Field pullback_scalar(const Diffeo& g, const Field& f)
{
    require_same_grid(g.eta(), f);
    return Field(f.grid(), interpolate(f, g.eta().values()));
}

Density pullback_density(const Diffeo& g, const Density& mu)
{
    return Density(pullback_scalar(g, mu.rho()) * jacobian(g));
}

Field pushforward_vector(const Diffeo& g, const Field& xi)
{
    const auto inverse = invert_diffeo(g);
    return pullback_scalar(inverse, jacobian(g) * xi);
}

OneFormDensity ad_star_group(const Diffeo& g, const OneFormDensity& md)
{
    return OneFormDensity(pullback_scalar(g, md.a()) * jacobian(g), pullback_density(g, md.mu()));
}

Diffeo compose(const Diffeo& outer, const Diffeo& inner)
{
    require_same_grid(outer.eta(), inner.eta());
    return Diffeo(Field(inner.grid(), outer.evaluate(inner.eta().values())));
}

Diffeo invert_diffeo(const Diffeo& g)
{
    const auto& grid = g.grid();
    const auto& eta = g.eta();
    const double h = grid.spacing();

    // eta(X) - X is periodic; its nodal range brackets every preimage to
    // within one cell of the cubic.
    double offset_min = eta[0];
    double offset_max = eta[0];
    for (std::size_t i = 0; i < eta.size(); ++i) {
        offset_min = std::min(offset_min, eta[i] - grid.node(i));
        offset_max = std::max(offset_max, eta[i] - grid.node(i));
    }

    constexpr double residual_target = 1e-12;
    std::vector<double> inverse(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.node(i);
        double lo = x - offset_max - 2.0 * h;
        double hi = x - offset_min + 2.0 * h;
        if (!(g(lo) <= x && g(hi) >= x))
            throw std::runtime_error("diffeo inversion could not bracket x = " + std::to_string(x));

        for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            (g(mid) < x ? lo : hi) = mid;
        }
        const double r_lo = std::abs(g(lo) - x);
        const double r_hi = std::abs(g(hi) - x);
        const double root = r_lo <= r_hi ? lo : hi;
        if (std::min(r_lo, r_hi) > residual_target)
            throw std::runtime_error("diffeo inversion did not converge at x = " + std::to_string(x) +
                                     "; residual " + std::to_string(std::min(r_lo, r_hi)));
        inverse[i] = root;
    }
    return Diffeo(Field(grid, std::move(inverse)));
}

SemidirectElement semidirect_product(const SemidirectElement& e1, const SemidirectElement& e2)
{
    return {compose(e1.gamma, e2.gamma),
            Density(e2.omega.rho() + pullback_density(e2.gamma, e1.omega).rho())};
}

// ============================================================================
Field lie_derivative_scalar(const Field& xi, const Field& f)
{
    return xi * derivative(f);
}

Field lie_derivative_density(const Field& xi, const Density& mu)
{
    return derivative(xi * mu.rho());
}

Field jacobi_lie_bracket(const Field& xi, const Field& eta)
{
    return xi * derivative(eta) - eta * derivative(xi);
}

Field algebra_bracket(const Field& xi, const Field& eta)
{
    return -jacobi_lie_bracket(xi, eta);
}

Field div_mu(const Field& xi, const Density& mu)
{
    return derivative(xi * mu.rho()) / mu.rho();
}

OneFormDensity ad_star(const Field& xi, const OneFormDensity& md)
{
    const auto& a = md.a();
    return OneFormDensity(xi * derivative(a) + a * derivative(xi) + a * div_mu(xi, md.mu()), md.mu());
}

OneFormDensity diamond(const Field& f, const Density& mu)
{
    return OneFormDensity(derivative(f), mu);
}

} // namespace semiflow
