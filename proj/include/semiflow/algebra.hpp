#pragma once

// Semidirect-product structure of Diff(S^1) acting on functions and
// densities, realized on periodic grid fields.
//
//   V    : scalar functions f                  (Field)
//   V*   : densities rho dx                    (Density)
//   g    : vector fields xi d/dx               (Field of coefficients)
//   g*   : one-form densities a dx (x) rho dx  (OneFormDensity)
//   G    : circle diffeomorphisms              (Diffeo)
//
// The metric is flat, so flat/sharp are coefficient identities.

#include "semiflow/grid.hpp"

namespace semiflow {

/// Coefficient of a volume form rho dx; rho > 0 at every node.
class Density
{
public:
    explicit Density(Field rho);

    const Field& rho() const { return rho_; }
    const Grid& grid() const { return rho_.grid(); }

private:
    Field rho_;
};

/// One-form density a dx (x) rho dx, kept as the pair (a, rho).
class OneFormDensity
{
public:
    OneFormDensity(Field a, Density mu);

    const Field& a() const { return a_; }
    const Density& mu() const { return mu_; }
    const Field& rho() const { return mu_.rho(); }
    const Grid& grid() const { return a_.grid(); }

private:
    Field a_;
    Density mu_;
};

/**
 * Orientation-preserving circle diffeomorphism stored as a lifted map:
 * eta(x + L) = eta(x) + L, sampled at the grid nodes and strictly increasing
 * with winding number one. Values are never wrapped back into [0, L).
 */
class Diffeo
{
public:
    explicit Diffeo(Field eta);

    static Diffeo identity(const Grid& grid);

    template <class F>
    static Diffeo sample(const Grid& grid, F&& f)
    {
        return Diffeo(Field::sample(grid, std::forward<F>(f)));
    }

    const Field& eta() const { return eta_; }
    const Grid& grid() const { return eta_.grid(); }

    /// Evaluates the lifted map anywhere on the real line.
    double operator()(double x) const { return interpolant_(x); }
    std::vector<double> evaluate(std::span<const double> points) const { return interpolant_.evaluate(points); }

private:
    Field eta_;
    PeriodicInterpolant interpolant_;
};

struct SemidirectElement
{
    Diffeo gamma;
    Density omega;
};

/// Centered difference of the lifted map; eta' > 0 for smooth diffeos.
Field jacobian(const Diffeo& g);

/// <mu, f> = int f rho dx.
double pair_v(const Density& mu, const Field& f);

/// <a dx (x) mu, xi> = int a xi rho dx.
double pair_g(const OneFormDensity& md, const Field& xi);

/// f o eta (right action of G on V).
Field pullback_scalar(const Diffeo& g, const Field& f);

/// eta^*(rho dx) = (rho o eta) eta' dx.
Density pullback_density(const Diffeo& g, const Density& mu);

/// Ad_g xi = (eta' xi) o eta^{-1}.
Field pushforward_vector(const Diffeo& g, const Field& xi);

/// Ad*_g: pulls back both the one-form and the density.
OneFormDensity ad_star_group(const Diffeo& g, const OneFormDensity& md);

/// eta_1 o eta_2.
Diffeo compose(const Diffeo& outer, const Diffeo& inner);

/// Nodal inverse by bisection on the monotone interpolant.
/// Throws std::runtime_error if bisection cannot reach the residual target.
Diffeo invert_diffeo(const Diffeo& g);

/// (g1, w1)(g2, w2) = (g1 o g2, w2 + g2^* w1).
SemidirectElement semidirect_product(const SemidirectElement& e1, const SemidirectElement& e2);

/// Lie derivative of a function along xi: xi f'.
Field lie_derivative_scalar(const Field& xi, const Field& f);

/// Coefficient of the Lie derivative of rho dx: (xi rho)'.
Field lie_derivative_density(const Field& xi, const Density& mu);

/// Jacobi-Lie bracket of vector fields: xi eta' - eta xi'.
Field jacobi_lie_bracket(const Field& xi, const Field& eta);

/// Lie algebra bracket of Diff(M), which is minus the Jacobi-Lie bracket.
/// This is also ad_xi eta.
Field algebra_bracket(const Field& xi, const Field& eta);

/// Divergence with respect to mu: (xi rho)' / rho.
Field div_mu(const Field& xi, const Density& mu);

/// ad*_xi (a dx (x) mu) = (L_xi(a dx) + a div_mu(xi) dx) (x) mu.
OneFormDensity ad_star(const Field& xi, const OneFormDensity& md);

/// f <> mu = df (x) mu.
OneFormDensity diamond(const Field& f, const Density& mu);

} // namespace semiflow
