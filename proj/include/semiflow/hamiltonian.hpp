#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semiflow/lagrangian.hpp"

namespace semiflow {

/// Momentum density m = rho u and density rho. The momentum is identified
/// with the one-form density u dx (x) rho dx.
struct ConservativeState
{
    Field m;
    Density rho;

    Field velocity() const { return m / rho.rho(); }
};

ConservativeState perturbed(const ConservativeState& s, const ConservativeState& dir, double step);
ConservativeState to_conservative(const ReducedState& s);
ReducedState to_reduced(const ConservativeState& s);

/// A functional of (m, rho) together with its variational derivatives.
struct Functional
{
    std::string name;
    std::function<double(const ConservativeState&)> eval;
    std::function<Field(const ConservativeState&)> dF_dm;
    std::function<Field(const ConservativeState&)> dF_drho;

    double operator()(const ConservativeState& s) const { return eval(s); }
};

/// H = 1/2 int m^2 / rho dx + int rho W(rho) dx.
double hamiltonian_eval(const ConservativeState& state, const BarotropicLaw& law);

/// delta H / delta m = m / rho.
Field dH_dm(const ConservativeState& state);

/// delta H / delta rho = -1/2 (m / rho)^2 + W(rho) + rho W'(rho).
Field dH_drho(const ConservativeState& state, const BarotropicLaw& law);

Functional hamiltonian_functional(LawPtr law);

enum class WeightedOn
{
    momentum,
    density
};

/// F = int m w dx or int rho w dx.
Functional weighted_linear_functional(WeightedOn which, const Field& w);

/// a F + b G with derivatives combined the same way.
Functional linear_combination(double a, const Functional& F, double b, const Functional& G);

/**
 * Lie-Poisson bracket on the dual of the semidirect-product algebra:
 *
 *   {F, G} = int m (G_m (F_m)_x - F_m (G_m)_x) dx
 *          + int rho (G_m (F_rho)_x - F_m (G_rho)_x) dx
 *
 * with the centered difference for every x-derivative.
 */
double lie_poisson_bracket(const Functional& F, const Functional& G, const ConservativeState& state);

/// dF/dt = {F, H}.
double evolution_rate(const Functional& F, const ConservativeState& state, const BarotropicLaw& law);

/// Directions used for functional validation and the gradient oracle.
struct FunctionalCheck
{
    double analytic;
    double finite_difference;
    double relative_error;
};

/// Compares int dF_dm dm + int dF_drho drho with the central-difference
/// directional derivative along `direction`.
FunctionalCheck validate_functional(const Functional& F,
                                    const ConservativeState& state,
                                    const ConservativeState& direction,
                                    double step = 1e-5);

/// Variational derivatives of F by nodal central differences:
/// (delta F / delta m)_i = dF/dm_i / h. Costs 4n evaluations of F.
std::pair<Field, Field> fd_gradient(const std::function<double(const ConservativeState&)>& F,
                                    const ConservativeState& state,
                                    double step);

/// {F, G} as a Functional whose derivatives come from fd_gradient.
Functional bracket_functional(const Functional& F, const Functional& G, double step);

struct JacobiatorResult
{
    double value;       ///< cyclic sum at `step`
    double step;
    double check_value; ///< cyclic sum at 10 * step
    double step_discrepancy;
};

/// {{F,G},K} + {{G,K},F} + {{K,F},G}, inner brackets differentiated by fd_gradient.
/// Throws std::runtime_error if the result is not finite.
JacobiatorResult jacobiator(const Functional& F,
                            const Functional& G,
                            const Functional& K,
                            const ConservativeState& state,
                            double step = 1e-4);

} // namespace semiflow
