#include <gtest/gtest.h>

#include <cmath>

#include "semiflow/hamiltonian.hpp"
#include "semiflow/random_fields.hpp"
#include "test_support.hpp"

using namespace semiflow;
using semiflow::test::two_pi;

namespace {

const auto gamma2 = make_polytropic(1.0, 2.0);
const auto air = make_polytropic(1.0, 1.4);

ConservativeState uniform(const Grid& g, double m, double rho) { return {Field(g, m), Density(Field(g, rho))}; }

ConservativeState random_state(SmoothFieldGenerator& gen, const Grid& g)
{
    return {gen.series(0.5).sample(g), sample_density(gen.density_series(0.3), g)};
}

ConservativeState random_direction(SmoothFieldGenerator& gen, const Grid& g)
{
    // Density is positive by type; the offset only shifts the direction by a constant.
    return {gen.series(1.0).sample(g), sample_density(gen.density_series(0.5), g)};
}

Functional momentum_weight(const Field& w) { return weighted_linear_functional(WeightedOn::momentum, w); }
Functional density_weight(const Field& w) { return weighted_linear_functional(WeightedOn::density, w); }

} // namespace

TEST(Hamiltonian, Examples)
{
    const Grid g(64);
    EXPECT_NEAR(hamiltonian_eval(uniform(g, 0.0, 1.0), *gamma2), two_pi, 1e-13);
    EXPECT_NEAR(hamiltonian_eval(uniform(g, 1.0, 1.0), *gamma2), 3.0 * std::numbers::pi, 1e-13);
}

TEST(Hamiltonian, LegendrePairing)
{
    SmoothFieldGenerator gen(51);
    const Grid g(128);
    for (int k = 0; k < 20; ++k) {
        const ReducedState r{gen.series(0.7).sample(g), sample_density(gen.density_series(0.4), g)};
        const auto c = to_conservative(r);
        const double lhs = hamiltonian_eval(c, *air) + reduced_lagrangian(r, *air);
        EXPECT_NEAR(lhs, integrate(r.rho.rho() * r.v * r.v), 1e-10);
    }
}

TEST(Hamiltonian, DerivativeExamples)
{
    const Grid g(64);
    EXPECT_EQ(dH_dm(uniform(g, 0.0, 1.0)).max_abs(), 0.0);
    EXPECT_DOUBLE_EQ(dH_dm(uniform(g, 2.0, 1.0))[0], 2.0);
    EXPECT_NEAR(max_abs_difference(dH_drho(uniform(g, 0.0, 1.0), *gamma2), Field(g, 2.0)), 0.0, 1e-15);
    EXPECT_NEAR(max_abs_difference(dH_drho(uniform(g, 1.0, 1.0), *gamma2), Field(g, 1.5)), 0.0, 1e-15);
}

TEST(Functionals, ValidateAgainstFiniteDifferences)
{
    SmoothFieldGenerator gen(53);
    const Grid g(128);
    const auto H = hamiltonian_functional(air);
    for (int k = 0; k < 20; ++k) {
        const auto s = random_state(gen, g);
        const auto dir = random_direction(gen, g);
        const auto w = gen.series(1.0).sample(g);
        for (const auto& F : {H, momentum_weight(w), density_weight(w), linear_combination(0.3, H, -2.0, momentum_weight(w))})
            EXPECT_LE(validate_functional(F, s, dir).relative_error, 1e-6) << F.name;
    }
}

TEST(Functionals, WeightedLinearExamples)
{
    const Grid g(64);
    const ConservativeState s{Field::sample(g, test::sine) + Field(g, 0.5), Density(Field(g, 1.3))};
    const Field one(g, 1.0);
    const auto P = momentum_weight(one);
    EXPECT_NEAR(P(s), integrate(s.m), 1e-15);
    EXPECT_EQ(max_abs_difference(P.dF_dm(s), one), 0.0);
    EXPECT_EQ(P.dF_drho(s).max_abs(), 0.0);
    const auto M = density_weight(one);
    EXPECT_NEAR(M(s), integrate(s.rho.rho()), 1e-15);
    EXPECT_EQ(max_abs_difference(M.dF_drho(s), one), 0.0);
    EXPECT_EQ(M.dF_dm(s).max_abs(), 0.0);

    const auto C = momentum_weight(Field::sample(g, test::cosine));
    EXPECT_NEAR(C(s), integrate(s.m * Field::sample(g, test::cosine)), 1e-15);
}

TEST(Bracket, AntisymmetryAndSelfBracket)
{
    SmoothFieldGenerator gen(59);
    const Grid g(128);
    const auto H = hamiltonian_functional(air);
    for (int k = 0; k < 20; ++k) {
        const auto s = random_state(gen, g);
        const auto F = momentum_weight(gen.series(1.0).sample(g));
        const auto G = density_weight(gen.series(1.0).sample(g));
        EXPECT_NEAR(lie_poisson_bracket(F, G, s), -lie_poisson_bracket(G, F, s), 1e-12);
        EXPECT_NEAR(lie_poisson_bracket(F, H, s), -lie_poisson_bracket(H, F, s), 1e-12);
        EXPECT_EQ(lie_poisson_bracket(H, H, s), 0.0);
        EXPECT_EQ(evolution_rate(H, s, *air), 0.0);
    }
}

TEST(Bracket, Bilinearity)
{
    SmoothFieldGenerator gen(61);
    const Grid g(128);
    const auto H = hamiltonian_functional(air);
    for (int k = 0; k < 20; ++k) {
        const auto s = random_state(gen, g);
        const auto F1 = momentum_weight(gen.series(1.0).sample(g));
        const auto F2 = density_weight(gen.series(1.0).sample(g));
        const double lhs = lie_poisson_bracket(linear_combination(0.7, F1, -1.3, F2), H, s);
        const double rhs = 0.7 * lie_poisson_bracket(F1, H, s) - 1.3 * lie_poisson_bracket(F2, H, s);
        EXPECT_NEAR(lhs, rhs, 1e-12);
    }
}

TEST(Bracket, DensityWeightAgainstHamiltonian)
{
    const Grid g(256);
    const ConservativeState s{Field::sample(g, test::sine), Density(Field(g, 1.0))};
    const auto F = density_weight(Field::sample(g, test::cosine));
    EXPECT_NEAR(lie_poisson_bracket(F, hamiltonian_functional(gamma2), s), -std::numbers::pi, 2e-3);
}

TEST(EvolutionRate, MassIsConservedOnAnyState)
{
    SmoothFieldGenerator gen(67);
    const Grid g(256);
    const auto mass = density_weight(Field(g, 1.0));
    for (int k = 0; k < 20; ++k)
        EXPECT_LE(std::abs(evolution_rate(mass, random_state(gen, g), *air)), 1e-12);
}

TEST(EvolutionRate, MomentumVanishesOnSymmetricState)
{
    const Grid g(256);
    const ConservativeState s{Field(g), Density(Field::sample(g, [](double x) { return 1.0 + 0.01 * std::sin(x); }))};
    EXPECT_LE(std::abs(evolution_rate(momentum_weight(Field(g, 1.0)), s, *air)), 1e-12);
}

// With the centered stencil, integrate(m D(u) + rho D(dH/drho)) only telescopes
// in the continuum, so the momentum rate on a generic state is a second-order
// product-rule defect rather than round-off.
TEST(EvolutionRate, MomentumDefectOnGenericStateIsSecondOrder)
{
    auto rate = [](std::size_t n) {
        const Grid g(n);
        const ConservativeState s{Field::sample(g, [](double x) { return 0.5 * std::cos(x) + 0.2 * std::sin(3 * x); }),
                                  Density(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::sin(x) + 0.1 * std::cos(2 * x); }))};
        return std::abs(evolution_rate(momentum_weight(Field(g, 1.0)), s, *air));
    };
    const double coarse = rate(128), fine = rate(256);
    EXPECT_GT(coarse, 1e-10);
    EXPECT_NEAR(coarse / fine, 4.0, 0.4);
}

TEST(Jacobiator, RepeatedArgumentVanishes)
{
    const Grid g(64);
    const ConservativeState s{Field::sample(g, [](double x) { return 0.5 * std::cos(x); }),
                              Density(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::sin(x); }))};
    const auto F = momentum_weight(Field::sample(g, test::sine));
    const auto K = density_weight(Field::sample(g, test::cosine));
    EXPECT_LE(std::abs(jacobiator(F, F, K, s).value), 1e-7);
}

TEST(Jacobiator, ConstantWeightsVanish)
{
    const Grid g(64);
    const ConservativeState s{Field::sample(g, [](double x) { return 0.5 * std::cos(x); }),
                              Density(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::sin(x); }))};
    const Field one(g, 1.0);
    const auto r = jacobiator(momentum_weight(one), density_weight(one), momentum_weight(2.0 * one), s);
    EXPECT_LE(std::abs(r.value), 1e-10);
}

TEST(Jacobiator, SecondOrderUnderRefinement)
{
    auto cyclic = [](std::size_t n) {
        const Grid g(n);
        const ConservativeState s{Field::sample(g, [](double x) { return 0.5 * std::cos(x) + 0.2 * std::sin(3 * x); }),
                                  Density(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::sin(x) + 0.1 * std::cos(2 * x); }))};
        const auto F = momentum_weight(Field::sample(g, test::sine));
        const auto G = momentum_weight(Field::sample(g, [](double x) { return std::cos(2 * x); }));
        const auto K = density_weight(Field::sample(g, [](double x) { return std::sin(3 * x) + std::cos(x); }));
        const auto r = jacobiator(F, G, K, s);
        EXPECT_LT(r.step_discrepancy, 0.1 * std::abs(r.value));
        return std::abs(r.value);
    };
    const double ratio = cyclic(64) / cyclic(128);
    EXPECT_GE(ratio, 3.2);
    EXPECT_LE(ratio, 4.8);
}

TEST(FdGradient, MatchesAnalyticHamiltonianDerivatives)
{
    SmoothFieldGenerator gen(71);
    const Grid g(64);
    const auto s = random_state(gen, g);
    const auto [gm, grho] = fd_gradient([](const ConservativeState& x) { return hamiltonian_eval(x, *air); }, s, 1e-5);
    EXPECT_LT(max_abs_difference(gm, dH_dm(s)), 1e-7);
    EXPECT_LT(max_abs_difference(grho, dH_drho(s, *air)), 1e-7);
}
