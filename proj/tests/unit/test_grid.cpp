#include <gtest/gtest.h>

#include <random>

#include "semiflow/grid.hpp"
#include "test_support.hpp"

using namespace semiflow;
using semiflow::test::sampled;
using semiflow::test::two_pi;

TEST(Grid, RejectsOddOrSmallSizes)
{
    EXPECT_THROW(Grid(6), std::invalid_argument);
    EXPECT_THROW(Grid(9), std::invalid_argument);
    EXPECT_THROW(Grid(16, 0.0), std::invalid_argument);
    EXPECT_NO_THROW(Grid(8));
}

TEST(Grid, SpacingTimesSizeIsLength)
{
    const Grid g(96, 3.0);
    EXPECT_NEAR(g.spacing() * g.size(), 3.0, 1e-15);
    EXPECT_EQ(g.refined().size(), 192u);
}

TEST(Field, RejectsNonFiniteValues)
{
    const Grid g(8);
    std::vector<double> v(8, 1.0);
    v[3] = std::nan("");
    EXPECT_THROW(Field(g, v), std::domain_error);
    EXPECT_THROW(Field(g, std::vector<double>(7, 1.0)), std::invalid_argument);
}

TEST(Field, OperationsOnDifferentGridsThrow)
{
    EXPECT_THROW(Field(Grid(8), 1.0) + Field(Grid(16), 1.0), std::invalid_argument);
}

TEST(Derivative, ConstantGivesZero)
{
    EXPECT_EQ(derivative(Field(Grid(64), 5.0)).max_abs(), 0.0);
}

TEST(Derivative, SineMatchesCosineWithinStencilBound)
{
    const auto d = derivative(sampled(256, semiflow::test::sine));
    const auto exact = sampled(256, semiflow::test::cosine);
    const double h = Grid(256).spacing();
    EXPECT_LE(max_abs_difference(d, exact), h * h / 6.0 * 1.0001);
    EXPECT_LE(max_abs_difference(d, exact), 1e-3);
}

TEST(Derivative, AnnihilatesNyquistMode)
{
    const Grid g(32);
    std::vector<double> v(32);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = i % 2 == 0 ? 1.0 : -1.0;
    EXPECT_EQ(derivative(Field(g, v)).max_abs(), 0.0);
}

TEST(Integrate, Constants)
{
    EXPECT_NEAR(integrate(Field(Grid(64), 1.0)), two_pi, 1e-14);
}

TEST(Integrate, SineVanishes)
{
    EXPECT_NEAR(integrate(sampled(128, semiflow::test::sine)), 0.0, 1e-14);
}

TEST(Integrate, SineSquaredIsPi)
{
    const auto f = sampled(64, [](double x) { return std::sin(x) * std::sin(x); });
    EXPECT_NEAR(integrate(f), std::numbers::pi, 1e-12);
    // A much finer quadrature agrees with the coarse one.
    const auto fine = sampled(4096, [](double x) { return std::sin(x) * std::sin(x); });
    EXPECT_NEAR(integrate(f), integrate(fine), 1e-12);
}

namespace {

Field random_field(std::mt19937_64& rng, std::size_t n, double scale)
{
    std::normal_distribution<double> d(0.0, scale);
    std::vector<double> v(n);
    for (auto& x : v)
        x = d(rng);
    return Field(Grid(n), v);
}

} // namespace

TEST(DerivativeProperty, SkewAdjointUnderIntegration)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 8 + 2 * (trial % 60);
        const auto f = random_field(rng, n, 3.0);
        const auto g = random_field(rng, n, 0.5);
        const double defect = integrate(f * derivative(g)) + integrate(g * derivative(f));
        EXPECT_LE(std::abs(defect), 1e-12 * f.max_abs() * g.max_abs() * static_cast<double>(n));
    }
}

TEST(DerivativeProperty, DiscreteStokes)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial)
        EXPECT_LE(std::abs(integrate(derivative(random_field(rng, 64, 10.0)))), 1e-12);
}

TEST(Interpolate, ReproducesNodes)
{
    const auto f = sampled(64, [](double x) { return std::exp(std::sin(x)); });
    const auto nodes = f.grid().nodes();
    const auto at = interpolate(f, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        EXPECT_EQ(at[i], f[i]);
}

TEST(Interpolate, SineAtMidpoints)
{
    const auto f = sampled(256, semiflow::test::sine);
    std::vector<double> mids;
    for (std::size_t i = 0; i < 256; ++i)
        mids.push_back(f.grid().node(i) + 0.5 * f.grid().spacing());
    const auto at = interpolate(f, mids);
    for (std::size_t i = 0; i < mids.size(); ++i)
        EXPECT_NEAR(at[i], std::sin(mids[i]), 1e-8);
}

TEST(Interpolate, ConstantsExactAnywhere)
{
    const Field c(Grid(16), 2.75);
    const std::vector<double> pts = {-13.2, 0.0, 0.1234, 3.0, 6.28, 100.5};
    for (double v : interpolate(c, pts))
        EXPECT_EQ(v, 2.75);
}

TEST(Interpolate, WrapsPeriodically)
{
    const auto f = sampled(128, semiflow::test::cosine);
    const std::vector<double> pts = {0.3, 0.3 + two_pi, 0.3 - 2.0 * two_pi};
    const auto at = interpolate(f, pts);
    EXPECT_NEAR(at[0], at[1], 1e-13);
    EXPECT_NEAR(at[0], at[2], 1e-13);
}

TEST(Interpolate, LinearDataExactBetweenNodes)
{
    // Lifted linear map x -> 2x + 1 with jump 2L, the degree-one case on the circle.
    const Grid g(32);
    const auto f = Field::sample(g, [](double x) { return 2.0 * x + 1.0; });
    const PeriodicInterpolant p(f, 2.0 * g.length());
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 20.0);
    for (int k = 0; k < 200; ++k) {
        const double x = u(rng);
        EXPECT_NEAR(p(x), 2.0 * x + 1.0, 1e-11 * std::max(1.0, std::abs(x)));
    }
}

TEST(InterpolateProperty, MonotoneDataHasNoOvershoot)
{
    std::mt19937_64 rng(21);
    std::exponential_distribution<double> step(1.0);
    std::bernoulli_distribution flat(0.3);
    std::uniform_real_distribution<double> where(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Grid g(32);
        std::vector<double> v(32);
        double acc = 0.0;
        for (auto& x : v) {
            x = acc;
            acc += flat(rng) ? 0.0 : step(rng);
        }
        // Monotone lifted data; the jump closes the period.
        const double jump = acc + step(rng);
        const PeriodicInterpolant p(Field(g, v), jump);
        double prev = p(0.0);
        for (int k = 1; k <= 2000; ++k) {
            const double x = g.length() * k / 2000.0;
            const double y = p(x);
            EXPECT_GE(y, prev - 1e-12);
            prev = y;
        }
        // Within each cell the interpolant stays between its end values.
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            const double y = p(g.node(i) + where(rng) * g.spacing());
            EXPECT_GE(y, v[i] - 1e-12);
            EXPECT_LE(y, v[i + 1] + 1e-12);
        }
    }
}

TEST(Interpolate, FourthOrderOnSmoothData)
{
    auto error = [](std::size_t n) {
        const auto f = sampled(n, [](double x) { return std::sin(x) + 0.3 * std::cos(3.0 * x); });
        std::vector<double> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(f.grid().node(i) + 0.37 * f.grid().spacing());
        const auto at = interpolate(f, pts);
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            e = std::max(e, std::abs(at[i] - (std::sin(pts[i]) + 0.3 * std::cos(3.0 * pts[i]))));
        return e;
    };
    const double ratio = error(64) / error(128);
    EXPECT_GT(ratio, 12.0);
}
