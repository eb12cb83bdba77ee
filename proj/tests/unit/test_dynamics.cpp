#include <gtest/gtest.h>

#include <cmath>

#include "semiflow/dynamics.hpp"
#include "semiflow/random_fields.hpp"
#include "test_support.hpp"

using namespace semiflow;

namespace {

const auto gamma2 = make_polytropic(1.0, 2.0);
const auto air = make_polytropic(1.0, 1.4);

double nodal_error(const Field& f, double (*exact)(double))
{
    return max_abs_difference(f, Field::sample(f.grid(), exact));
}

SimulationConfig acoustic(std::size_t n, double dt, double t_end, Solver solver)
{
    SimulationConfig c;
    c.grid = Grid(n);
    c.law = air;
    c.dt = dt;
    c.t_end = t_end;
    c.solver = solver;
    c.ic_name = "acoustic";
    c.ic_params = {{"amplitude", 0.01}, {"wavenumber", 1.0}};
    c.output_stride = step_count(c);
    return c;
}

constexpr Solver all_solvers[] = {Solver::material, Solver::euler_poincare, Solver::lie_poisson, Solver::flux_form};

} // namespace

TEST(Rhs, ConstantStateIsAFixedPoint)
{
    const Grid g(64);
    const Field u(g, 0.3);
    const Density rho(Field(g, 1.7));
    const auto ep = rhs_euler_poincare({u, rho}, *air);
    EXPECT_EQ(ep.dv.max_abs(), 0.0);
    EXPECT_EQ(ep.drho.max_abs(), 0.0);
    const ConservativeState c{rho.rho() * u, rho};
    for (const auto& r : {rhs_lie_poisson(c, *air), rhs_flux_form(c, *air)}) {
        EXPECT_EQ(r.dm.max_abs(), 0.0);
        EXPECT_EQ(r.drho.max_abs(), 0.0);
    }
    EXPECT_EQ(rhs_material({Diffeo::identity(g), u, rho}, *air).max_abs(), 0.0);
}

TEST(Rhs, EulerPoincareExample)
{
    const Grid g(256);
    const auto r = rhs_euler_poincare({Field::sample(g, test::sine), Density(Field(g, 1.0))}, *gamma2);
    EXPECT_LT(nodal_error(r.dv, [](double x) { return -0.5 * std::sin(2 * x); }), 1e-3);
    EXPECT_LT(nodal_error(r.drho, [](double x) { return -std::cos(x); }), 1e-3);
}

TEST(Rhs, EulerPoincareMatchesPressureForm)
{
    SmoothFieldGenerator gen(81);
    const Grid g(256);
    for (int k = 0; k < 10; ++k) {
        const ReducedState s{gen.series(0.5).sample(g), sample_density(gen.density_series(0.3), g)};
        const auto r = rhs_euler_poincare(s, *air);
        const auto pressure_form = -(s.v * derivative(s.v)) - derivative(pressure_field(*air, s.rho.rho())) / s.rho.rho();
        EXPECT_LT(max_abs_difference(r.dv, pressure_form), 1e-3);
    }
}

TEST(Rhs, LiePoissonExample)
{
    const Grid g(256);
    const auto r = rhs_lie_poisson({Field::sample(g, test::sine), Density(Field(g, 1.0))}, *gamma2);
    EXPECT_LT(nodal_error(r.drho, [](double x) { return -std::cos(x); }), 1e-3);
    const auto eq = rhs_lie_poisson({Field(g), Density(Field(g, 2.0))}, *gamma2);
    EXPECT_EQ(eq.dm.max_abs(), 0.0);
}

TEST(Rhs, LiePoissonIsLocalizedBracket)
{
    SmoothFieldGenerator gen(83);
    const Grid g(256);
    const auto H = hamiltonian_functional(air);
    const ConservativeState s{gen.series(0.5).sample(g), sample_density(gen.density_series(0.3), g)};
    const auto rate = rhs_lie_poisson(s, *air);
    for (int k = 0; k < 20; ++k) {
        const auto w = gen.series(1.0).sample(g);
        EXPECT_NEAR(integrate(w * rate.dm), lie_poisson_bracket(weighted_linear_functional(WeightedOn::momentum, w), H, s), 1e-10);
        EXPECT_NEAR(integrate(w * rate.drho), lie_poisson_bracket(weighted_linear_functional(WeightedOn::density, w), H, s), 1e-10);
    }
}

TEST(Rhs, FluxFormExample)
{
    const Grid g(256);
    const auto r = rhs_flux_form({Field::sample(g, test::sine), Density(Field(g, 1.0))}, *gamma2);
    EXPECT_LT(nodal_error(r.dm, [](double x) { return -std::sin(2 * x); }), 1e-3);
}

TEST(Rhs, FluxFormAgreesWithLiePoissonAtSecondOrder)
{
    auto gap = [](std::size_t n) {
        const Grid g(n);
        const ConservativeState s{Field::sample(g, [](double x) { return 0.3 * std::sin(x) + 0.1 * std::cos(2 * x); }),
                                  Density(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::cos(x); }))};
        return max_abs_difference(rhs_flux_form(s, *air).dm, rhs_lie_poisson(s, *air).dm);
    };
    const double ratio = gap(128) / gap(256);
    EXPECT_GE(ratio, 3.2);
    EXPECT_LE(ratio, 4.8);
}

TEST(Rhs, MaterialExample)
{
    const Grid g(256);
    const Density rho0(Field::sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x); }));
    const auto a = rhs_material({Diffeo::identity(g), Field(g), rho0}, *gamma2);
    EXPECT_LT(nodal_error(a, [](double x) { return -0.2 * std::cos(x); }), 1e-3);
}

TEST(MaterialToSpatial, Examples)
{
    const Grid g(128);
    const Field v = Field::sample(g, test::sine);
    const Density rho0(Field::sample(g, [](double x) { return 1.0 + 0.2 * std::cos(x); }));
    const auto id = material_to_spatial({Diffeo::identity(g), v, rho0});
    EXPECT_LT(max_abs_difference(id.reduced.v, v), 1e-14);
    EXPECT_LT(max_abs_difference(id.reduced.rho.rho(), rho0.rho()), 1e-14);

    const Grid fine(1024);
    const auto eta = Diffeo::sample(fine, [](double x) { return x + 0.1 * std::sin(x); });
    const auto s = material_to_spatial({eta, Field(fine), Density(Field(fine, 1.0))});
    const auto inverse = invert_diffeo(eta);
    const auto expected = Field::sample(fine, [&](double x) { return 1.0 / (1.0 + 0.1 * std::cos(inverse(x))); });
    EXPECT_LT(max_abs_difference(s.reduced.rho.rho(), expected), 1e-6);
    EXPECT_NEAR(integrate(s.reduced.rho.rho()), integrate(Field(fine, 1.0)), 1e-6);
}

TEST(StepRk4, ZeroRateLeavesStateUnchanged)
{
    const Grid g(32);
    const ReducedState s{Field::sample(g, test::sine), Density(Field(g, 1.0))};
    const auto next = step_rk4([&](const ReducedState&) { return ReducedRate{Field(g), Field(g)}; }, s, 0.1);
    EXPECT_EQ(max_abs_difference(next.v, s.v), 0.0);
    EXPECT_EQ(max_abs_difference(next.rho.rho(), s.rho.rho()), 0.0);
}

TEST(StepRk4, LinearSystemLocalErrorIsFifthOrder)
{
    const Grid g(8);
    const double a = -1.3;
    auto rhs = [&](const ReducedState& s) { return ReducedRate{a * s.v, Field(g)}; };
    auto local_error = [&](double dt) {
        const ReducedState s{Field(g, 1.0), Density(Field(g, 1.0))};
        return std::abs(step_rk4(rhs, s, dt).v[0] - std::exp(a * dt));
    };
    EXPECT_LT(local_error(0.1), std::pow(std::abs(a) * 0.1, 5) / 100.0);
    EXPECT_NEAR(local_error(0.1) / local_error(0.05), 32.0, 2.0);
}

TEST(StepRk4, SelfConvergenceIsFourthOrder)
{
    auto final_u = [](double dt) { return simulate(acoustic(64, dt, 0.5, Solver::flux_form)).states.back().u; };
    const auto u1 = final_u(0.02), u2 = final_u(0.01), u3 = final_u(0.005);
    const double ratio = max_abs_difference(u1, u2) / max_abs_difference(u2, u3);
    EXPECT_NEAR(ratio, 16.0, 2.0);
}

TEST(Simulate, ConstantStateStaysPut)
{
    for (Solver solver : all_solvers) {
        SimulationConfig c;
        c.grid = Grid(64);
        c.law = air;
        c.dt = 1e-3;
        c.t_end = 0.05;
        c.output_stride = 10;
        c.solver = solver;
        c.ic_name = "constant";
        c.ic_params = {{"rho", 1.0}, {"u", 0.3}};
        const auto rec = simulate(c);
        ASSERT_EQ(rec.states.size(), 6u);
        for (const auto& snap : rec.states) {
            EXPECT_LT(max_abs_difference(snap.rho, rec.states.front().rho), 1e-12) << to_string(solver);
            EXPECT_LT(max_abs_difference(snap.u, rec.states.front().u), 1e-12) << to_string(solver);
        }
    }
}

TEST(Simulate, SnapshotCountFollowsStride)
{
    auto c = acoustic(64, 1e-2, 0.47, Solver::lie_poisson);
    for (std::size_t stride : {1u, 3u, 7u, 47u, 100u}) {
        c.output_stride = stride;
        const auto rec = simulate(c);
        EXPECT_EQ(rec.states.size(), 47 / stride + 1);
        EXPECT_EQ(rec.times.size(), rec.states.size());
        EXPECT_EQ(rec.diagnostics.size(), rec.states.size());
        EXPECT_DOUBLE_EQ(rec.times.back(), static_cast<double>(47 / stride * stride) * 1e-2);
    }
}

TEST(Simulate, AcousticConservation)
{
    for (Solver solver : {Solver::lie_poisson, Solver::flux_form}) {
        auto c = acoustic(256, 1e-3, 0.5, solver);
        c.output_stride = 50;
        const auto rec = simulate(c);
        const auto& d0 = rec.diagnostics.front();
        for (const auto& d : rec.diagnostics) {
            EXPECT_LE(std::abs(d.mass - d0.mass), 1e-12) << to_string(solver);
            EXPECT_LE(std::abs(d.energy - d0.energy), 1e-8) << to_string(solver);
        }
        if (solver == Solver::flux_form)
            for (const auto& d : rec.diagnostics)
                EXPECT_LE(std::abs(d.momentum - d0.momentum), 1e-12);
    }
}

TEST(Simulate, ValidationRejectsBadConfigs)
{
    auto c = acoustic(64, 1e-3, 0.1, Solver::flux_form);
    c.dt = 1.0;
    EXPECT_THROW(simulate(c), std::invalid_argument);
    c = acoustic(64, 1e-3, 0.1, Solver::flux_form);
    c.ic_name = "vortex";
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = acoustic(64, 1e-3, 0.1, Solver::flux_form);
    c.ic_params["sigma"] = 1.0;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = acoustic(64, 1e-3, 0.1, Solver::flux_form);
    c.output_stride = 0;
    EXPECT_THROW(validate(c), std::invalid_argument);
    EXPECT_THROW(parse_solver("leapfrog"), std::invalid_argument);
    EXPECT_EQ(parse_solver("material"), Solver::material);
}

TEST(Simulate, SteepeningFlowAbortsWithTimeStamp)
{
    auto c = acoustic(64, 1e-3, 20.0, Solver::flux_form);
    c.ic_params["amplitude"] = 0.9;
    const auto ic = make_initial_condition(c.grid, c.ic_name, c.ic_params);
    c.dt = 0.95 * cfl_limit(ic.u, ic.rho, *air, c.cfl_factor);
    c.output_stride = 1000;
    try {
        simulate(c);
        FAIL() << "expected the run to abort";
    } catch (const SolverAbort& e) {
        EXPECT_GT(e.time(), 0.0);
        EXPECT_LT(e.time(), c.t_end);
    }
}

TEST(CflLimit, Formula)
{
    const Grid g(64);
    const double c = std::sqrt(1.4);
    EXPECT_NEAR(cfl_limit(Field(g, 0.5), Density(Field(g, 1.0)), *air, 0.4), 0.4 * g.spacing() / (0.5 + c), 1e-15);
}

TEST(InitialConditions, Shapes)
{
    const Grid g(128);
    const auto a = make_initial_condition(g, "acoustic", {{"amplitude", 0.02}, {"wavenumber", 2.0}});
    EXPECT_NEAR(a.rho.rho()[16], 1.02, 1e-15);
    EXPECT_EQ(a.u.max_abs(), 0.0);
    const auto b = make_initial_condition(g, "gaussian_bump", {});
    EXPECT_NEAR(b.rho.rho()[64], 1.01, 1e-12);
    for (std::size_t j = 1; j < 64; ++j)
        EXPECT_NEAR(b.rho.rho()[64 + j], b.rho.rho()[64 - j], 1e-14);
    const auto k = make_initial_condition(g, "constant", {{"rho", 2.0}, {"u", -1.0}});
    EXPECT_EQ(k.rho.rho()[5], 2.0);
    EXPECT_EQ(k.u[5], -1.0);
}
