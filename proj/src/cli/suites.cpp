#include "semiflow/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "semiflow/cli/distances.hpp"
#include "semiflow/dynamics.hpp"
#include "semiflow/random_fields.hpp"

namespace semiflow::cli {

namespace {

std::string at_grid(const std::string& name, std::size_t n)
{
    return name + "[n=" + std::to_string(n) + "]";
}

std::string between(const std::string& name, std::size_t coarse, std::size_t fine)
{
    return name + "[" + std::to_string(coarse) + "->" + std::to_string(fine) + "]";
}

double relative_error(double a, double b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

/// Order checks |p - 2| <= 0.2 for each consecutive level pair.
void check_orders(VerificationReport& report,
                  const std::string& quantity,
                  const std::vector<std::size_t>& grids,
                  const std::vector<double>& errors)
{
    std::vector<double> hs;
    for (auto n : grids)
        hs.push_back(Grid(n).spacing());
    const auto orders = append_convergence(report, quantity, hs, errors);
    for (std::size_t i = 0; i < orders.size(); ++i)
        report.checks.push_back(at_most(between(quantity + "_order_deviation", grids[i], grids[i + 1]),
                                        std::abs(orders[i] - 2.0), 0.2));
}

// ============================================================================
// algebra
// ============================================================================

constexpr int algebra_samples = 20;

/// Diffeos draw from their own stream with slope bound 0.1.
constexpr int diffeo_modes = 5;
constexpr double diffeo_slope = 0.1;

void algebra_at(VerificationReport& report, std::size_t n, std::uint64_t seed)
{
    const Grid grid(n);
    SmoothFieldGenerator gen(seed);
    SmoothFieldGenerator maps(seed + 1, diffeo_modes);

    double antisym = 0.0, self = 0.0, scaling = 0.0, diamond_err = 0.0, lie_err = 0.0;
    double action_err = 0.0, inverse_err = 0.0, ad_star_group_err = 0.0;
    const Field x = Field::sample(grid, [](double s) { return s; });

    for (int k = 0; k < algebra_samples; ++k) {
        const Field xi = gen.series(1.0).sample(grid);
        const Field eta = gen.series(1.0).sample(grid);
        const Field f = gen.series(1.0).sample(grid);
        const Density mu = sample_density(gen.density_series(0.5), grid);
        const Field a = gen.series(1.0).sample(grid);
        const Diffeo g1 = sample_diffeo(maps.displacement_series(diffeo_slope), grid);
        const Diffeo g2 = sample_diffeo(maps.displacement_series(diffeo_slope), grid);

        antisym = std::max(antisym, (algebra_bracket(xi, eta) + algebra_bracket(eta, xi)).max_abs());
        self = std::max(self, algebra_bracket(xi, xi).max_abs());
        scaling = std::max(scaling, max_abs_difference(algebra_bracket(2.0 * xi, eta), 2.0 * algebra_bracket(xi, eta)));
        diamond_err = std::max(diamond_err, std::abs(pair_g(diamond(f, mu), xi) - pair_v(mu, lie_derivative_scalar(xi, f))));
        lie_err = std::max(lie_err, std::abs(pair_v(mu, lie_derivative_scalar(xi, f)) + integrate(f * lie_derivative_density(xi, mu))));

        action_err = std::max(action_err, max_abs_difference(pullback_scalar(compose(g1, g2), f),
                                                             pullback_scalar(g2, pullback_scalar(g1, f))));
        inverse_err = std::max(inverse_err, max_abs_difference(compose(g1, invert_diffeo(g1)).eta(), x));

        const OneFormDensity md(a, mu);
        ad_star_group_err = std::max(ad_star_group_err,
                                     std::abs(pair_g(ad_star_group(g1, md), xi) - pair_g(md, pushforward_vector(g1, xi))));
    }

    report.checks.push_back(at_most(at_grid("bracket_antisymmetry", n), antisym, 0.0));
    report.checks.push_back(at_most(at_grid("ad_xi_xi_zero", n), self, 0.0));
    report.checks.push_back(at_most(at_grid("bracket_scaling", n), scaling, 0.0));
    report.checks.push_back(at_most(at_grid("diamond_adjointness", n), diamond_err, 1e-12));
    report.checks.push_back(at_most(at_grid("lie_derivative_duality", n), lie_err, 1e-12));
    report.checks.push_back(at_most(at_grid("right_action_law", n), action_err, 1e-7));
    report.checks.push_back(at_most(at_grid("inverse_residual", n), inverse_err, 1e-10));
    report.checks.push_back(at_most(at_grid("ad_star_group_duality", n), ad_star_group_err, 1e-5));
}

VerificationReport algebra_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"algebra", seed, {}, {}};
    for (auto n : grids)
        algebra_at(report, n, seed);
    return report;
}

// ============================================================================
// duality
// ============================================================================

constexpr int duality_samples = 10;

struct DualitySample
{
    FourierSeries xi, eta, zeta, f, a, rho;
};

VerificationReport duality_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"duality", seed, {}, {}};
    SmoothFieldGenerator gen(seed);
    std::vector<DualitySample> samples;
    for (int k = 0; k < duality_samples; ++k)
        samples.push_back({gen.series(1.0), gen.series(1.0), gen.series(1.0), gen.series(1.0), gen.series(1.0),
                           gen.density_series(0.5)});

    std::vector<double> ad_errors, jacobi_errors;
    for (auto n : grids) {
        const Grid grid(n);
        double diamond_err = 0.0, lie_err = 0.0, ad_err = 0.0, jacobi_err = 0.0;
        for (const auto& s : samples) {
            const Field xi = s.xi.sample(grid), eta = s.eta.sample(grid), zeta = s.zeta.sample(grid);
            const Field f = s.f.sample(grid);
            const Density mu = sample_density(s.rho, grid);
            const OneFormDensity md(s.a.sample(grid), mu);

            diamond_err = std::max(diamond_err, std::abs(pair_g(diamond(f, mu), xi) - pair_v(mu, lie_derivative_scalar(xi, f))));
            lie_err = std::max(lie_err, std::abs(pair_v(mu, lie_derivative_scalar(xi, f)) + integrate(f * lie_derivative_density(xi, mu))));
            ad_err = std::max(ad_err, std::abs(pair_g(ad_star(xi, md), eta) - pair_g(md, algebra_bracket(xi, eta))));
            const Field cyclic = jacobi_lie_bracket(xi, jacobi_lie_bracket(eta, zeta))
                                 + jacobi_lie_bracket(eta, jacobi_lie_bracket(zeta, xi))
                                 + jacobi_lie_bracket(zeta, jacobi_lie_bracket(xi, eta));
            jacobi_err = std::max(jacobi_err, cyclic.max_abs());
        }
        report.checks.push_back(at_most(at_grid("diamond_adjointness", n), diamond_err, 1e-12));
        report.checks.push_back(at_most(at_grid("lie_derivative_duality", n), lie_err, 1e-12));
        ad_errors.push_back(ad_err);
        jacobi_errors.push_back(jacobi_err);
    }
    check_orders(report, "ad_star_duality", grids, ad_errors);
    check_orders(report, "jacobi_cyclic_sum", grids, jacobi_errors);
    return report;
}

// ============================================================================
// lagrangian
// ============================================================================

constexpr int variational_states = 20;

VerificationReport lagrangian_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"lagrangian", seed, {}, {}};
    const auto law = make_polytropic(1.0, 1.4);
    std::vector<double> invariance_errors, reduction_errors;
    for (auto n : grids) {
        const Grid grid(n);
        SmoothFieldGenerator gen(seed);
        SmoothFieldGenerator maps(seed + 1, diffeo_modes);
        double dv_err = 0.0, dmu_err = 0.0, hessian_err = 0.0, invariance_err = 0.0, reduction_err = 0.0;
        for (int k = 0; k < variational_states; ++k) {
            const ReducedState state{gen.series(0.5).sample(grid), sample_density(gen.density_series(0.3), grid)};
            const Field dv = gen.series(1.0).sample(grid);
            const Field drho = gen.series(0.5).sample(grid);
            auto l = [&](const ReducedState& s) { return reduced_lagrangian(s, *law); };

            auto perturb_v = [&](const ReducedState& s, double step) {
                return ReducedState{s.v + step * dv, s.rho};
            };
            auto perturb_rho = [&](const ReducedState& s, double step) {
                return ReducedState{s.v, Density(s.rho.rho() + step * drho)};
            };
            auto central = [&](auto&& perturb, double step) {
                return (l(perturb(state, step)) - l(perturb(state, -step))) / (2.0 * step);
            };
            auto richardson = [&](auto&& perturb) {
                const double coarse = central(perturb, 1e-4);
                const double fine = central(perturb, 1e-5);
                return fine + (fine - coarse) / 99.0;
            };

            dv_err = std::max(dv_err, relative_error(pair_g(dl_dv(state), dv), richardson(perturb_v)));
            dmu_err = std::max(dmu_err, relative_error(integrate(dl_dmu(state, *law) * drho), richardson(perturb_rho)));

            const Field r1 = gen.series(1.0).sample(grid), r2 = gen.series(1.0).sample(grid);
            hessian_err = std::max(hessian_err, std::abs(potential_hessian_form(*law, state.rho, r1, r2)
                                                         - potential_hessian_form(*law, state.rho, r2, r1)));

            const Diffeo eta = sample_diffeo(maps.displacement_series(diffeo_slope), grid);
            const Diffeo gamma = sample_diffeo(maps.displacement_series(diffeo_slope), grid);
            // Invariance data at acoustic scale; both defects are O(h^2) times the perturbation size.
            const ReducedState mild{gen.series(0.2).sample(grid), sample_density(gen.density_series(0.1), grid)};
            const MaterialState material{eta, pullback_scalar(eta, mild.v), pullback_density(eta, mild.rho)};
            const double L = unreduced_lagrangian(material, *law);
            reduction_err = std::max(reduction_err, std::abs(L - l(mild)));
            invariance_err = std::max(invariance_err, std::abs(unreduced_lagrangian(group_action(gamma, material), *law) - L));
        }
        report.checks.push_back(at_most(at_grid("dl_dv_relative_error", n), dv_err, 1e-6));
        report.checks.push_back(at_most(at_grid("dl_dmu_relative_error", n), dmu_err, 1e-6));
        report.checks.push_back(at_most(at_grid("hessian_symmetry", n), hessian_err, 1e-12));
        report.checks.push_back(at_most(at_grid("g_invariance", n), invariance_err, 1e-5));
        report.checks.push_back(at_most(at_grid("reduction_identity", n), reduction_err, 1e-5));
        invariance_errors.push_back(invariance_err);
        reduction_errors.push_back(reduction_err);
    }
    if (grids.size() > 1) {
        std::vector<double> hs;
        for (auto n : grids)
            hs.push_back(Grid(n).spacing());
        append_convergence(report, "g_invariance", hs, invariance_errors);
        append_convergence(report, "reduction_identity", hs, reduction_errors);
    }
    return report;
}

// ============================================================================
// bracket
// ============================================================================

constexpr int bracket_pairs = 50;

Functional random_functional(SmoothFieldGenerator& gen, const Grid& grid, const Functional& H, int k)
{
    switch (k % 3) {
    case 0:
        return weighted_linear_functional(WeightedOn::momentum, gen.series(1.0).sample(grid));
    case 1:
        return weighted_linear_functional(WeightedOn::density, gen.series(1.0).sample(grid));
    default:
        return H;
    }
}

ConservativeState random_state(SmoothFieldGenerator& gen, const Grid& grid)
{
    return {gen.series(0.5).sample(grid), sample_density(gen.density_series(0.3), grid)};
}

/// Fixed triple with a clean O(h^2) Jacobiator.
double jacobiator_at(std::size_t n)
{
    const Grid grid(n);
    auto field = [&](auto f) { return Field::sample(grid, f); };
    const auto F = weighted_linear_functional(WeightedOn::momentum, field([](double x) { return std::sin(x); }));
    const auto G = weighted_linear_functional(WeightedOn::momentum, field([](double x) { return std::cos(2.0 * x); }));
    const auto K = weighted_linear_functional(WeightedOn::density,
                                              field([](double x) { return std::sin(3.0 * x) + std::cos(x); }));
    const ConservativeState state{field([](double x) { return 0.5 * std::cos(x) + 0.2 * std::sin(3.0 * x); }),
                                  Density(field([](double x) { return 1.0 + 0.2 * std::sin(x) + 0.1 * std::cos(2.0 * x); }))};
    return jacobiator(F, G, K, state).value;
}

VerificationReport bracket_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"bracket", seed, {}, {}};
    const auto law = make_polytropic(1.0, 1.4);
    for (auto n : grids) {
        const Grid grid(n);
        SmoothFieldGenerator gen(seed);
        const auto H = hamiltonian_functional(law);
        const auto mass = weighted_linear_functional(WeightedOn::density, Field(grid, 1.0));
        const auto momentum = weighted_linear_functional(WeightedOn::momentum, Field(grid, 1.0));

        double antisym = 0.0, bilinear = 0.0, mass_rate = 0.0, momentum_rate = 0.0;
        for (int k = 0; k < bracket_pairs; ++k) {
            const auto state = random_state(gen, grid);
            const auto F = random_functional(gen, grid, H, k);
            const auto F2 = random_functional(gen, grid, H, k + 1);
            const auto G = random_functional(gen, grid, H, k + 2);
            const double a = 0.7, b = -1.3;
            antisym = std::max(antisym, std::abs(lie_poisson_bracket(F, G, state) + lie_poisson_bracket(G, F, state)));
            bilinear = std::max(bilinear, std::abs(lie_poisson_bracket(linear_combination(a, F, b, F2), G, state)
                                                   - (a * lie_poisson_bracket(F, G, state) + b * lie_poisson_bracket(F2, G, state))));
            mass_rate = std::max(mass_rate, std::abs(evolution_rate(mass, state, *law)));
            momentum_rate = std::max(momentum_rate, std::abs(evolution_rate(momentum, state, *law)));
        }
        report.checks.push_back(at_most(at_grid("antisymmetry", n), antisym, 1e-12));
        report.checks.push_back(at_most(at_grid("bilinearity", n), bilinear, 1e-12));
        report.checks.push_back(at_most(at_grid("mass_rate", n), mass_rate, 1e-12));
        report.checks.push_back(at_most(at_grid("momentum_rate", n), momentum_rate, 1e-12));

        double dm_err = 0.0, drho_err = 0.0;
        for (int k = 0; k < variational_states; ++k) {
            const auto state = random_state(gen, grid);
            const Field dm = gen.series(1.0).sample(grid);
            const Field drho = gen.series(0.5).sample(grid);
            auto richardson = [&](const Field& along_m, const Field& along_rho) {
                auto central = [&](double step) {
                    const ConservativeState plus{state.m + step * along_m, Density(state.rho.rho() + step * along_rho)};
                    const ConservativeState minus{state.m - step * along_m, Density(state.rho.rho() - step * along_rho)};
                    return (H(plus) - H(minus)) / (2.0 * step);
                };
                const double coarse = central(1e-4), fine = central(1e-5);
                return fine + (fine - coarse) / 99.0;
            };
            const Field zero(grid);
            dm_err = std::max(dm_err, relative_error(integrate(H.dF_dm(state) * dm), richardson(dm, zero)));
            drho_err = std::max(drho_err, relative_error(integrate(H.dF_drho(state) * drho), richardson(zero, drho)));
        }
        report.checks.push_back(at_most(at_grid("dH_dm_relative_error", n), dm_err, 1e-6));
        report.checks.push_back(at_most(at_grid("dH_drho_relative_error", n), drho_err, 1e-6));
    }

    const double j64 = jacobiator_at(64);
    const double j128 = jacobiator_at(128);
    report.table.push_back({"jacobiator", Grid(64).spacing(), std::abs(j64), std::nullopt});
    report.table.push_back({"jacobiator", Grid(128).spacing(), std::abs(j128), std::nullopt});
    report.checks.push_back(at_most("jacobiator_ratio_deviation[64->128]", std::abs(std::abs(j64 / j128) - 4.0), 0.8));
    return report;
}

// ============================================================================
// convergence
// ============================================================================

SimulationConfig acoustic_config(std::size_t n, double t_end)
{
    SimulationConfig c;
    c.grid = Grid(n);
    c.law = make_polytropic(1.0, 1.4);
    c.dt = 5e-4 * 256.0 / static_cast<double>(n);
    c.t_end = t_end;
    c.ic_name = "acoustic";
    c.ic_params = {{"amplitude", 0.01}, {"wavenumber", 1.0}};
    c.output_stride = step_count(c);
    return c;
}

TrajectoryRecord run_with(SimulationConfig c, Solver s)
{
    c.solver = s;
    return simulate(c);
}

/// Ratio checks |coarse / fine - 4| <= 0.8 for consecutive levels.
void check_ratios(VerificationReport& report,
                  const std::string& quantity,
                  const std::vector<std::size_t>& grids,
                  const std::vector<double>& errors)
{
    std::vector<double> hs;
    for (auto n : grids)
        hs.push_back(Grid(n).spacing());
    append_convergence(report, quantity, hs, errors);
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
        report.checks.push_back(at_most(between(quantity + "_ratio_deviation", grids[i], grids[i + 1]),
                                        std::abs(errors[i] / errors[i + 1] - 4.0), 0.8));
}

VerificationReport convergence_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"convergence", seed, {}, {}};
    const std::vector<std::pair<Solver, Solver>> pairs = {
        {Solver::euler_poincare, Solver::lie_poisson},
        {Solver::euler_poincare, Solver::flux_form},
        {Solver::lie_poisson, Solver::flux_form},
    };
    std::map<std::string, std::vector<double>> series;
    std::vector<double> material_errors;
    for (auto n : grids) {
        const auto config = acoustic_config(n, 0.5);
        std::map<Solver, TrajectoryRecord> runs;
        for (auto s : {Solver::euler_poincare, Solver::lie_poisson, Solver::flux_form})
            runs.emplace(s, run_with(config, s));
        for (const auto& [a, b] : pairs) {
            const auto& sa = runs.at(a).states.back();
            const auto& sb = runs.at(b).states.back();
            const std::string key = to_string(a) + "_vs_" + to_string(b);
            const double du = field_distance(sa.u, sb.u).linf;
            const double drho = field_distance(sa.rho, sb.rho).linf;
            report.checks.push_back(at_most(at_grid(key + "_linf_u", n), du, 5e-5));
            report.checks.push_back(at_most(at_grid(key + "_linf_rho", n), drho, 5e-5));
            series[key + "_linf_u"].push_back(du);
            series[key + "_linf_rho"].push_back(drho);
        }

        const auto quarter = acoustic_config(n, 0.25);
        const double dmat = field_distance(run_with(quarter, Solver::material).states.back().u,
                                           run_with(quarter, Solver::flux_form).states.back().u)
                                .linf;
        report.checks.push_back(at_most(at_grid("material_vs_flux_form_linf_u", n), dmat, 5e-4));
        material_errors.push_back(dmat);
    }
    for (const auto& [key, errors] : series)
        check_ratios(report, key, grids, errors);

    std::vector<double> hs;
    for (auto n : grids)
        hs.push_back(Grid(n).spacing());
    append_convergence(report, "material_vs_flux_form_linf_u", hs, material_errors);
    for (std::size_t i = 0; i + 1 < material_errors.size(); ++i)
        report.checks.push_back(at_most(between("material_vs_flux_form_order_shortfall", grids[i], grids[i + 1]),
                                        2.0 - observed_order(material_errors[i], material_errors[i + 1]), 0.2));
    return report;
}

// ============================================================================
// constraints
// ============================================================================

VerificationReport constraints_suite(const std::vector<std::size_t>& grids, std::uint64_t seed)
{
    VerificationReport report{"constraints", seed, {}, {}};
    const auto family = reference_variation_family();
    for (auto n : grids) {
        const Grid grid(n);
        const Density rho0(Field::sample(grid, [](double X) { return 1.0 + 0.2 * std::cos(X); }));
        const auto r = variation_constraint_check(grid, family, rho0, 0.5, 0.0);
        report.checks.push_back(at_most(at_grid("velocity_variation_residual", n), r.velocity_residual, 1e-4));
        report.checks.push_back(at_most(at_grid("density_variation_residual", n), r.density_residual, 1e-4));
    }
    return report;
}

using SuiteFn = std::function<VerificationReport(const std::vector<std::size_t>&, std::uint64_t)>;

const std::map<std::string, std::pair<SuiteFn, std::vector<std::size_t>>>& registry()
{
    static const std::map<std::string, std::pair<SuiteFn, std::vector<std::size_t>>> table = {
        {"algebra", {algebra_suite, {256}}},
        {"duality", {duality_suite, {64, 128, 256}}},
        {"lagrangian", {lagrangian_suite, {256}}},
        {"bracket", {bracket_suite, {256}}},
        {"convergence", {convergence_suite, {64, 128, 256}}},
        {"constraints", {constraints_suite, {512}}},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"algebra", "duality", "lagrangian", "bracket", "convergence", "constraints"};
    return names;
}

std::vector<std::size_t> default_grids(const std::string& suite)
{
    auto it = registry().find(suite);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return it->second.second;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options)
{
    auto it = registry().find(suite);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    const auto grids = options.grids.empty() ? it->second.second : options.grids;
    return it->second.first(grids, options.seed);
}

} // namespace semiflow::cli
