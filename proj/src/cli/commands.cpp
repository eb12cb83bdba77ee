#include "semiflow/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semiflow/cli/config.hpp"
#include "semiflow/cli/report.hpp"
#include "semiflow/cli/suites.hpp"

namespace semiflow::cli {

namespace {

std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            parts.push_back(item);
    return parts;
}

std::filesystem::path prepare_dir(const std::string& dir)
{
    std::filesystem::path p(dir);
    std::filesystem::create_directories(p);
    return p;
}

void warn_if_steepening(const SimulationConfig& config, std::ostream& err)
{
    const double index = steepening_index(config);
    if (index > 0.5)
        err << "warning: max|u_x| * t_end = " << index << "; characteristics may cross before t_end\n";
}

// ============================================================================
int cmd_simulate(const std::string& config_path,
                 const std::string& solver,
                 const std::string& out_dir,
                 std::ostream& out,
                 std::ostream& err)
{
    SimulationConfig config;
    try {
        config = load_run_config(config_path);
        if (!solver.empty())
            config.solver = parse_solver(solver);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    warn_if_steepening(config, err);

    TrajectoryRecord record;
    try {
        record = simulate(config);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_abort;
    }

    try {
        const auto dir = prepare_dir(out_dir);
        write_fields_csv(dir / "fields.csv", config.grid, record);
        write_diagnostics_csv(dir / "diagnostics.csv", record);
        const auto& first = record.diagnostics.front();
        const auto& last = record.diagnostics.back();
        out << "solver " << to_string(config.solver) << ": " << record.times.size() << " snapshots to t = "
            << record.times.back() << "\n"
            << "mass drift     " << last.mass - first.mass << "\n"
            << "momentum drift " << last.momentum - first.momentum << "\n"
            << "energy drift   " << last.energy - first.energy << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_abort;
    }
    return exit_ok;
}

int cmd_verify(const std::string& suite,
               const std::string& grids_text,
               const std::string& format,
               std::uint64_t seed,
               std::ostream& out,
               std::ostream& err)
{
    SuiteOptions options;
    options.seed = seed;
    try {
        default_grids(suite);
        for (const auto& part : split_commas(grids_text)) {
            std::size_t used = 0;
            const unsigned long long n = std::stoull(part, &used);
            if (used != part.size())
                throw std::invalid_argument("bad grid size '" + part + "'");
            Grid check(static_cast<std::size_t>(n));
            options.grids.push_back(check.size());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    VerificationReport report;
    try {
        report = run_suite(suite, options);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_abort;
    }
    if (format == "json") {
        err << "seed: " << report.seed << "\n";
        out << to_json(report).dump() << "\n";
    } else {
        out << to_text(report);
    }
    return report.passed() ? exit_ok : exit_abort;
}

int cmd_compare(const std::string& config_path,
                const std::string& solvers_text,
                double threshold,
                const std::string& out_dir,
                std::ostream& out,
                std::ostream& err)
{
    SimulationConfig config;
    std::vector<Solver> solvers;
    try {
        config = load_run_config(config_path);
        for (const auto& name : split_commas(solvers_text))
            solvers.push_back(parse_solver(name));
        if (solvers.size() < 2)
            throw std::invalid_argument("compare needs at least two solvers");
        if (!(threshold > 0.0))
            throw std::invalid_argument("threshold must be positive");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    warn_if_steepening(config, err);

    std::vector<PairDistance> distances;
    try {
        std::vector<NamedTrajectory> runs;
        for (std::size_t i = 0; i < solvers.size(); ++i) {
            auto c = config;
            c.solver = solvers[i];
            std::string name = to_string(solvers[i]);
            if (std::count(solvers.begin(), solvers.end(), solvers[i]) > 1)
                name += "#" + std::to_string(i + 1);
            runs.push_back({name, simulate(c)});
        }
        distances = pairwise_distances(runs);
        write_compare_csv(prepare_dir(out_dir) / "compare.csv", distances);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_abort;
    }

    const double t_final = distances.back().t;
    bool within = true;
    for (const auto& d : distances) {
        if (d.t != t_final)
            continue;
        const double worst = std::max(d.u.linf, d.rho.linf);
        within = within && worst <= threshold;
        out << d.first << " vs " << d.second << " at t = " << d.t << ": Linf(u) = " << d.u.linf
            << ", Linf(rho) = " << d.rho.linf << "\n";
    }
    out << (within ? "within" : "exceeds") << " threshold " << threshold << "\n";
    return within ? exit_ok : exit_abort;
}

} // namespace

// ============================================================================
void write_fields_csv(const std::filesystem::path& path, const Grid& grid, const TrajectoryRecord& record)
{
    auto out = open_output(path);
    out << "t,x,rho,u,m\n";
    for (std::size_t k = 0; k < record.times.size(); ++k) {
        const auto& s = record.states[k];
        const std::string t = g17(record.times[k]);
        for (std::size_t i = 0; i < grid.size(); ++i)
            out << t << ',' << g17(grid.node(i)) << ',' << g17(s.rho[i]) << ',' << g17(s.u[i]) << ',' << g17(s.m[i]) << '\n';
    }
}

void write_diagnostics_csv(const std::filesystem::path& path, const TrajectoryRecord& record)
{
    auto out = open_output(path);
    out << "t,mass,momentum,energy\n";
    for (std::size_t k = 0; k < record.times.size(); ++k) {
        const auto& d = record.diagnostics[k];
        out << g17(record.times[k]) << ',' << g17(d.mass) << ',' << g17(d.momentum) << ',' << g17(d.energy) << '\n';
    }
}

void write_compare_csv(const std::filesystem::path& path, const std::vector<PairDistance>& distances)
{
    auto out = open_output(path);
    out << "t,pair,linf_rho,l2_rho,linf_u,l2_u\n";
    for (const auto& d : distances)
        out << g17(d.t) << ',' << d.first << ':' << d.second << ',' << g17(d.rho.linf) << ',' << g17(d.rho.l2) << ','
            << g17(d.u.linf) << ',' << g17(d.u.l2) << '\n';
}

double steepening_index(const SimulationConfig& config)
{
    const auto ic = make_initial_condition(config.grid, config.ic_name, config.ic_params);
    // Riemann invariants u +- integral of c / rho steepen at rate |u_x| + |c_x|.
    std::vector<double> c(config.grid.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = std::sqrt(sound_speed_squared(*config.law, ic.rho.rho()[i]));
    const Field u_x = derivative(ic.u);
    const Field c_x = derivative(Field(config.grid, std::move(c)));
    double rate = 0.0;
    for (std::size_t i = 0; i < config.grid.size(); ++i)
        rate = std::max(rate, std::abs(u_x[i]) + std::abs(c_x[i]));
    return rate * config.t_end;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Semidirect-product barotropic flow: simulation and verification", "semiflow"};
    app.require_subcommand(1);

    std::string config_path, solver, out_dir = ".";
    auto* simulate_cmd = app.add_subcommand("simulate", "Run one solver and write fields.csv and diagnostics.csv");
    simulate_cmd->add_option("--config", config_path, "Run configuration (JSON)")->required();
    simulate_cmd->add_option("--solver", solver, "Override the configured solver");
    simulate_cmd->add_option("--out", out_dir, "Output directory");

    std::string suite, grids, format = "text";
    std::uint64_t seed = default_seed;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "algebra|duality|lagrangian|bracket|convergence|constraints")->required();
    verify_cmd->add_option("--grids", grids, "Comma-separated grid sizes, e.g. 64,128,256");
    verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--seed", seed, "Seed for the random smooth test fields");

    std::string compare_config, solvers, compare_out = ".";
    double threshold = 5e-5;
    auto* compare_cmd = app.add_subcommand("compare", "Run several solvers on one configuration and compare");
    compare_cmd->add_option("--config", compare_config, "Run configuration (JSON)")->required();
    compare_cmd->add_option("--solvers", solvers, "Comma-separated solver names")->required();
    compare_cmd->add_option("--threshold", threshold, "Final-time Linf bound on u and rho");
    compare_cmd->add_option("--out", compare_out, "Output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (simulate_cmd->parsed())
            return cmd_simulate(config_path, solver, out_dir, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(suite, grids, format, seed, out, err);
        return cmd_compare(compare_config, solvers, threshold, compare_out, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_abort;
    }
}

} // namespace semiflow::cli
