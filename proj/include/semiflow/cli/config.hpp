#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semiflow/dynamics.hpp"

namespace semiflow::cli {

/// Malformed or out-of-range run configuration.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Strict run-configuration schema:
 *
 *   {
 *     "grid":   {"n": 256, "length": 6.283185307179586},
 *     "law":    {"kind": "polytropic", "kappa": 1.0, "gamma": 1.4},
 *     "time":   {"dt": 5e-4, "t_end": 0.5, "output_stride": 100},
 *     "solver": "flux_form",
 *     "ic":     {"name": "acoustic", "params": {"amplitude": 0.01}}
 *   }
 *
 * grid.n, time.dt, time.t_end, solver and ic.name are required. Unknown keys
 * at any level are rejected.
 */
SimulationConfig parse_run_config(const nlohmann::json& doc);
SimulationConfig parse_run_config(const std::string& text);
SimulationConfig load_run_config(const std::filesystem::path& path);

nlohmann::json to_json(const SimulationConfig& config);

} // namespace semiflow::cli
