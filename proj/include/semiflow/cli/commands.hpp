#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "semiflow/cli/distances.hpp"
#include "semiflow/dynamics.hpp"

namespace semiflow::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_abort = 2,
};

/// Entry point shared by the executable and the tests. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV writers; floats use 17 significant digits.
void write_fields_csv(const std::filesystem::path& path, const Grid& grid, const TrajectoryRecord& record);
void write_diagnostics_csv(const std::filesystem::path& path, const TrajectoryRecord& record);
void write_compare_csv(const std::filesystem::path& path, const std::vector<PairDistance>& distances);

/// max |u_x| t_end of the initial data; characteristics cross near 1.
double steepening_index(const SimulationConfig& config);

} // namespace semiflow::cli
