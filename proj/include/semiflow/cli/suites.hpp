#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiflow/cli/report.hpp"

namespace semiflow::cli {

inline constexpr std::uint64_t default_seed = 20250101;

struct SuiteOptions
{
    std::vector<std::size_t> grids; ///< empty selects the suite default
    std::uint64_t seed = default_seed;
};

/// algebra, duality, lagrangian, bracket, convergence, constraints.
const std::vector<std::string>& suite_names();

std::vector<std::size_t> default_grids(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& options);

} // namespace semiflow::cli
