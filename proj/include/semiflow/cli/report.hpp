#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace semiflow::cli {

/// A measured value compared against an upper bound: passed iff value <= threshold.
struct Check
{
    std::string name;
    double value;
    double threshold;
    bool passed;
};

Check at_most(std::string name, double value, double threshold);

struct ConvergenceRow
{
    std::string quantity;
    double h;
    double error;
    std::optional<double> order; ///< against the previous row of the same quantity
};

struct VerificationReport
{
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::vector<ConvergenceRow> table;

    bool passed() const;
};

/// log2(coarse / fine) for consecutive grid levels; a halved spacing is assumed.
double observed_order(double coarse_error, double fine_error);

/**
 * Appends one row per level. Orders are attached only when at least three
 * levels are given.
 */
std::vector<double> append_convergence(VerificationReport& report,
                                       const std::string& quantity,
                                       const std::vector<double>& hs,
                                       const std::vector<double>& errors);

/// Keys: suite, checks[{name, value, threshold, passed}], table (only when non-empty).
nlohmann::json to_json(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

} // namespace semiflow::cli
