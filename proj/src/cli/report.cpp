#include "semiflow/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace semiflow::cli {

Check at_most(std::string name, double value, double threshold)
{
    return {std::move(name), value, threshold, std::isfinite(value) && value <= threshold};
}

bool VerificationReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

double observed_order(double coarse_error, double fine_error)
{
    return std::log2(coarse_error / fine_error);
}

std::vector<double> append_convergence(VerificationReport& report,
                                       const std::string& quantity,
                                       const std::vector<double>& hs,
                                       const std::vector<double>& errors)
{
    if (hs.size() != errors.size())
        throw std::invalid_argument("convergence table needs one error per grid level");
    const bool with_order = hs.size() >= 3;
    std::vector<double> orders;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        ConvergenceRow row{quantity, hs[i], errors[i], std::nullopt};
        if (with_order && i > 0) {
            row.order = observed_order(errors[i - 1], errors[i]);
            orders.push_back(*row.order);
        }
        report.table.push_back(row);
    }
    return orders;
}

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks)
        doc["checks"].push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}});
    if (!report.table.empty()) {
        doc["table"] = nlohmann::json::array();
        for (const auto& row : report.table) {
            nlohmann::json r = {{"quantity", row.quantity}, {"h", row.h}, {"error", row.error}};
            if (row.order)
                r["order"] = *row.order;
            doc["table"].push_back(r);
        }
    }
    return doc;
}

namespace {

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace

std::string to_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << "suite: " << report.suite << "\n";
    out << "seed: " << report.seed << "\n";
    for (const auto& c : report.checks)
        out << (c.passed ? "  PASS  " : "  FAIL  ") << c.name << "  value=" << sci(c.value)
            << "  threshold=" << sci(c.threshold) << "\n";
    if (!report.table.empty()) {
        out << "convergence:\n";
        for (const auto& row : report.table) {
            out << "  " << row.quantity << "  h=" << sci(row.h) << "  error=" << sci(row.error);
            if (row.order) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", *row.order);
                out << "  order=" << buf;
            }
            out << "\n";
        }
    }
    out << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
    return out.str();
}

} // namespace semiflow::cli
