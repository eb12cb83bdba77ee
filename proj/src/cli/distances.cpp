#include "semiflow/cli/distances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semiflow::cli {

FieldDistance field_distance(const Field& a, const Field& b)
{
    const Field d = a - b;
    return {d.max_abs(), std::sqrt(integrate(d * d))};
}

std::vector<PairDistance> pairwise_distances(const std::vector<NamedTrajectory>& runs)
{
    for (const auto& r : runs)
        if (r.record.times != runs.front().record.times)
            throw std::invalid_argument("trajectories '" + runs.front().name + "' and '" + r.name
                                        + "' were stored at different times");
    std::vector<PairDistance> out;
    if (runs.empty())
        return out;
    const auto& times = runs.front().record.times;
    for (std::size_t k = 0; k < times.size(); ++k)
        for (std::size_t i = 0; i < runs.size(); ++i)
            for (std::size_t j = i + 1; j < runs.size(); ++j) {
                const auto& a = runs[i].record.states[k];
                const auto& b = runs[j].record.states[k];
                out.push_back({times[k], runs[i].name, runs[j].name, field_distance(a.rho, b.rho), field_distance(a.u, b.u)});
            }
    return out;
}

} // namespace semiflow::cli
