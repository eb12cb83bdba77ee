#pragma once

#include <string>
#include <vector>

#include "semiflow/dynamics.hpp"

namespace semiflow::cli {

struct FieldDistance
{
    double linf;
    double l2; ///< sqrt(h sum d_i^2)
};

FieldDistance field_distance(const Field& a, const Field& b);

struct PairDistance
{
    double t;
    std::string first;
    std::string second;
    FieldDistance rho;
    FieldDistance u;
};

struct NamedTrajectory
{
    std::string name;
    TrajectoryRecord record;
};

/// Distances for every pair (i < j) at every stored time. All records must share their times.
std::vector<PairDistance> pairwise_distances(const std::vector<NamedTrajectory>& runs);

} // namespace semiflow::cli
