#pragma once

// Per-node expressions shared by the serial and OpenMP kernel loops. Keeping
// them in one place is what makes the two kernel families bitwise identical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace semiflow::kernels::detail {

struct Neighbors
{
    std::size_t left;
    std::size_t right;
};

inline Neighbors neighbors(std::size_t i, std::size_t n)
{
    return {i == 0 ? n - 1 : i - 1, i + 1 == n ? 0 : i + 1};
}

inline double central(std::span<const double> f, Neighbors nb, double inv_2h)
{
    return (f[nb.right] - f[nb.left]) * inv_2h;
}

inline double central_product(std::span<const double> a, std::span<const double> b, Neighbors nb, double inv_2h)
{
    return (a[nb.right] * b[nb.right] - a[nb.left] * b[nb.left]) * inv_2h;
}

inline double hermite_at(std::span<const double> values,
                         std::span<const double> slopes,
                         double spacing,
                         double period_jump,
                         double x)
{
    const auto n = static_cast<long long>(values.size());
    const double s = x / spacing;
    double cell = std::floor(s);
    double t = s - cell;
    const double nearest = std::round(s);
    if (std::abs(s - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s))) {
        cell = nearest;
        t = 0.0;
    }
    const auto k = static_cast<long long>(cell);
    long long wraps = k / n;
    long long j0 = k % n;
    if (j0 < 0) {
        j0 += n;
        wraps -= 1;
    }
    const long long j1 = j0 + 1 == n ? 0 : j0 + 1;
    const double y0 = values[j0] + period_jump * static_cast<double>(wraps);
    if (t == 0.0)
        return y0;
    const double y1 = values[j1] + period_jump * static_cast<double>(j0 + 1 == n ? wraps + 1 : wraps);

    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y0 + h01 * y1 + spacing * (h10 * slopes[j0] + h11 * slopes[j1]);
}

} // namespace semiflow::kernels::detail
