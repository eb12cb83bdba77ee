#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semiflow/algebra.hpp"

namespace semiflow {

/// Truncated real Fourier series on [0, L): mean + sum_k a_k cos(2 pi k x / L) + b_k sin(2 pi k x / L).
struct FourierSeries
{
    double length = 2.0 * std::numbers::pi;
    double mean = 0.0;
    std::vector<double> cos_coeffs; ///< index k - 1
    std::vector<double> sin_coeffs;

    double operator()(double x) const;
    double derivative(double x) const;

    Field sample(const Grid& grid) const;

    /// Upper bounds on |f - mean| and |f'|.
    double amplitude_bound() const;
    double slope_bound() const;

    FourierSeries scaled(double s) const;
};

/**
 * Seeded source of smooth periodic test data. Coefficients are uniform in
 * [-1, 1] scaled by 1/k^3 for modes k = 1..max_mode, then normalized so the
 * requested bound holds. The same series can be sampled on several grids.
 */
class SmoothFieldGenerator
{
public:
    explicit SmoothFieldGenerator(std::uint64_t seed, int max_mode = 5, double length = 2.0 * std::numbers::pi);

    /// Zero-mean series with |f| <= amplitude.
    FourierSeries series(double amplitude);

    /// 1 + series with |series| <= amplitude < 1.
    FourierSeries density_series(double amplitude);

    /// Periodic displacement d with |d'| <= slope < 1, so x + d(x) is a diffeo.
    FourierSeries displacement_series(double slope);

private:
    FourierSeries raw();

    std::mt19937_64 engine_;
    int max_mode_;
    double length_;
};

Density sample_density(const FourierSeries& s, const Grid& grid);
Diffeo sample_diffeo(const FourierSeries& displacement, const Grid& grid);

} // namespace semiflow
