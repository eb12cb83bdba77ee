#include "semiflow/random_fields.hpp"

#include <cmath>
#include <stdexcept>

namespace semiflow {

double FourierSeries::operator()(double x) const
{
    const double w = 2.0 * std::numbers::pi / length;
    double s = mean;
    for (std::size_t k = 1; k <= cos_coeffs.size(); ++k)
        s += cos_coeffs[k - 1] * std::cos(w * k * x) + sin_coeffs[k - 1] * std::sin(w * k * x);
    return s;
}

double FourierSeries::derivative(double x) const
{
    const double w = 2.0 * std::numbers::pi / length;
    double s = 0.0;
    for (std::size_t k = 1; k <= cos_coeffs.size(); ++k)
        s += w * k * (-cos_coeffs[k - 1] * std::sin(w * k * x) + sin_coeffs[k - 1] * std::cos(w * k * x));
    return s;
}

Field FourierSeries::sample(const Grid& grid) const
{
    return Field::sample(grid, *this);
}

double FourierSeries::amplitude_bound() const
{
    double b = 0.0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
        b += std::abs(cos_coeffs[k]) + std::abs(sin_coeffs[k]);
    return b;
}

double FourierSeries::slope_bound() const
{
    const double w = 2.0 * std::numbers::pi / length;
    double b = 0.0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
        b += w * static_cast<double>(k + 1) * (std::abs(cos_coeffs[k]) + std::abs(sin_coeffs[k]));
    return b;
}

FourierSeries FourierSeries::scaled(double s) const
{
    FourierSeries out = *this;
    out.mean *= s;
    for (auto& c : out.cos_coeffs)
        c *= s;
    for (auto& c : out.sin_coeffs)
        c *= s;
    return out;
}

// ============================================================================
SmoothFieldGenerator::SmoothFieldGenerator(std::uint64_t seed, int max_mode, double length)
    : engine_(seed)
    , max_mode_(max_mode)
    , length_(length)
{
    if (max_mode < 1)
        throw std::invalid_argument("need at least one Fourier mode");
}

FourierSeries SmoothFieldGenerator::raw()
{
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    FourierSeries s;
    s.length = length_;
    for (int k = 1; k <= max_mode_; ++k) {
        const double decay = 1.0 / (static_cast<double>(k) * k * k);
        s.cos_coeffs.push_back(coeff(engine_) * decay);
        s.sin_coeffs.push_back(coeff(engine_) * decay);
    }
    return s;
}

FourierSeries SmoothFieldGenerator::series(double amplitude)
{
    auto s = raw();
    return s.scaled(amplitude / s.amplitude_bound());
}

FourierSeries SmoothFieldGenerator::density_series(double amplitude)
{
    if (!(amplitude > 0.0 && amplitude < 1.0))
        throw std::invalid_argument("density perturbation must lie in (0, 1)");
    auto s = series(amplitude);
    s.mean = 1.0;
    return s;
}

FourierSeries SmoothFieldGenerator::displacement_series(double slope)
{
    if (!(slope > 0.0 && slope < 1.0))
        throw std::invalid_argument("displacement slope must lie in (0, 1)");
    auto s = raw();
    return s.scaled(slope / s.slope_bound());
}

Density sample_density(const FourierSeries& s, const Grid& grid)
{
    return Density(s.sample(grid));
}

Diffeo sample_diffeo(const FourierSeries& displacement, const Grid& grid)
{
    return Diffeo::sample(grid, [&](double x) { return x + displacement(x); });
}

} // namespace semiflow
