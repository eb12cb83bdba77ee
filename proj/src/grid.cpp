#include "semiflow/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "semiflow/kernels.hpp"

namespace semiflow {

Grid::Grid(std::size_t n_points, double length)
    : n_(n_points)
    , length_(length)
{
    if (n_points < 8 || n_points % 2 != 0)
        throw std::invalid_argument("grid needs an even number of points >= 8, got " + std::to_string(n_points));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid length must be positive and finite");
}

std::vector<double> Grid::nodes() const
{
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i)
        x[i] = node(i);
    return x;
}

// ============================================================================
Field::Field(const Grid& grid, double value)
    : Field(grid, std::vector<double>(grid.size(), value))
{
}

Field::Field(const Grid& grid, std::vector<double> values)
    : grid_(grid)
    , values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw std::invalid_argument("field has " + std::to_string(values_.size()) + " values for a grid of " +
                                    std::to_string(grid_.size()) + " points");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw std::domain_error("non-finite field value at node " + std::to_string(i));
}

double Field::max_abs() const
{
    double r = 0.0;
    for (double v : values_)
        r = std::max(r, std::abs(v));
    return r;
}

double Field::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Field::max() const { return *std::max_element(values_.begin(), values_.end()); }

Field& Field::operator+=(const Field& other)
{
    require_same_grid(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

Field& Field::operator-=(const Field& other)
{
    require_same_grid(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= other.values_[i];
    return *this;
}

Field& Field::operator*=(double a)
{
    for (double& v : values_)
        v *= a;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator-(Field a) { return a *= -1.0; }
Field operator*(Field a, double s) { return a *= s; }
Field operator*(double s, Field a) { return a *= s; }

Field operator*(const Field& a, const Field& b)
{
    require_same_grid(a, b);
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i] * b[i];
    return Field(a.grid(), std::move(v));
}

Field operator/(const Field& a, const Field& b)
{
    require_same_grid(a, b);
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i] / b[i];
    return Field(a.grid(), std::move(v));
}

void require_same_grid(const Field& a, const Field& b)
{
    if (a.grid() != b.grid())
        throw std::invalid_argument("fields live on different grids");
}

Field derivative(const Field& f)
{
    std::vector<double> out(f.size());
    kernels::omp::central_difference(f.values(), 0.5 / f.grid().spacing(), out);
    return Field(f.grid(), std::move(out));
}

double integrate(const Field& f)
{
    // Neumaier-compensated sum; conservation diagnostics sit near round-off.
    double sum = 0.0;
    double carry = 0.0;
    for (double v : f.values()) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    return f.grid().spacing() * (sum + carry);
}

double max_abs_difference(const Field& a, const Field& b)
{
    require_same_grid(a, b);
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

// ============================================================================
namespace {

std::vector<double> limited_slopes(std::span<const double> values, double h, double jump)
{
    const auto n = static_cast<long long>(values.size());
    auto lifted = [&](long long j) {
        long long wraps = 0;
        while (j < 0) {
            j += n;
            --wraps;
        }
        while (j >= n) {
            j -= n;
            ++wraps;
        }
        return values[j] + jump * static_cast<double>(wraps);
    };
    auto secant = [&](long long j) { return (lifted(j + 1) - lifted(j)) / h; };

    std::vector<double> slopes(values.size());
    for (long long i = 0; i < n; ++i) {
        double m = (-lifted(i + 2) + 8.0 * lifted(i + 1) - 8.0 * lifted(i - 1) + lifted(i - 2)) / (12.0 * h);

        const double window[] = {secant(i - 2), secant(i - 1), secant(i), secant(i + 1)};
        const bool non_decreasing = std::all_of(std::begin(window), std::end(window), [](double d) { return d >= 0.0; });
        const bool non_increasing = std::all_of(std::begin(window), std::end(window), [](double d) { return d <= 0.0; });

        if (non_decreasing || non_increasing) {
            const double left = window[1];
            const double right = window[2];
            if (left == 0.0 || right == 0.0) {
                m = 0.0;
            } else {
                const double sign = right > 0.0 ? 1.0 : -1.0;
                const double bound = 3.0 * std::min(std::abs(left), std::abs(right));
                m = m * sign < 0.0 ? 0.0 : sign * std::min(std::abs(m), bound);
            }
        }
        slopes[i] = m;
    }
    return slopes;
}

} // namespace

PeriodicInterpolant::PeriodicInterpolant(const Field& f, double period_jump)
    : grid_(f.grid())
    , jump_(period_jump)
    , values_(f.values().begin(), f.values().end())
    , slopes_(limited_slopes(values_, grid_.spacing(), period_jump))
{
}

double PeriodicInterpolant::operator()(double x) const
{
    double out = 0.0;
    kernels::serial::hermite_evaluate(values_, slopes_, grid_.spacing(), jump_, std::span(&x, 1), std::span(&out, 1));
    return out;
}

std::vector<double> PeriodicInterpolant::evaluate(std::span<const double> points) const
{
    std::vector<double> out(points.size());
    kernels::omp::hermite_evaluate(values_, slopes_, grid_.spacing(), jump_, points, out);
    return out;
}

std::vector<double> interpolate(const Field& f, std::span<const double> points)
{
    return PeriodicInterpolant(f).evaluate(points);
}

} // namespace semiflow
