#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace semiflow {

/// Uniform periodic grid on [0, L). Node i sits at x_i = i * spacing.
class Grid
{
public:
    explicit Grid(std::size_t n_points, double length = 2.0 * std::numbers::pi);

    std::size_t size() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return length_ / static_cast<double>(n_); }
    double node(std::size_t i) const { return static_cast<double>(i) * spacing(); }

    std::vector<double> nodes() const;

    /// Same grid with twice the points.
    Grid refined() const { return Grid(2 * n_, length_); }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t n_;
    double length_;
};

/// Sampled periodic real function on a Grid. Values are always finite.
class Field
{
public:
    explicit Field(const Grid& grid, double value = 0.0);
    Field(const Grid& grid, std::vector<double> values);

    template <class F>
    static Field sample(const Grid& grid, F&& f)
    {
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = f(grid.node(i));
        return Field(grid, std::move(v));
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    double max_abs() const;
    double min() const;
    double max() const;

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double a);

private:
    Grid grid_;
    std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator-(Field a);
Field operator*(Field a, double s);
Field operator*(double s, Field a);
/// Pointwise product.
Field operator*(const Field& a, const Field& b);
/// Pointwise quotient.
Field operator/(const Field& a, const Field& b);

/// Throws std::invalid_argument when the two fields live on different grids.
void require_same_grid(const Field& a, const Field& b);

/// Centered second-order periodic difference, out[i] = (f[i+1] - f[i-1]) / 2h.
Field derivative(const Field& f);

/// Rectangle rule h * sum f[i]; the trapezoid rule on a periodic grid.
double integrate(const Field& f);

/// L-infinity norm of a - b.
double max_abs_difference(const Field& a, const Field& b);

/**
 * Monotone piecewise-cubic periodic interpolant.
 *
 * Cubic Hermite on each cell with fourth-order centered node slopes. Where the
 * data is locally monotone (no sign change among the four secants around a
 * node) the slope is clipped into the Fritsch-Carlson box, so globally
 * monotone data gives a monotone interpolant with no overshoot. Near genuine
 * extrema the slopes are left alone and the interpolant stays O(h^4).
 *
 * `period_jump` supports lifted maps with f(x + L) = f(x) + jump, such as
 * circle diffeomorphisms (jump = L). Ordinary periodic fields use jump = 0.
 */
class PeriodicInterpolant
{
public:
    explicit PeriodicInterpolant(const Field& f, double period_jump = 0.0);

    double operator()(double x) const;

    /// Evaluates at many points; data-parallel for large inputs.
    std::vector<double> evaluate(std::span<const double> points) const;

    const Grid& grid() const { return grid_; }
    double period_jump() const { return jump_; }

private:
    Grid grid_;
    double jump_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

/// Monotone cubic periodic interpolation of f at arbitrary points (wrapped into [0, L)).
std::vector<double> interpolate(const Field& f, std::span<const double> points);

} // namespace semiflow
