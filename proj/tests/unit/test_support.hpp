#pragma once

#include <cmath>
#include <numbers>

#include "semiflow/grid.hpp"

namespace semiflow::test {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

template <class F>
Field sampled(std::size_t n, F f)
{
    return Field::sample(Grid(n), f);
}

inline double sine(double x) { return std::sin(x); }
inline double cosine(double x) { return std::cos(x); }

} // namespace semiflow::test
