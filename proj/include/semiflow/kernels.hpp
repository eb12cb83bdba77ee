#pragma once

#include <cstddef>
#include <span>

// Raw stencil kernels over periodic sample arrays.
//
// Every kernel exists twice with identical signatures: `serial` is the
// reference loop, `omp` is the OpenMP work-shared version used by the
// library. Both evaluate the same floating-point expression per node, so
// their outputs are bitwise identical. Inputs and outputs must not alias.

namespace semiflow::kernels {

/// Below this size the OpenMP kernels run on the calling thread.
inline constexpr std::size_t omp_min_points = 16384;

namespace serial {

/// out[i] = (f[i+1] - f[i-1]) * inv_2h, indices mod n.
void central_difference(std::span<const double> f, double inv_2h, std::span<double> out);

/// dv = -v Dv - D(enthalpy), drho = -D(rho v).
void euler_poincare_rate(std::span<const double> v,
                         std::span<const double> rho,
                         std::span<const double> enthalpy,
                         double inv_2h,
                         std::span<double> dv,
                         std::span<double> drho);

/// dm = -D(m u) - m Du - rho D(dh_drho), drho = -D(m).
void lie_poisson_rate(std::span<const double> m,
                      std::span<const double> u,
                      std::span<const double> rho,
                      std::span<const double> dh_drho,
                      double inv_2h,
                      std::span<double> dm,
                      std::span<double> drho);

/// dm = -D(flux), drho = -D(m).
void flux_form_rate(std::span<const double> m,
                    std::span<const double> flux,
                    double inv_2h,
                    std::span<double> dm,
                    std::span<double> drho);

/// out = -D(pressure) / rho0.
void material_rate(std::span<const double> pressure,
                   std::span<const double> rho0,
                   double inv_2h,
                   std::span<double> out);

/// Evaluates a periodic cubic Hermite interpolant with node values and slopes.
void hermite_evaluate(std::span<const double> values,
                      std::span<const double> slopes,
                      double spacing,
                      double period_jump,
                      std::span<const double> points,
                      std::span<double> out);

} // namespace serial

namespace omp {

void central_difference(std::span<const double> f, double inv_2h, std::span<double> out);

void euler_poincare_rate(std::span<const double> v,
                         std::span<const double> rho,
                         std::span<const double> enthalpy,
                         double inv_2h,
                         std::span<double> dv,
                         std::span<double> drho);

void lie_poisson_rate(std::span<const double> m,
                      std::span<const double> u,
                      std::span<const double> rho,
                      std::span<const double> dh_drho,
                      double inv_2h,
                      std::span<double> dm,
                      std::span<double> drho);

void flux_form_rate(std::span<const double> m,
                    std::span<const double> flux,
                    double inv_2h,
                    std::span<double> dm,
                    std::span<double> drho);

void material_rate(std::span<const double> pressure,
                   std::span<const double> rho0,
                   double inv_2h,
                   std::span<double> out);

void hermite_evaluate(std::span<const double> values,
                      std::span<const double> slopes,
                      double spacing,
                      double period_jump,
                      std::span<const double> points,
                      std::span<double> out);

} // namespace omp

} // namespace semiflow::kernels
