#include "semiflow/kernels.hpp"
#include "stencil_ops.hpp"

namespace semiflow::kernels::omp {

using detail::central;
using detail::central_product;
using detail::neighbors;

// Loop indices are signed for OpenMP; every node is written by exactly one
// iteration, so the static schedule needs no reduction.

void central_difference(std::span<const double> f, double inv_2h, std::span<double> out)
{
    const auto n = static_cast<long long>(f.size());
#pragma omp parallel for schedule(static) if (f.size() >= omp_min_points)
    for (long long i = 0; i < n; ++i)
        out[i] = central(f, neighbors(static_cast<std::size_t>(i), static_cast<std::size_t>(n)), inv_2h);
}

void euler_poincare_rate(std::span<const double> v,
                         std::span<const double> rho,
                         std::span<const double> enthalpy,
                         double inv_2h,
                         std::span<double> dv,
                         std::span<double> drho)
{
    const auto n = static_cast<long long>(v.size());
#pragma omp parallel for schedule(static) if (v.size() >= omp_min_points)
    for (long long i = 0; i < n; ++i) {
        const auto nb = neighbors(static_cast<std::size_t>(i), static_cast<std::size_t>(n));
        dv[i] = -v[i] * central(v, nb, inv_2h) - central(enthalpy, nb, inv_2h);
        drho[i] = -central_product(rho, v, nb, inv_2h);
    }
}

void lie_poisson_rate(std::span<const double> m,
                      std::span<const double> u,
                      std::span<const double> rho,
                      std::span<const double> dh_drho,
                      double inv_2h,
                      std::span<double> dm,
                      std::span<double> drho)
{
    const auto n = static_cast<long long>(m.size());
#pragma omp parallel for schedule(static) if (m.size() >= omp_min_points)
    for (long long i = 0; i < n; ++i) {
        const auto nb = neighbors(static_cast<std::size_t>(i), static_cast<std::size_t>(n));
        dm[i] = -central_product(m, u, nb, inv_2h) - m[i] * central(u, nb, inv_2h) - rho[i] * central(dh_drho, nb, inv_2h);
        drho[i] = -central(m, nb, inv_2h);
    }
}

void flux_form_rate(std::span<const double> m,
                    std::span<const double> flux,
                    double inv_2h,
                    std::span<double> dm,
                    std::span<double> drho)
{
    const auto n = static_cast<long long>(m.size());
#pragma omp parallel for schedule(static) if (m.size() >= omp_min_points)
    for (long long i = 0; i < n; ++i) {
        const auto nb = neighbors(static_cast<std::size_t>(i), static_cast<std::size_t>(n));
        dm[i] = -central(flux, nb, inv_2h);
        drho[i] = -central(m, nb, inv_2h);
    }
}

void material_rate(std::span<const double> pressure,
                   std::span<const double> rho0,
                   double inv_2h,
                   std::span<double> out)
{
    const auto n = static_cast<long long>(pressure.size());
#pragma omp parallel for schedule(static) if (pressure.size() >= omp_min_points)
    for (long long i = 0; i < n; ++i)
        out[i] = -central(pressure, neighbors(static_cast<std::size_t>(i), static_cast<std::size_t>(n)), inv_2h) / rho0[i];
}

void hermite_evaluate(std::span<const double> values,
                      std::span<const double> slopes,
                      double spacing,
                      double period_jump,
                      std::span<const double> points,
                      std::span<double> out)
{
    const auto count = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static) if (points.size() >= omp_min_points)
    for (long long k = 0; k < count; ++k)
        out[k] = detail::hermite_at(values, slopes, spacing, period_jump, points[k]);
}

} // namespace semiflow::kernels::omp
