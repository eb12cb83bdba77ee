#include "semiflow/kernels.hpp"
#include "stencil_ops.hpp"

namespace semiflow::kernels::serial {

using detail::central;
using detail::central_product;
using detail::neighbors;

void central_difference(std::span<const double> f, double inv_2h, std::span<double> out)
{
    const auto n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = central(f, neighbors(i, n), inv_2h);
}

void euler_poincare_rate(std::span<const double> v,
                         std::span<const double> rho,
                         std::span<const double> enthalpy,
                         double inv_2h,
                         std::span<double> dv,
                         std::span<double> drho)
{
    const auto n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto nb = neighbors(i, n);
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
    const auto n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto nb = neighbors(i, n);
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
    const auto n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto nb = neighbors(i, n);
        dm[i] = -central(flux, nb, inv_2h);
        drho[i] = -central(m, nb, inv_2h);
    }
}

void material_rate(std::span<const double> pressure,
                   std::span<const double> rho0,
                   double inv_2h,
                   std::span<double> out)
{
    const auto n = pressure.size();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = -central(pressure, neighbors(i, n), inv_2h) / rho0[i];
}

void hermite_evaluate(std::span<const double> values,
                      std::span<const double> slopes,
                      double spacing,
                      double period_jump,
                      std::span<const double> points,
                      std::span<double> out)
{
    for (std::size_t k = 0; k < points.size(); ++k)
        out[k] = detail::hermite_at(values, slopes, spacing, period_jump, points[k]);
}

} // namespace semiflow::kernels::serial
