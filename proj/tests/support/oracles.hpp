#pragma once

// Independent reference values used only by tests.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {

// J_nu / I_nu by power series in long double, x moderate.
inline long double bessel_series(long double nu, long double x, int sign)
{
    const long double q = x * x / 4.0L;
    long double term = std::pow(x / 2.0L, nu) / std::tgamma(nu + 1.0L);
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= sign * q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum))
            break;
    }
    return sum;
}

inline double hermite_laguerre(int n, double alpha, double tau, double r)
{
    // direct formula: c_n L_n(tau r^2) e^{-tau r^2/2} (sqrt(tau) r)^{alpha+1/2} tau^{1/4}
    const double x = tau * r * r;
    double l0 = 1.0, l1 = 1.0 + alpha - x, l = n == 0 ? l0 : l1;
    for (int k = 1; k < n; ++k) {
        l = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l;
    }
    const double c = std::sqrt(2.0 * std::tgamma(n + 1.0) / std::tgamma(n + alpha + 1.0));
    return c * l * std::exp(-x / 2.0) * std::pow(std::sqrt(tau) * r, alpha + 0.5) * std::pow(tau, 0.25);
}

// Laguerre coefficients of r^{a+1/2} e^{-r^2/2}
inline double example1(double a, int n, double tau)
{
    const double c = std::sqrt(2.0 * std::tgamma(n + 1.0) / std::tgamma(n + a + 1.0));
    return std::pow(2.0, a + 1) / c * std::pow(std::sqrt(tau) / (1 + tau), a + 1) * std::pow((1 - tau) / (1 + tau), n);
}

// transform of r^{a+1/2} s^{b+1/2} e^{-(r^2+s^2)/2}
inline double example2(double a, double b, int n, double tau)
{
    return example1(a, n, tau) * std::pow(tau, b + 0.5) * std::exp(-tau * tau / 2);
}

// Heat kernel in Liouville form by adaptive Gauss-Kronrod over (0, inf):
// sqrt(rusv) int J_b(ts) J_b(tv) exp(-t(r^2+u^2)/(2 tanh 2Tt)) I_a(tru/sinh 2Tt) t^2/sinh 2Tt dt.
// Moderate arguments only (tru/sinh stays well inside double range).
inline double heat_kernel_quadrature(double a, double b, double T, double r, double s, double u, double v)
{
    auto f = [=](double tau) {
        const double y = 2.0 * T * tau;
        if (tau == 0.0 || y > 700.0)
            return 0.0;
        const double e = std::exp(-0.5 * tau * (r * r + u * u) / std::tanh(y));
        if (e == 0.0)
            return 0.0;
        return boost::math::cyl_bessel_j(b, tau * s) * boost::math::cyl_bessel_j(b, tau * v) * e *
               boost::math::cyl_bessel_i(a, tau * r * u / std::sinh(y)) * tau * tau / std::sinh(y);
    };
    const double inf = std::numeric_limits<double>::infinity();
    return std::sqrt(r * u * s * v) * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, inf, 20, 1e-13);
}

// Closed form at alpha = beta = -1/2 from J_{-1/2}(y) = sqrt(2/(pi y)) cos y and I_{-1/2}(x) = sqrt(2/(pi x)) cosh x.
inline double half_kernel_quadrature(double T, double r, double s, double u, double v)
{
    auto f = [=](double tau) {
        const double y = 2.0 * T * tau;
        if (tau == 0.0 || y > 700.0)
            return 0.0;
        const double q = tau / std::sinh(y);
        return std::cos(tau * s) * std::cos(tau * v) * std::exp(-0.5 * tau * (r * r + u * u) / std::tanh(y)) *
               std::cosh(r * u * q) * std::sqrt(q);
    };
    const double inf = std::numeric_limits<double>::infinity();
    return std::pow(2.0 / std::numbers::pi, 1.5) *
           boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, inf, 20, 1e-13);
}

}  // namespace oracle
