#pragma once

#include <span>
#include <vector>

#include "grushin/gtransform.hpp"
#include "grushin/quadrature.hpp"
#include "grushin/types.hpp"

namespace grushin {

struct HeatParams {
    HeatParams(double t, TypePair tp);
    double t;
    TypePair tp;
};

}  // namespace grushin

namespace grushin::heat {

// Hyperbolic factor in the closed form for alpha = beta = -1/2.
// cosh follows from I_{-1/2}; sinh is the alternative form, kept for comparison.
enum class HalfVariant { cosh, sinh };

// Constant in the kernel at (u, v) = (0, 0).
// corrected: 1/(2^{a+b} G(a+1) G(b+1)), the limit of J_b(y)/y^b and I_a(y)/y^a;
// as_printed: 2^{a+b} G(a+1) G(b+1).
enum class OriginConstant { corrected, as_printed };

struct KernelOptions {
    double abs_tol = 1e-14;
    int points_per_panel = 8;
};

// tau-rule for the kernel integral. It depends on the points only through
// r^2 + u^2 and s + v, so it is the same after swapping (r,s) and (u,v).
quad::HalfLineRule kernel_tau_rule(const HeatParams& hp, double r2u2, double freq, const KernelOptions& opts = {});

double heat_kernel(const HeatParams& hp, double r, double s, double u, double v, const KernelOptions& opts = {});

double heat_kernel_half(double t, double r, double s, double u, double v, HalfVariant variant = HalfVariant::cosh,
                        const KernelOptions& opts = {});

// K = (ru)^{-a-1/2} (sv)^{-b-1/2} K°, defined for u, v >= 0.
double heat_kernel_weighted(const HeatParams& hp, double r, double s, double u, double v,
                            const KernelOptions& opts = {});

double kernel_at_origin(const HeatParams& hp, double r, double s, OriginConstant c = OriginConstant::corrected,
                        const KernelOptions& opts = {});

struct ApplyOptions {
    double abs_tol = 1e-10;
    int points_per_panel = 8;
    double panel_width = 0.1;  // u and v panels when f has a support hint
};

// exp(-t G°) f at the points, by quadrature of the kernel against f.
std::vector<double> heat_apply(const HeatParams& hp, const PlaneFunction& f, std::span<const Point> points,
                               const ApplyOptions& opts = {});

// Same from samples f(u_i, v_j) on a product rule, row-major in (u, v).
std::vector<double> heat_apply_sampled(const HeatParams& hp, const quad::HalfLineRule& ur,
                                       const quad::HalfLineRule& vr, std::span<const double> samples,
                                       std::span<const Point> points, const ApplyOptions& opts = {});

// exp(-t G°) f through the transform: multiplier exp(-t Theta).
std::vector<double> heat_apply_spectral(const HeatParams& hp, const PlaneFunction& f, std::span<const Point> points,
                                        const gt::TransformOptions& opts = {});

// sum_{n<N} e^{-4 t tau n} l_n(sqrt(tau) u) l_n(sqrt(tau) r)
double mehler_sum(double alpha, double t, double tau, double r, double u, int n_terms);
// closed form of the full sum
double mehler_closed(double alpha, double t, double tau, double r, double u);

enum class Profile { F1, F2 };

// Diagonal profiles at t = 1/2:
// F1(s) = int J_b(tau s)^2 exp(-tau/tanh tau) I_a(tau/sinh tau) tau^2/sinh tau dtau,
// F2(r) = int J_b(tau)^2 exp(-tau r^2/tanh tau) I_a(tau r^2/sinh tau) tau^2/sinh tau dtau.
std::vector<double> diagonal_profile(Profile kind, const TypePair& tp, std::span<const double> xs,
                                     const KernelOptions& opts = {});

// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace grushin::heat
