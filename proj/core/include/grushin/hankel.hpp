#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grushin/quadrature.hpp"
#include "grushin/types.hpp"

namespace grushin {

struct HalfLineFunction {
    std::function<double(double)> eval;
    std::optional<Interval> support_hint;
    quad::TruncationPolicy decay_hint{};  // used when there is no support hint
};

// A rule that resolves f with panels no wider than max_width.
quad::HalfLineRule rule_for(const HalfLineFunction& f, double max_width, int points_per_panel = 8);

}  // namespace grushin

namespace grushin::hankel {

// (tau u)^{1/2} J_beta(tau u)
double kernel_liouville(double beta, double tau, double u);
// J_alpha(tau u) / (tau u)^alpha, finite at tau u = 0
double kernel_modified(double alpha, double tau, double u);

// H_alpha f(tau) = int f(u) J_alpha(tau u)/(tau u)^alpha u^{2 alpha + 1} du
std::vector<double> hankel_modified(Order alpha, const HalfLineFunction& f, std::span<const double> taus,
                                    int points_per_panel = 8);
// H°_beta f(tau) = int f(u) (tau u)^{1/2} J_beta(tau u) du
std::vector<double> hankel_liouville(Order beta, const HalfLineFunction& f, std::span<const double> taus,
                                     int points_per_panel = 8);

// Both transforms are involutions; these names only document intent.
inline std::vector<double> hankel_modified_inverse(Order alpha, const HalfLineFunction& f,
                                                   std::span<const double> taus, int points_per_panel = 8)
{
    return hankel_modified(alpha, f, taus, points_per_panel);
}
inline std::vector<double> hankel_liouville_inverse(Order beta, const HalfLineFunction& f,
                                                    std::span<const double> taus, int points_per_panel = 8)
{
    return hankel_liouville(beta, f, taus, points_per_panel);
}

// Transform of tabulated samples f(u_j) on a fixed rule.
std::vector<double> hankel_liouville_samples(Order beta, const quad::HalfLineRule& rule,
                                             std::span<const double> samples, std::span<const double> taus);

// Panel width used for output frequency tau.
double panel_width(double tau);

}  // namespace grushin::hankel
