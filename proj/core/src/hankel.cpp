#include "grushin/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "grushin/specfun.hpp"

namespace grushin {

quad::HalfLineRule rule_for(const HalfLineFunction& f, double max_width, int points_per_panel)
{
    if (f.support_hint) {
        const Interval iv = *f.support_hint;
        const double lo = std::max(iv.lo, 0.0);
        // at least 16 panels across the support so compact bumps are resolved
        const double w = std::min({max_width, f.decay_hint.max_width, (iv.hi - lo) / 16.0});
        return quad::interval_rule(lo, iv.hi, w, points_per_panel, lo == 0.0 ? f.decay_hint.refine_levels : 0);
    }
    quad::TruncationPolicy p = f.decay_hint;
    p.max_width = std::min(p.max_width, max_width);
    return quad::build_rule(p, points_per_panel);
}

}  // namespace grushin

namespace grushin::hankel {

double kernel_liouville(double beta, double tau, double u)
{
    const double y = tau * u;
    if (y == 0.0)
        return std::pow(0.0, beta + 0.5) * specfun::bessel_j_normalized(beta, 0.0);
    return std::sqrt(y) * specfun::bessel_j(beta, y);
}

double kernel_modified(double alpha, double tau, double u)
{
    return specfun::bessel_j_normalized(alpha, tau * u);
}

double panel_width(double tau)
{
    if (tau <= 0.0)
        return std::numeric_limits<double>::infinity();
    return std::numbers::pi / (4.0 * tau);
}

std::vector<double> hankel_modified(Order alpha, const HalfLineFunction& f, std::span<const double> taus,
                                    int points_per_panel)
{
    const double a = alpha.value();
    std::vector<double> out;
    out.reserve(taus.size());
    for (const double tau : taus) {
        if (!(tau >= 0.0))
            throw DomainError("hankel_modified: tau must be >= 0");
        const auto rule = rule_for(f, panel_width(tau), points_per_panel);
        out.push_back(quad::integrate(
            [&](double u) { return f.eval(u) * kernel_modified(a, tau, u) * std::pow(u, 2.0 * a + 1.0); }, rule));
    }
    return out;
}

std::vector<double> hankel_liouville(Order beta, const HalfLineFunction& f, std::span<const double> taus,
                                     int points_per_panel)
{
    const double b = beta.value();
    std::vector<double> out;
    out.reserve(taus.size());
    for (const double tau : taus) {
        if (!(tau > 0.0))
            throw DomainError("hankel_liouville: tau must be > 0");
        const auto rule = rule_for(f, panel_width(tau), points_per_panel);
        out.push_back(quad::integrate([&](double u) { return f.eval(u) * kernel_liouville(b, tau, u); }, rule));
    }
    return out;
}

std::vector<double> hankel_liouville_samples(Order beta, const quad::HalfLineRule& rule,
                                             std::span<const double> samples, std::span<const double> taus)
{
    if (samples.size() != rule.size())
        throw DomainError("hankel_liouville_samples: sample count does not match rule");
    const double b = beta.value();
    std::vector<double> out;
    out.reserve(taus.size());
    for (const double tau : taus) {
        if (!(tau > 0.0))
            throw DomainError("hankel_liouville_samples: tau must be > 0");
        quad::Sum acc;
        for (std::size_t j = 0; j < rule.size(); ++j)
            if (samples[j] != 0.0)
                acc.add(rule.weights[j] * samples[j] * kernel_liouville(b, tau, rule.nodes[j]));
        out.push_back(acc.value());
    }
    return out;
}

}  // namespace grushin::hankel
