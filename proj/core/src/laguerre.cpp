#include "grushin/laguerre.hpp"

#include <cmath>
#include <numbers>

#include "grushin/specfun.hpp"

namespace grushin::laguerre {

double panel_width(double alpha, double tau, int n_max)
{
    const double lam = 2.0 * (2.0 * (n_max - 1) + alpha + 1.0);
    return std::numbers::pi / std::sqrt(lam * tau);
}

LaguerreCoeffs laguerre_analyze_samples(Order alpha, double tau, const quad::HalfLineRule& rule,
                                        std::span<const double> samples, int n_max)
{
    if (n_max < 1)
        throw DomainError("laguerre_analyze: n_max must be >= 1");
    if (!(tau > 0.0))
        throw DomainError("laguerre_analyze: tau must be > 0");
    if (samples.size() != rule.size())
        throw DomainError("laguerre_analyze: sample count does not match rule");
    const auto n = static_cast<std::size_t>(n_max);
    std::vector<quad::Sum> acc(n);
    std::vector<double> seq(n);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double fw = samples[i] * rule.weights[i];
        if (!std::isfinite(fw))
            throw quad::QuadratureError("laguerre_analyze: non-finite sample", rule.nodes[i]);
        if (fw == 0.0)
            continue;
        specfun::laguerre_fn_sequence(alpha, tau, rule.nodes[i], seq);
        for (std::size_t k = 0; k < n; ++k)
            acc[k].add(fw * seq[k]);
    }
    LaguerreCoeffs c;
    c.alpha = alpha;
    c.tau = tau;
    c.values.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        c.values[k] = acc[k].value();
    return c;
}

LaguerreCoeffs laguerre_analyze(Order alpha, double tau, const HalfLineFunction& f, int n_max, int points_per_panel)
{
    if (!(tau > 0.0))
        throw DomainError("laguerre_analyze: tau must be > 0");
    const auto rule = rule_for(f, panel_width(alpha, tau, n_max), points_per_panel);
    std::vector<double> samples(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        samples[i] = f.eval(rule.nodes[i]);
    return laguerre_analyze_samples(alpha, tau, rule, samples, n_max);
}

std::vector<double> laguerre_synthesize(const LaguerreCoeffs& coeffs, std::span<const double> rs)
{
    std::vector<double> out;
    out.reserve(rs.size());
    std::vector<double> seq(coeffs.values.size());
    for (const double r : rs) {
        specfun::laguerre_fn_sequence(coeffs.alpha, coeffs.tau, r, seq);
        out.push_back(quad::dot(coeffs.values, seq));
    }
    return out;
}

double example1_oracle(Order alpha, int n, double tau)
{
    if (n < 0 || !(tau > 0.0))
        throw DomainError("example1_oracle: need n >= 0 and tau > 0");
    const double a = alpha.value();
    return std::pow(2.0, a + 1.0) / specfun::laguerre_norm(n, a) * std::pow(std::sqrt(tau) / (1.0 + tau), a + 1.0) *
           std::pow((1.0 - tau) / (1.0 + tau), n);
}

}  // namespace grushin::laguerre
