#include "grushin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace grushin::quad {

void HalfLineRule::validate() const
{
    if (nodes.size() != weights.size())
        throw QuadratureError("rule: nodes and weights differ in length");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw QuadratureError("rule: non-positive weight", nodes[i]);
        if (!(nodes[i] > 0.0))
            throw QuadratureError("rule: non-positive node", nodes[i]);
        if (i > 0 && !(nodes[i] > nodes[i - 1]))
            throw QuadratureError("rule: nodes not increasing", nodes[i]);
    }
    if (!nodes.empty() && upper_cut < nodes.back())
        throw QuadratureError("rule: upper_cut below last node", nodes.back());
}

const GaussRule& gauss_legendre(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    if (n < 1)
        throw QuadratureError("gauss_legendre: need n >= 1");
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (slot)
        return *slot;
    auto g = std::make_unique<GaussRule>();
    g->nodes.resize(n);
    g->weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        g->nodes[i] = -z;
        g->nodes[n - 1 - i] = z;
        g->weights[i] = g->weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    slot = std::move(g);
    return *slot;
}

double upper_cut_for(const TruncationPolicy& p)
{
    if (!(p.abs_tol > 0.0))
        throw QuadratureError("policy: abs_tol must be > 0");
    if (!(p.scale > 0.0))
        throw QuadratureError("policy: scale must be > 0");
    const double lt = std::log(1.0 / p.abs_tol);
    switch (p.decay_hint) {
    case DecayHint::gaussian:
        return p.scale * std::ceil(std::sqrt(2.0 * std::max(lt, 0.0)));
    case DecayHint::exponential:
        return p.scale * std::ceil(std::max(lt, 0.0));
    case DecayHint::algebraic_oscillatory: {
        const double q = p.algebraic_power;
        if (!(q > 1.0))
            throw QuadratureError("policy: algebraic tail needs power > 1");
        return std::pow(std::pow(p.scale, q) / ((q - 1.0) * p.abs_tol), 1.0 / (q - 1.0));
    }
    }
    return 0.0;
}

double panel_width_for(const TruncationPolicy& p)
{
    double w = p.max_width;
    if (p.frequency > 0.0)
        w = std::min(w, std::numbers::pi / (2.0 * p.frequency));
    if (!(w > 0.0))
        throw QuadratureError("policy: panel width must be > 0");
    return w;
}

namespace {

void append_panel(HalfLineRule& rule, double a, double b, const GaussRule& g)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        rule.nodes.push_back(c + h * g.nodes[i]);
        rule.weights.push_back(h * g.weights[i]);
    }
}

std::vector<double> panel_edges(double a, double b, double w, int refine_levels, int max_panels)
{
    std::vector<double> edges{a};
    double x = a;
    if (refine_levels > 0) {
        double step = std::ldexp(b - a, -refine_levels);
        while (step < w && x + step < b) {
            x += step;
            edges.push_back(x);
            step = std::min(2.0 * step, w);
            if (static_cast<int>(edges.size()) > max_panels)
                break;
        }
    }
    const double rest = b - x;
    const long n = std::max(1L, static_cast<long>(std::ceil(rest / w - 1e-12)));
    if (static_cast<long>(edges.size()) - 1 + n > max_panels) {
        std::ostringstream os;
        os << "quadrature: " << (static_cast<long>(edges.size()) - 1 + n) << " panels needed on [" << a << ", " << b
           << "], max_panels is " << max_panels;
        throw QuadratureError(os.str(), b);
    }
    for (long k = 1; k <= n; ++k)
        edges.push_back(k == n ? b : x + rest * static_cast<double>(k) / static_cast<double>(n));
    return edges;
}

}  // namespace

HalfLineRule build_rule(const TruncationPolicy& policy, int points_per_panel)
{
    if (points_per_panel < 4)
        throw QuadratureError("build_rule: points_per_panel must be >= 4");
    const double cut = upper_cut_for(policy);
    const double w = panel_width_for(policy);
    const auto edges = panel_edges(0.0, cut, w, policy.refine_levels, policy.max_panels);
    const GaussRule& g = gauss_legendre(points_per_panel);
    HalfLineRule rule;
    rule.kind = RuleKind::composite_legendre;
    rule.upper_cut = cut;
    rule.nodes.reserve((edges.size() - 1) * points_per_panel);
    rule.weights.reserve(rule.nodes.capacity());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        append_panel(rule, edges[i], edges[i + 1], g);
    return rule;
}

HalfLineRule interval_rule(double a, double b, double max_width, int points_per_panel, int refine_levels)
{
    if (!(a >= 0.0) || !(b > a))
        throw QuadratureError("interval_rule: need 0 <= a < b");
    if (points_per_panel < 1 || !(max_width > 0.0))
        throw QuadratureError("interval_rule: bad panel parameters");
    const auto edges = panel_edges(a, b, max_width, refine_levels, 1 << 20);
    const GaussRule& g = gauss_legendre(points_per_panel);
    HalfLineRule rule;
    rule.upper_cut = b;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        append_panel(rule, edges[i], edges[i + 1], g);
    return rule;
}

HalfLineRule gauss_laguerre_rule(int n, double scale)
{
    if (n < 1 || !(scale > 0.0))
        throw QuadratureError("gauss_laguerre_rule: bad parameters");
    HalfLineRule rule;
    rule.kind = RuleKind::exp_weighted;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2] / scale);
        }
        double pp = 0.0, p2 = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            pp = (n * p1 - n * p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 3e-15 * std::abs(z))
                break;
        }
        rule.nodes[i] = z * scale;
        rule.weights[i] = -1.0 / (pp * n * p2) * std::exp(z) * scale;
    }
    rule.upper_cut = rule.nodes.back();
    return rule;
}

HalfLineRule mapped_rule(int n, double scale)
{
    if (n < 1 || !(scale > 0.0))
        throw QuadratureError("mapped_rule: bad parameters");
    const GaussRule& g = gauss_legendre(n);
    HalfLineRule rule;
    rule.kind = RuleKind::mapped;
    for (int i = 0; i < n; ++i) {
        const double t = 0.5 * (g.nodes[i] + 1.0);
        const double wt = 0.5 * g.weights[i];
        rule.nodes.push_back(scale * t / (1.0 - t));
        rule.weights.push_back(wt * scale / ((1.0 - t) * (1.0 - t)));
    }
    rule.upper_cut = rule.nodes.back();
    return rule;
}

double integrate(const std::function<double(double)>& f, const HalfLineRule& rule)
{
    Sum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(rule.nodes[i]);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrate: non-finite integrand at node " << rule.nodes[i];
            throw QuadratureError(os.str(), rule.nodes[i]);
        }
        acc.add(rule.weights[i] * v);
    }
    return acc.value();
}

double dot(std::span<const double> a, std::span<const double> b)
{
    Sum acc;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        acc.add(a[i] * b[i]);
    return acc.value();
}

}  // namespace grushin::quad
