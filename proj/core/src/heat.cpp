#include "grushin/heat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "grushin/parallel.hpp"
#include "grushin/specfun.hpp"

namespace grushin {

HeatParams::HeatParams(double t_, TypePair tp_) : t(t_), tp(tp_)
{
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("heat: t must be a positive finite number");
}

}  // namespace grushin

namespace grushin::heat {

namespace {

// tau / sinh(2 t tau), stable for small and large arguments
double q_factor(double t, double tau)
{
    const double a = 2.0 * t * tau;
    if (a < 1e-8)
        return 1.0 / (2.0 * t);
    return 2.0 * tau * std::exp(-a) / -std::expm1(-2.0 * a);
}

// exponent of exp(-tau (r^2+u^2)/(2 tanh 2t tau)) I_a(x) after pulling e^{x} into the scaled I:
// -tau [(r-u)^2 + 2 (r^2+u^2) sinh^2(t tau)] / (2 sinh 2t tau)
double combined_exponent(double t, double tau, double q, double r, double u)
{
    const double d = r - u;
    return -0.5 * d * d * q - 0.5 * tau * (r * r + u * u) * std::tanh(t * tau);
}

void check_point(const char* who, double r, double s, double u, double v, bool allow_zero_uv)
{
    const bool ok = r > 0.0 && s > 0.0 && (allow_zero_uv ? (u >= 0.0 && v >= 0.0) : (u > 0.0 && v > 0.0)) &&
                    std::isfinite(r + s + u + v);
    if (!ok) {
        std::ostringstream os;
        os << who << ": coordinates must be positive, got (" << r << ", " << s << ", " << u << ", " << v << ")";
        throw DomainError(os.str());
    }
}

double sum_rule(const quad::HalfLineRule& rule, const std::function<double(double)>& g, const char* who)
{
    quad::Sum acc;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double val = g(rule.nodes[k]);
        if (!std::isfinite(val)) {
            std::ostringstream os;
            os << who << ": non-finite integrand at tau=" << rule.nodes[k];
            throw quad::QuadratureError(os.str(), rule.nodes[k]);
        }
        acc.add(rule.weights[k] * val);
    }
    return acc.value();
}

}  // namespace

quad::HalfLineRule kernel_tau_rule(const HeatParams& hp, double r2u2, double freq, const KernelOptions& opts)
{
    const double t = hp.t;
    const double alpha = hp.tp.alpha;
    // For tau >= 1/t the integrand is below tau^3 e^{-rate tau}: tau^2/sinh and I_a(x) give
    // 2t(1 + min(a, 0)), the gaussian factor at least tanh(1)/2 (r^2 + u^2).
    const double rate = 2.0 * t * (1.0 + std::min(alpha, 0.0)) + 0.38 * r2u2;
    const double log_tol = std::log(1.0 / opts.abs_tol) + std::log1p(std::sqrt(r2u2));
    double cut = log_tol / rate;
    for (int i = 0; i < 4; ++i)
        cut = (log_tol + 3.0 * std::log(std::max(cut, 1.0))) / rate;
    cut = std::max(cut, 1.0 / t);

    double width = std::min({0.5, 1.0 / (2.0 * t), 1.5 / std::sqrt(1.0 + t * r2u2)});
    if (freq > 0.0)
        width = std::min(width, std::numbers::pi / freq);
    // integrand ~ tau^{2b+1} near 0; refine until the first panel carries < tol
    const double beta = hp.tp.beta;
    const int levels = std::clamp(static_cast<int>(std::ceil(36.0 / (2.0 * beta + 2.0))), 8, 60);
    if (cut / width > 200000)
        throw quad::QuadratureError("heat kernel: tau rule would need too many panels", cut);
    return quad::interval_rule(0.0, cut, width, opts.points_per_panel, levels);
}

double heat_kernel(const HeatParams& hp, double r, double s, double u, double v, const KernelOptions& opts)
{
    check_point("heat_kernel", r, s, u, v, false);
    const double t = hp.t, alpha = hp.tp.alpha, beta = hp.tp.beta;
    const auto rule = kernel_tau_rule(hp, r * r + u * u, s + v, opts);
    const double pre = std::sqrt(r * u) * std::sqrt(s * v);
    const double ru = r * u;
    return pre * sum_rule(rule, [&](double tau) {
        const double q = q_factor(t, tau);
        const double e = combined_exponent(t, tau, q, r, u);
        return specfun::bessel_j(beta, tau * s) * specfun::bessel_j(beta, tau * v) * std::exp(e) *
               specfun::bessel_i_scaled(alpha, ru * q) * tau * q;
    }, "heat_kernel");
}

double heat_kernel_half(double t, double r, double s, double u, double v, HalfVariant variant,
                        const KernelOptions& opts)
{
    check_point("heat_kernel_half", r, s, u, v, false);
    const HeatParams hp(t, {-0.5, -0.5});
    const auto rule = kernel_tau_rule(hp, r * r + u * u, s + v, opts);
    const double sign = variant == HalfVariant::cosh ? 1.0 : -1.0;
    const double ru = r * u;
    const double c = std::pow(2.0 / std::numbers::pi, 1.5);
    return c * sum_rule(rule, [&](double tau) {
        const double q = q_factor(t, tau);
        const double x = ru * q;
        const double e = combined_exponent(t, tau, q, r, u);
        // exp(-tau (r^2+u^2)/(2 tanh)) {cosh, sinh}(x) = (e^{E} +- e^{E - 2x}) / 2
        const double hyp = 0.5 * (std::exp(e) + sign * std::exp(e - 2.0 * x));
        return std::cos(tau * s) * std::cos(tau * v) * hyp * std::sqrt(q);
    }, "heat_kernel_half");
}

double heat_kernel_weighted(const HeatParams& hp, double r, double s, double u, double v, const KernelOptions& opts)
{
    check_point("heat_kernel_weighted", r, s, u, v, true);
    const double t = hp.t, alpha = hp.tp.alpha, beta = hp.tp.beta;
    const auto rule = kernel_tau_rule(hp, r * r + u * u, s + v, opts);
    const double ru = r * u;
    return sum_rule(rule, [&](double tau) {
        const double q = q_factor(t, tau);
        const double e = combined_exponent(t, tau, q, r, u);
        return specfun::bessel_j_normalized(beta, tau * s) * specfun::bessel_j_normalized(beta, tau * v) *
               std::exp(e) * specfun::bessel_i_scaled_normalized(alpha, ru * q) * std::pow(q, alpha + 1.0) *
               std::pow(tau, 2.0 * beta + 1.0);
    }, "heat_kernel_weighted");
}

double kernel_at_origin(const HeatParams& hp, double r, double s, OriginConstant c, const KernelOptions& opts)
{
    check_point("kernel_at_origin", r, s, 0.0, 0.0, true);
    const double t = hp.t, alpha = hp.tp.alpha, beta = hp.tp.beta;
    const double log_c = (alpha + beta) * std::numbers::ln2 + specfun::log_gamma(alpha + 1.0) +
                         specfun::log_gamma(beta + 1.0);
    const double constant = std::exp(c == OriginConstant::corrected ? -log_c : log_c);
    const auto rule = kernel_tau_rule(hp, r * r, s, opts);
    return constant * sum_rule(rule, [&](double tau) {
        const double q = q_factor(t, tau);
        const double a = 2.0 * t * tau;
        // tau / tanh(2 t tau) -> 1/(2t) at 0
        const double coth_tau = a < 1e-8 ? 1.0 / (2.0 * t) : tau / std::tanh(a);
        return specfun::bessel_j_normalized(beta, tau * s) * std::exp(-0.5 * r * r * coth_tau) *
               std::pow(q, alpha + 1.0) * std::pow(tau, 2.0 * beta + 1.0);
    }, "kernel_at_origin");
}

std::vector<double> heat_apply_sampled(const HeatParams& hp, const quad::HalfLineRule& ur,
                                       const quad::HalfLineRule& vr, std::span<const double> samples,
                                       std::span<const Point> points, const ApplyOptions& opts)
{
    const std::size_t nu = ur.size(), nv = vr.size();
    if (samples.size() != nu * nv)
        throw DomainError("heat_apply: sample count does not match the rules");
    if (points.empty())
        return {};
    const double t = hp.t, alpha = hp.tp.alpha, beta = hp.tp.beta;

    double r_min = points[0].r, s_max = 0.0;
    for (const Point& p : points) {
        check_point("heat_apply", p.r, p.s, 1.0, 1.0, false);
        r_min = std::min(r_min, p.r);
        s_max = std::max(s_max, p.s);
    }
    double u_min = -1.0, v_max = 0.0;
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            const double fv = samples[i * nv + j];
            if (!std::isfinite(fv))
                throw quad::QuadratureError("heat_apply: non-finite sample", ur.nodes[i]);
            if (fv != 0.0) {
                if (u_min < 0.0)
                    u_min = ur.nodes[i];
                v_max = std::max(v_max, vr.nodes[j]);
            }
        }
    if (u_min < 0.0)
        return std::vector<double>(points.size(), 0.0);

    const auto rule = kernel_tau_rule(hp, r_min * r_min + u_min * u_min, s_max + v_max,
                                      {opts.abs_tol, opts.points_per_panel});
    const std::size_t nk = rule.size();

    // h[i][k] = int f(u_i, v) sqrt(v) J_b(tau_k v) dv
    std::vector<double> kv(nv * nk);
    parallel_for(nv, [&](std::size_t j) {
        const double sv = vr.weights[j] * std::sqrt(vr.nodes[j]);
        for (std::size_t k = 0; k < nk; ++k)
            kv[j * nk + k] = sv * specfun::bessel_j(beta, rule.nodes[k] * vr.nodes[j]);
    });
    std::vector<double> h(nu * nk, 0.0);
    parallel_for(nu, [&](std::size_t i) {
        double* row = &h[i * nk];
        for (std::size_t j = 0; j < nv; ++j) {
            const double fv = samples[i * nv + j];
            if (fv == 0.0)
                continue;
            const double* kr = &kv[j * nk];
            for (std::size_t k = 0; k < nk; ++k)
                row[k] += fv * kr[k];
        }
    });
    std::vector<double> q(nk);
    for (std::size_t k = 0; k < nk; ++k)
        q[k] = q_factor(t, rule.nodes[k]);

    std::map<double, std::size_t> r_index, s_index;
    for (const Point& p : points) {
        r_index.emplace(p.r, 0);
        s_index.emplace(p.s, 0);
    }
    std::vector<double> rs, ss;
    for (auto& [r, idx] : r_index) {
        idx = rs.size();
        rs.push_back(r);
    }
    for (auto& [s, idx] : s_index) {
        idx = ss.size();
        ss.push_back(s);
    }

    // g[r][k] = int h(u, tau_k) sqrt(u) exp(E) I~_a(x) du; terms with exp(E) far below
    // the tolerance are skipped (I~ <= 1 for a >= 0 and grows only like x^a as x -> 0 otherwise)
    const double log_skip = std::log(opts.abs_tol) - 10.0;
    std::vector<double> g(rs.size() * nk, 0.0);
    parallel_for(rs.size(), [&](std::size_t a) {
        const double r = rs[a];
        double* row = &g[a * nk];
        for (std::size_t i = 0; i < nu; ++i) {
            const double u = ur.nodes[i];
            const double wu = ur.weights[i] * std::sqrt(u);
            const double* hi = &h[i * nk];
            for (std::size_t k = 0; k < nk; ++k) {
                if (hi[k] == 0.0)
                    continue;
                const double e = combined_exponent(t, rule.nodes[k], q[k], r, u);
                if (e < log_skip)
                    continue;
                row[k] += wu * hi[k] * std::exp(e) * specfun::bessel_i_scaled(alpha, r * u * q[k]);
            }
        }
    });
    // js[s][k] = w_k tau_k q_k sqrt(s) J_b(tau_k s)
    std::vector<double> js(ss.size() * nk);
    parallel_for(ss.size(), [&](std::size_t b) {
        for (std::size_t k = 0; k < nk; ++k) {
            const double tau = rule.nodes[k];
            js[b * nk + k] = rule.weights[k] * tau * q[k] * std::sqrt(ss[b]) * specfun::bessel_j(beta, tau * ss[b]);
        }
    });

    std::vector<double> out(points.size());
    parallel_for(points.size(), [&](std::size_t p) {
        const double* a = &g[r_index.at(points[p].r) * nk];
        const double* b = &js[s_index.at(points[p].s) * nk];
        quad::Sum acc;
        for (std::size_t k = 0; k < nk; ++k)
            acc.add(a[k] * b[k]);
        out[p] = std::sqrt(points[p].r) * acc.value();
    });
    return out;
}

std::vector<double> heat_apply(const HeatParams& hp, const PlaneFunction& f, std::span<const Point> points,
                               const ApplyOptions& opts)
{
    auto rule_in = [&](std::optional<Interval> iv, const quad::TruncationPolicy& decay) {
        HalfLineFunction h{nullptr, iv, decay};
        return rule_for(h, opts.panel_width, opts.points_per_panel);
    };
    const auto ur = rule_in(f.support_hint ? std::optional(f.support_hint->r) : std::nullopt, f.decay_r);
    const auto vr = rule_in(f.support_hint ? std::optional(f.support_hint->s) : std::nullopt, f.decay_s);
    std::vector<double> samples(ur.size() * vr.size());
    for (std::size_t i = 0; i < ur.size(); ++i)
        for (std::size_t j = 0; j < vr.size(); ++j)
            samples[i * vr.size() + j] = f.eval(ur.nodes[i], vr.nodes[j]);
    return heat_apply_sampled(hp, ur, vr, samples, points, opts);
}

std::vector<double> heat_apply_spectral(const HeatParams& hp, const PlaneFunction& f, std::span<const Point> points,
                                        const gt::TransformOptions& opts)
{
    const double t = hp.t;
    return gt::functional_calculus(hp.tp, {[t](double y) { return std::exp(-t * y); }, true}, f, points, opts);
}

double mehler_sum(double alpha, double t, double tau, double r, double u, int n_terms)
{
    if (n_terms < 1 || !(t > 0.0) || !(tau > 0.0))
        throw DomainError("mehler_sum: need n_terms >= 1, t > 0, tau > 0");
    const specfun::LaguerreRecurrence rec(alpha, n_terms);
    std::vector<double> lr(n_terms), lu(n_terms);
    rec.eval(tau, r, lr);
    rec.eval(tau, u, lu);
    quad::Sum acc;
    for (int n = 0; n < n_terms; ++n)
        acc.add(std::exp(-4.0 * t * tau * n) * lr[n] * lu[n]);
    // l_{n,tau}(r) = tau^{1/4} l_n(sqrt(tau) r)
    return acc.value() / std::sqrt(tau);
}

double mehler_closed(double alpha, double t, double tau, double r, double u)
{
    if (!(t > 0.0) || !(tau > 0.0))
        throw DomainError("mehler_closed: need t > 0, tau > 0");
    const double q = q_factor(t, tau);
    const double e = combined_exponent(t, tau, q, r, u);
    // e^{2t tau (a+1)} / sinh(2 t tau) = 2 e^{2 t tau a} / (1 - e^{-4 t tau})
    const double pre = 2.0 * std::exp(2.0 * t * tau * alpha) / -std::expm1(-4.0 * t * tau);
    return pre * std::exp(e) * specfun::bessel_i_scaled(alpha, r * u * q) * std::sqrt(tau * r * u);
}

std::vector<double> diagonal_profile(Profile kind, const TypePair& tp, std::span<const double> xs,
                                     const KernelOptions& opts)
{
    const HeatParams hp(0.5, tp);
    const double alpha = tp.alpha, beta = tp.beta;
    std::vector<double> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        if (!(x > 0.0))
            throw DomainError("diagonal_profile: grid values must be positive");
        // F1 is the r = 1 diagonal with J_b(tau s); F2 the s = 1 diagonal at radius r
        const double r = kind == Profile::F1 ? 1.0 : x;
        const double s = kind == Profile::F1 ? x : 1.0;
        const auto rule = kernel_tau_rule(hp, 2.0 * r * r, 2.0 * s, opts);
        out[i] = sum_rule(rule, [&](double tau) {
            const double q = q_factor(0.5, tau);
            const double j = specfun::bessel_j(beta, tau * s);
            return j * j * std::exp(combined_exponent(0.5, tau, q, r, r)) *
                   specfun::bessel_i_scaled(alpha, r * r * q) * tau * q;
        }, "diagonal_profile");
    });
    return out;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("loglog_slope: need at least two matching samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw DomainError("loglog_slope: samples must be positive");
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace grushin::heat
