#include "grushin/gtransform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "grushin/laguerre.hpp"
#include "grushin/parallel.hpp"
#include "grushin/specfun.hpp"

namespace grushin {

void SpectralData::validate() const
{
    if (n_max < 1)
        throw DomainError("spectral data: n_max must be >= 1");
    if (tau_grid.size() != tau_weights.size())
        throw DomainError("spectral data: tau grid and weights differ in length");
    if (values.rows() != static_cast<std::size_t>(n_max) || values.cols() != tau_grid.size())
        throw DomainError("spectral data: value matrix has the wrong shape");
    for (std::size_t k = 0; k < tau_grid.size(); ++k) {
        if (!(tau_grid[k] > 0.0) || (k > 0 && !(tau_grid[k] > tau_grid[k - 1])))
            throw DomainError("spectral data: tau grid must be positive and increasing");
        if (!(tau_weights[k] > 0.0))
            throw DomainError("spectral data: tau weights must be positive");
    }
    for (double v : values.data())
        if (!std::isfinite(v))
            throw DomainError("spectral data: non-finite value");
}

}  // namespace grushin

namespace grushin::gt {

namespace {

std::vector<double> sample_grid(const PlaneFunction& f, const quad::HalfLineRule& rr, const quad::HalfLineRule& sr)
{
    std::vector<double> out(rr.size() * sr.size());
    parallel_for(rr.size(), [&](std::size_t i) {
        const double r = rr.nodes[i];
        for (std::size_t j = 0; j < sr.size(); ++j) {
            const double v = f.eval(r, sr.nodes[j]);
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "g_forward: non-finite f(" << r << ", " << sr.nodes[j] << ")";
                throw quad::QuadratureError(os.str(), r);
            }
            out[i * sr.size() + j] = v;
        }
    });
    return out;
}

void check_tau_rule(const quad::HalfLineRule& tr)
{
    if (tr.size() == 0)
        throw DomainError("tau grid is empty");
    tr.validate();
}

SpectralData empty_data(const TypePair& tp, int n_max, const quad::HalfLineRule& tr)
{
    if (n_max < 1)
        throw DomainError("n_max must be >= 1");
    SpectralData sd;
    sd.tp = tp;
    sd.n_max = n_max;
    sd.tau_grid = tr.nodes;
    sd.tau_weights = tr.weights;
    sd.values = Matrix(static_cast<std::size_t>(n_max), tr.size());
    return sd;
}

void check_output(const SpectralData& sd, const char* who)
{
    for (std::size_t n = 0; n < sd.values.rows(); ++n)
        for (std::size_t k = 0; k < sd.values.cols(); ++k)
            if (!std::isfinite(sd.values(n, k))) {
                std::ostringstream os;
                os << who << ": non-finite value at n=" << n << ", tau_k=" << sd.tau_grid[k];
                throw quad::QuadratureError(os.str(), sd.tau_grid[k]);
            }
}

}  // namespace

quad::HalfLineRule default_tau_rule()
{
    return quad::interval_rule(0.0, 12.0, 12.0 / 32.0, 8, 20);
}

double theta(double alpha, int n, double tau)
{
    return 2.0 * (2.0 * n + alpha + 1.0) * tau;
}

quad::HalfLineRule r_rule_for(const PlaneFunction& f, double alpha, double tau_max, int n_max, int ppp)
{
    const double w = laguerre::panel_width(alpha, tau_max, n_max);
    HalfLineFunction h{nullptr, std::nullopt, f.decay_r};
    if (f.support_hint)
        h.support_hint = f.support_hint->r;
    return rule_for(h, w, ppp);
}

quad::HalfLineRule s_rule_for(const PlaneFunction& f, double tau_max, int ppp)
{
    const double w = std::numbers::pi / tau_max;
    HalfLineFunction h{nullptr, std::nullopt, f.decay_s};
    if (f.support_hint)
        h.support_hint = f.support_hint->s;
    return rule_for(h, w, ppp);
}

SpectralData g_forward(const TypePair& tp, const PlaneFunction& f, const TransformOptions& opts)
{
    check_tau_rule(opts.tau_rule);
    const double tau_max = opts.tau_rule.nodes.back();
    const auto rr = r_rule_for(f, tp.alpha, tau_max, opts.n_max, opts.points_per_panel);
    const auto sr = s_rule_for(f, tau_max, opts.points_per_panel);
    return g_forward_sampled(tp, rr, sr, sample_grid(f, rr, sr), opts);
}

SpectralData g_forward_sampled(const TypePair& tp, const quad::HalfLineRule& rr, const quad::HalfLineRule& sr,
                               std::span<const double> samples, const TransformOptions& opts)
{
    const auto& tr = opts.tau_rule;
    check_tau_rule(tr);
    const double alpha = tp.alpha, beta = tp.beta;
    const int n_max = opts.n_max;
    SpectralData sd = empty_data(tp, n_max, tr);
    const std::size_t nk = tr.size();
    const std::size_t nr = rr.size(), ns = sr.size();
    if (samples.size() != nr * ns)
        throw DomainError("g_forward: sample count does not match the rules");

    // kern[j][k] = w_j (tau_k s_j)^{1/2} J_beta(tau_k s_j)
    std::vector<double> kern(ns * nk);
    parallel_for(ns, [&](std::size_t j) {
        for (std::size_t k = 0; k < nk; ++k)
            kern[j * nk + k] = sr.weights[j] * hankel::kernel_liouville(beta, tr.nodes[k], sr.nodes[j]);
    });

    // hank[i][k] = H°_beta f(r_i, .)(tau_k), weighted by the r weight
    std::vector<double> hank(nr * nk, 0.0);
    parallel_for(nr, [&](std::size_t i) {
        double* row = &hank[i * nk];
        for (std::size_t j = 0; j < ns; ++j) {
            const double fv = samples[i * ns + j];
            if (fv == 0.0)
                continue;
            const double* kr = &kern[j * nk];
            for (std::size_t k = 0; k < nk; ++k)
                row[k] += fv * kr[k];
        }
        for (std::size_t k = 0; k < nk; ++k)
            row[k] *= rr.weights[i];
    });

    const specfun::LaguerreRecurrence rec(alpha, n_max);
    parallel_for(nk, [&](std::size_t k) {
        std::vector<double> acc(n_max, 0.0), seq(n_max);
        for (std::size_t i = 0; i < nr; ++i) {
            const double h = hank[i * nk + k];
            if (h == 0.0)
                continue;
            rec.eval(tr.nodes[k], rr.nodes[i], seq);
            for (int n = 0; n < n_max; ++n)
                acc[n] += h * seq[n];
        }
        for (int n = 0; n < n_max; ++n)
            sd.values(n, k) = acc[n];
    });
    check_output(sd, "g_forward");
    return sd;
}

SpectralData g_forward_separated(const TypePair& tp, const HalfLineFunction& f1, const HalfLineFunction& f2,
                                 const TransformOptions& opts)
{
    const auto& tr = opts.tau_rule;
    check_tau_rule(tr);
    SpectralData sd = empty_data(tp, opts.n_max, tr);
    parallel_for(tr.size(), [&](std::size_t k) {
        const double tau = tr.nodes[k];
        const double h = hankel::hankel_liouville(tp.beta, f2, std::span<const double>(&tau, 1),
                                                  opts.points_per_panel)[0];
        const auto c = laguerre::laguerre_analyze(tp.alpha, tau, f1, opts.n_max, opts.points_per_panel);
        for (int n = 0; n < opts.n_max; ++n)
            sd.values(n, k) = c.values[n] * h;
    });
    check_output(sd, "g_forward_separated");
    return sd;
}

SpectralData g_forward_hat(const TypePair& tp, const PlaneFunction& f, const TransformOptions& opts)
{
    const auto& tr = opts.tau_rule;
    check_tau_rule(tr);
    const double alpha = tp.alpha, beta = tp.beta;
    const int n_max = opts.n_max;
    SpectralData sd = empty_data(tp, n_max, tr);
    const specfun::LaguerreRecurrence rec(alpha, n_max);

    parallel_for(tr.size(), [&](std::size_t k) {
        const double tau = tr.nodes[k];
        const auto rr = r_rule_for(f, alpha, tau, n_max, opts.points_per_panel);
        const auto sr = s_rule_for(f, tau, opts.points_per_panel);
        const std::size_t nr = rr.size(), ns = sr.size();
        // coef[j][n] = L°_{alpha,tau} f(., s_j)(n)
        std::vector<double> coef(ns * n_max, 0.0), seq(n_max), fv(ns);
        for (std::size_t i = 0; i < nr; ++i) {
            const double r = rr.nodes[i];
            bool any = false;
            for (std::size_t j = 0; j < ns; ++j) {
                fv[j] = f.eval(r, sr.nodes[j]) * rr.weights[i];
                if (!std::isfinite(fv[j]))
                    throw quad::QuadratureError("g_forward_hat: non-finite sample", r);
                any = any || fv[j] != 0.0;
            }
            if (!any)
                continue;
            rec.eval(tau, r, seq);
            for (std::size_t j = 0; j < ns; ++j) {
                if (fv[j] == 0.0)
                    continue;
                double* c = &coef[j * n_max];
                for (int n = 0; n < n_max; ++n)
                    c[n] += fv[j] * seq[n];
            }
        }
        std::vector<double> acc(n_max, 0.0);
        for (std::size_t j = 0; j < ns; ++j) {
            const double kw = sr.weights[j] * hankel::kernel_liouville(beta, tau, sr.nodes[j]);
            const double* c = &coef[j * n_max];
            for (int n = 0; n < n_max; ++n)
                acc[n] += kw * c[n];
        }
        for (int n = 0; n < n_max; ++n)
            sd.values(n, k) = acc[n];
    });
    check_output(sd, "g_forward_hat");
    return sd;
}

std::vector<double> g_inverse(const SpectralData& sd, std::span<const Point> points)
{
    sd.validate();
    const std::size_t nk = sd.tau_grid.size();
    const int n_max = sd.n_max;

    std::map<double, std::size_t> r_index, s_index;
    for (const Point& p : points) {
        if (!(p.r > 0.0) || !(p.s > 0.0))
            throw DomainError("g_inverse: points must lie in the open quarter plane");
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

    // synth[r][k] = sum_n F(n, tau_k) l_{n,tau_k}(r)
    const specfun::LaguerreRecurrence rec(sd.tp.alpha, n_max);
    std::vector<double> synth(rs.size() * nk);
    parallel_for(rs.size(), [&](std::size_t a) {
        std::vector<double> seq(n_max);
        for (std::size_t k = 0; k < nk; ++k) {
            rec.eval(sd.tau_grid[k], rs[a], seq);
            double s = 0.0;
            for (int n = 0; n < n_max; ++n)
                s += sd.values(n, k) * seq[n];
            synth[a * nk + k] = s;
        }
    });
    std::vector<double> kern(ss.size() * nk);
    parallel_for(ss.size(), [&](std::size_t b) {
        for (std::size_t k = 0; k < nk; ++k)
            kern[b * nk + k] = sd.tau_weights[k] * hankel::kernel_liouville(sd.tp.beta, sd.tau_grid[k], ss[b]);
    });

    std::vector<double> out(points.size());
    parallel_for(points.size(), [&](std::size_t p) {
        const double* a = &synth[r_index.at(points[p].r) * nk];
        const double* b = &kern[s_index.at(points[p].s) * nk];
        double s = 0.0;
        for (std::size_t k = 0; k < nk; ++k)
            s += a[k] * b[k];
        out[p] = s;
    });
    return out;
}

double plancherel_norm(const SpectralData& sd)
{
    quad::Sum acc;
    for (std::size_t k = 0; k < sd.tau_grid.size(); ++k) {
        double col = 0.0;
        for (std::size_t n = 0; n < sd.values.rows(); ++n)
            col += sd.values(n, k) * sd.values(n, k);
        acc.add(sd.tau_weights[k] * col);
    }
    return std::sqrt(acc.value());
}

SpectralData apply_multiplier(const SpectralData& sd, const Multiplier& phi)
{
    SpectralData out = sd;
    for (std::size_t n = 0; n < out.values.rows(); ++n)
        for (std::size_t k = 0; k < out.values.cols(); ++k) {
            const double m = phi.phi(theta(sd.tp.alpha, static_cast<int>(n), sd.tau_grid[k]));
            if (!std::isfinite(m)) {
                if (phi.bounded_hint) {
                    std::ostringstream os;
                    os << "functional_calculus: multiplier overflow at n=" << n << ", tau_k=" << sd.tau_grid[k];
                    throw DomainError(os.str());
                }
                out.values(n, k) = sd.values(n, k) == 0.0 ? 0.0 : m * sd.values(n, k);
            } else {
                out.values(n, k) *= m;
            }
        }
    return out;
}

std::vector<double> functional_calculus(const TypePair& tp, const Multiplier& phi, const PlaneFunction& f,
                                        std::span<const Point> points, const TransformOptions& opts)
{
    return g_inverse(apply_multiplier(g_forward(tp, f, opts), phi), points);
}

}  // namespace grushin::gt
