#include "grushin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "grushin/bump.hpp"
#include "grushin/diffop.hpp"
#include "grushin/gtransform.hpp"
#include "grushin/hankel.hpp"
#include "grushin/heat.hpp"
#include "grushin/laguerre.hpp"
#include "grushin/specfun.hpp"

namespace grushin::verify {

bool Check::pass() const
{
    return upper ? value < bound : value > bound;
}

bool Result::pass() const
{
    return error.empty() && !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

namespace {

using Body = std::function<std::vector<Check>(double)>;

struct Criterion {
    std::string id;
    std::string suite;
    std::string title;
    Body body;
};

Check below(std::string what, double value, double bound, double scale)
{
    return {std::move(what), value, bound * scale, true};
}

Check above(std::string what, double value, double bound)
{
    return {std::move(what), value, bound, false};
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

PlaneFunction skew_gaussian(double a, double b)
{
    PlaneFunction f{[=](double r, double s) {
                        return std::pow(r, a + 0.5) * std::pow(s, b + 0.5) * std::exp(-(r * r + s * s) / 2);
                    },
                    std::nullopt, {}, {}};
    f.decay_r.abs_tol = 1e-16;
    f.decay_s.abs_tol = 1e-16;
    return f;
}

PlaneFunction product_bump(const Bump& br, const Bump& bs)
{
    return {[=](double r, double s) { return br(r) * bs(s); }, Box{br.support(), bs.support()}, {}, {}};
}

struct Tensor {
    quad::HalfLineRule rr, sr;
    std::vector<Point> points;
};

Tensor tensor(const quad::HalfLineRule& rr, const quad::HalfLineRule& sr)
{
    Tensor t{rr, sr, {}};
    for (double r : rr.nodes)
        for (double s : sr.nodes)
            t.points.push_back({r, s});
    return t;
}

double norm2(const Tensor& t, const std::vector<double>& v)
{
    double acc = 0.0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < t.rr.size(); ++i)
        for (std::size_t j = 0; j < t.sr.size(); ++j, ++p)
            acc += t.rr.weights[i] * t.sr.weights[j] * v[p] * v[p];
    return acc;
}

double relative_l2(const Tensor& t, const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = a[i] - b[i];
    return std::sqrt(norm2(t, d) / norm2(t, b));
}

double spectral_diff(const SpectralData& a, const SpectralData& b)
{
    SpectralData d = a;
    for (std::size_t i = 0; i < d.values.data().size(); ++i)
        d.values.data()[i] -= b.values.data()[i];
    return gt::plancherel_norm(d) / gt::plancherel_norm(b);
}

double max_entry_diff(const SpectralData& a, const SpectralData& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.data().size(); ++i)
        m = std::max(m, std::abs(a.values.data()[i] - b.values.data()[i]));
    return m;
}

std::string num_label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string pair_label(double a, double b)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%g,%g)", a, b);
    return buf;
}

// grid on [0.25, 4]^2 with spacing 1/inv_h
GridFunction2D grid_of(const std::function<double(double, double)>& f, int inv_h)
{
    const int n = static_cast<int>(3.75 * inv_h);
    return GridFunction2D::sample(f, {0.25, 4.0}, {0.25, 4.0}, n, n);
}

double min_order(const std::function<double(int)>& residual)
{
    const double e1 = residual(128);
    const double e2 = residual(256);
    const double e3 = residual(512);
    return std::min(diffop::observed_order(e1, e2), diffop::observed_order(e2, e3));
}

// module checks

std::vector<Check> specfun_values(double sc)
{
    using namespace specfun;
    std::vector<Check> out;
    out.push_back(below("J_0(1)", rel(bessel_j(0, 1), 0.76519768655796655145), 1e-13, sc));
    out.push_back(below("J_{1/2}(20)", rel(bessel_j(0.5, 20), std::sqrt(2 / (std::numbers::pi * 20)) * std::sin(20.0)),
                        1e-12, sc));
    out.push_back(below("I_{1/2}(1)", rel(bessel_i(0.5, 1), std::sqrt(2 / std::numbers::pi) * std::sinh(1.0)), 1e-13, sc));
    out.push_back(below("e^-10 I_0(10)", rel(bessel_i_scaled(0, 10), 0.12783333716342860), 1e-12, sc));
    out.push_back(below("J_b(y)/y^b at 0", rel(bessel_j_normalized(0.7, 0.0), 1 / (std::pow(2, 0.7) * std::tgamma(1.7))),
                        1e-14, sc));
    return out;
}

std::vector<Check> hankel_gaussian(double sc)
{
    std::vector<Check> out;
    for (const double b : {-0.5, 0.0, 1.3}) {
        HalfLineFunction f{[=](double s) { return std::pow(s, b + 0.5) * std::exp(-s * s / 2); }, std::nullopt, {}};
        f.decay_hint.abs_tol = 1e-16;
        const std::vector<double> taus{0.3, 1.0, 2.5, 6.0};
        const auto h = hankel::hankel_liouville(b, f, taus);
        double worst = 0.0;
        for (std::size_t k = 0; k < taus.size(); ++k)
            worst = std::max(worst, std::abs(h[k] - std::pow(taus[k], b + 0.5) * std::exp(-taus[k] * taus[k] / 2)));
        out.push_back(below("gaussian beta=" + num_label(b), worst,
                            1e-12, sc));
    }
    return out;
}

// acceptance criteria

std::vector<Check> c1_example1(double sc)
{
    double worst = 0.0;
    double parseval = 0.0;
    for (const double a : {-0.5, 0.0, 0.5, 1.7}) {
        HalfLineFunction f{[=](double r) { return std::pow(r, a + 0.5) * std::exp(-r * r / 2); }, std::nullopt, {}};
        f.decay_hint.abs_tol = 1e-16;
        for (const double tau : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const auto c = laguerre::laguerre_analyze(a, tau, f, 21);
            for (int n = 0; n <= 20; ++n)
                worst = std::max(worst, std::abs(c.values[n] - laguerre::example1_oracle(a, n, tau)));
        }
        const auto c = laguerre::laguerre_analyze(a, 0.5, f, 200);
        double s = 0.0;
        for (const double v : c.values)
            s += v * v;
        parseval = std::max(parseval, std::abs(s - std::tgamma(a + 1) / 2));
    }
    return {below("max |coefficient error|", worst, 1e-8, sc), below("parseval gap N=200", parseval, 1e-6, sc)};
}

std::vector<Check> c2_example2(double sc)
{
    std::vector<Check> out;
    gt::TransformOptions o;
    o.n_max = 200;
    for (const double a : {0.0, 0.5})
        for (const double b : {0.0, 0.5}) {
            const double p = gt::plancherel_norm(gt::g_forward({a, b}, skew_gaussian(a, b), o));
            const double exact = std::tgamma(a + 1) * std::tgamma(b + 1) / 4;
            out.push_back(below("plancherel " + pair_label(a, b), rel(p * p, exact), 1e-5, sc));
        }
    return out;
}

double roundtrip(const TypePair& tp, const PlaneFunction& f)
{
    const auto sd = gt::g_forward(tp, f);
    const Tensor t = tensor(quad::interval_rule(0.0, 1.5 * f.support_hint->r.hi, 0.05, 8, 10),
                            quad::interval_rule(0.0, 1.5 * f.support_hint->s.hi, 0.05, 8, 10));
    const auto back = gt::g_inverse(sd, t.points);
    std::vector<double> ref;
    for (const Point& p : t.points)
        ref.push_back(f.eval(p.r, p.s));
    return relative_l2(t, back, ref);
}

std::vector<Check> c3_roundtrip(double sc)
{
    const Bump wide{2.5, 2.0, 4.0};
    const Bump sharp{2.5, 2.0, 8.0};
    const PlaneFunction disc{[](double r, double s) {
                                 const double y2 = ((r - 2.5) * (r - 2.5) + (s - 2.5) * (s - 2.5)) / 4.0;
                                 return y2 < 1 ? std::exp(4 - 4 / (1 - y2)) : 0.0;
                             },
                             Box{{0.5, 4.5}, {0.5, 4.5}}, {}, {}};
    std::vector<Check> out;
    out.push_back(below("product bump (0.5,0.5)", roundtrip({0.5, 0.5}, product_bump(wide, wide)), 1e-3, sc));
    out.push_back(below("sharp bump (-0.5,0.5)", roundtrip({-0.5, 0.5}, product_bump(sharp, sharp)), 1e-3, sc));
    out.push_back(below("radial bump (1.2,1.2)", roundtrip({1.2, 1.2}, disc), 1e-3, sc));

    // spectral side: F -> g_inverse F -> g_forward
    gt::TransformOptions o;
    const Bump w{2.0, 1.5, 4.0};
    SpectralData F{{0.0, 0.0}, o.n_max, o.tau_rule.nodes, o.tau_rule.weights, Matrix(o.n_max, o.tau_rule.size())};
    for (int n = 0; n < 8; ++n)
        for (std::size_t k = 0; k < F.tau_grid.size(); ++k)
            F.values(n, k) = std::exp(-0.5 * n) * w(F.tau_grid[k]);
    const Tensor t = tensor(quad::interval_rule(0.0, 12.0, 0.2, 8, 10), quad::interval_rule(0.0, 25.0, 0.25, 8, 10));
    const auto f = gt::g_inverse(F, t.points);
    out.push_back(below("spectral data (0,0)", spectral_diff(gt::g_forward_sampled(F.tp, t.rr, t.sr, f, o), F), 1e-3,
                        sc));
    return out;
}

std::vector<Check> c4_hat(double sc)
{
    std::vector<Check> out;
    for (const auto& [a, b] : {std::pair{0.0, 0.0}, std::pair{0.5, -0.5}}) {
        const auto f = skew_gaussian(a, b);
        out.push_back(below("entrywise " + pair_label(a, b),
                            max_entry_diff(gt::g_forward({a, b}, f), gt::g_forward_hat({a, b}, f)), 1e-5, sc));
    }
    return out;
}

std::vector<Check> c5_intertwining(double sc)
{
    const Bump c{1.75, 1.25, 4.0};
    const auto g = grid_of([&](double r, double s) { return c(r) * c(s); }, 256);
    const auto gi = g.interior(1);
    const auto rr = trapezoid_rule(gi.r_nodes);
    const auto sr = trapezoid_rule(gi.s_nodes);
    std::vector<Check> out;
    for (const auto& [a, b] : {std::pair{0.0, 0.0}, std::pair{-0.5, 0.7}}) {
        const TypePair tp{a, b};
        const auto lhs = gt::g_forward_sampled(tp, rr, sr, diffop::apply_G_circ(tp, g).values.data());
        auto rhs = gt::g_forward_sampled(tp, rr, sr, gi.values.data());
        for (int n = 0; n < rhs.n_max; ++n)
            for (std::size_t k = 0; k < rhs.tau_grid.size(); ++k)
                rhs.values(n, k) *= gt::theta(a, n, rhs.tau_grid[k]);
        out.push_back(below("relative " + pair_label(a, b), spectral_diff(rhs, lhs), 1e-3, sc));
    }
    return out;
}

std::vector<Check> c6_scaling(double sc)
{
    std::mt19937 gen(20240601);
    std::uniform_real_distribution<double> pick(0.2, 2.5);
    double scaling = 0.0;
    double symmetry = 0.0;
    const TypePair pairs[] = {{-0.5, -0.5}, {0.0, 0.0}, {0.7, -0.3}, {-0.8, 1.5}};
    for (int i = 0; i < 20; ++i) {
        const TypePair tp = pairs[i % 4];
        const double r = pick(gen), s = pick(gen), u = pick(gen), v = pick(gen);
        for (const double t : {0.25, 2.0}) {
            const double k = heat::heat_kernel({t, tp}, r, s, u, v);
            const double k1 =
                std::pow(t, -1.5) * heat::heat_kernel({1.0, tp}, r / std::sqrt(t), s / t, u / std::sqrt(t), v / t);
            scaling = std::max(scaling, rel(k, k1));
            symmetry = std::max(symmetry, rel(heat::heat_kernel({t, tp}, u, v, r, s), k));
        }
    }
    return {below("scaling", scaling, 1e-6, sc), {"symmetry", symmetry, 1e-12 * sc, true}};
}

std::vector<Check> c7_mehler(double sc)
{
    struct Probe {
        double t, tau, r, u;
    };
    double worst = 0.0;
    for (const double a : {-0.5, 0.0, 0.7})
        for (const Probe p : {Probe{0.5, 1, 1, 1}, Probe{0.25, 2, 0.5, 1.5}, Probe{1, 0.5, 2, 1},
                              Probe{0.1, 1, 1.2, 0.8}, Probe{0.5, 0.3, 0.3, 2.5}}) {
            const int n = static_cast<int>(std::ceil(20.0 / (4 * p.t * p.tau))) + 50;
            worst = std::max(worst, std::abs(heat::mehler_sum(a, p.t, p.tau, p.r, p.u, n) -
                                             heat::mehler_closed(a, p.t, p.tau, p.r, p.u)));
        }
    return {below("abs tail", worst, 1e-8, sc)};
}

std::vector<Check> c8_routes(double sc)
{
    const Bump w{2.0, 1.5, 4.0};
    const auto f = product_bump(w, w);
    std::vector<Point> pts;
    for (double r : {1.0, 2.0, 3.0})
        for (double s : {1.0, 2.0, 3.0})
            pts.push_back({r, s});
    std::vector<Check> out;
    for (const double a : {-0.5, 0.0, 0.7})
        for (const double b : {-0.5, 0.0, 0.7}) {
            const HeatParams hp(0.5, {a, b});
            gt::TransformOptions o;
            if (b < 0.0)
                o.n_max = 1600;
            const auto k = heat::heat_apply(hp, f, pts);
            const auto s = heat::heat_apply_spectral(hp, f, pts, o);
            double worst = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i)
                worst = std::max(worst, rel(s[i], k[i]));
            out.push_back(below("pointwise " + pair_label(a, b), worst, 1e-3, sc));
        }
    return out;
}

std::vector<Check> c9_semigroup(double sc)
{
    const Bump w{2.0, 1.5, 4.0};
    const auto f = product_bump(w, w);
    const Tensor t = tensor(quad::interval_rule(0.0, 6.0, 0.5, 8), quad::interval_rule(0.0, 8.0, 0.5, 8));
    std::vector<double> fv;
    for (const Point& p : t.points)
        fv.push_back(f.eval(p.r, p.s));
    std::vector<Check> out;
    for (const auto& [a, b] : {std::pair{0.0, 0.0}, std::pair{-0.5, 0.7}}) {
        const TypePair tp{a, b};
        const auto first = heat::heat_apply({0.25, tp}, f, t.points);
        const auto twice = heat::heat_apply_sampled({0.25, tp}, t.rr, t.sr, first, t.points);
        const auto once = heat::heat_apply({0.5, tp}, f, t.points);
        std::vector<double> d(once.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = twice[i] - once[i];
        out.push_back(below("L2 " + pair_label(a, b), std::sqrt(norm2(t, d) / norm2(t, fv)), 1e-3, sc));
    }
    return out;
}

std::vector<Check> c10_half(double sc)
{
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> pick(0.2, 2.5);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double r = pick(gen), s = pick(gen), u = pick(gen), v = pick(gen);
        const double t = 0.5 * pick(gen);
        worst = std::max(worst, rel(heat::heat_kernel_half(t, r, s, u, v), heat::heat_kernel({t, {-0.5, -0.5}}, r, s, u, v)));
    }
    const double general = heat::heat_kernel({0.5, {-0.5, -0.5}}, 1, 1, 1, 1);
    const double sinh = heat::heat_kernel_half(0.5, 1, 1, 1, 1, heat::HalfVariant::sinh);
    return {below("cosh variant", worst, 1e-6, sc), above("sinh variant differs", rel(sinh, general), 1e-3)};
}

std::vector<Check> c11_profiles(double sc)
{
    std::vector<double> xs;
    for (int i = 0; i <= 10; ++i)
        xs.push_back(std::pow(10.0, -3.0 + 0.1 * i));
    std::vector<Check> out;
    for (const double b : {0.4, -0.4}) {
        const double slope = heat::loglog_slope(xs, heat::diagonal_profile(heat::Profile::F1, {0.0, b}, xs));
        out.push_back(below("F1 slope - 2b, b=" + num_label(b),
                            std::abs(slope - 2 * b), 0.1, sc));
    }
    for (const double a : {0.6, -0.6}) {
        const double slope = heat::loglog_slope(xs, heat::diagonal_profile(heat::Profile::F2, {a, 0.0}, xs));
        out.push_back(below("F2 slope - 2a, a=" + num_label(a),
                            std::abs(slope - 2 * a), 0.1, sc));
    }
    return out;
}

std::vector<Check> c12_orders(double)
{
    const double a = 0.3, b = 0.7, tau = 2.0;
    const int n = 3;
    const double lambda = 2.0 * (2 * n + a + 1);
    const double eig = min_order([&](int inv_h) {
        const int m = static_cast<int>(3.75 * inv_h);
        auto g = GridFunction2D::sample([](double, double) { return 0.0; }, {0.25, 4.0}, {0.25, 4.0}, m, m);
        std::vector<double> js(g.s_nodes.size());
        for (std::size_t j = 0; j < js.size(); ++j)
            js[j] = hankel::kernel_liouville(b, tau, g.s_nodes[j]);
        for (std::size_t i = 0; i < g.r_nodes.size(); ++i) {
            const double l = specfun::laguerre_fn({n, a, tau}, g.r_nodes[i]);
            for (std::size_t j = 0; j < js.size(); ++j)
                g.values(i, j) = l * js[j];
        }
        auto expected = g.interior(1);
        for (double& x : expected.values.data())
            x *= lambda * tau;
        return diffop::max_abs_diff(diffop::apply_G_circ(a, b, g), expected) / diffop::max_abs(g);
    });
    const Bump br{1.75, 1.25, 2.0};
    const Bump bs{1.6, 1.1, 2.0};
    const double fact = min_order([&](int inv_h) {
        const auto g = grid_of([&](double r, double s) { return br(r) * bs(s); }, inv_h);
        return diffop::delta_factorization_residual(a, b, g);
    });
    return {above("eigenfunction residual order", eig, 1.9), above("factorization residual order", fact, 1.9)};
}

std::vector<Check> c13_conjugation(double)
{
    const Bump br{1.75, 1.25, 2.0};
    const Bump bs{1.6, 1.1, 2.0};
    auto bump = [&](int inv_h) { return grid_of([&](double r, double s) { return br(r) * bs(s); }, inv_h); };
    std::vector<Check> out;
    const double a = 0.6, b = 0.8;
    out.push_back(above("U intertwining order", min_order([&](int inv_h) {
                            using diffop::Conjugation;
                            const auto g = bump(inv_h);
                            const auto lhs = diffop::conjugate(Conjugation::U_alphabeta, a, b,
                                                               diffop::apply_G_weighted(a, b, g));
                            const auto rhs =
                                diffop::apply_G_circ(a, b, diffop::conjugate(Conjugation::U_alphabeta, a, b, g));
                            return diffop::max_abs_diff(lhs, rhs) / diffop::max_abs(rhs);
                        }),
                        1.9));
    for (const auto& [va, vb] : {std::pair{a, b}, std::pair{a, 0.0}, std::pair{0.0, b}}) {
        const double ga = va == 0.0 ? a : -a;
        const double gb = vb == 0.0 ? b : -b;
        out.push_back(above("V" + pair_label(va, vb) + " identity order", min_order([&](int inv_h) {
                                using diffop::Conjugation;
                                const auto g = bump(inv_h);
                                const auto lhs = diffop::apply_G_weighted(
                                    a, b, diffop::conjugate(Conjugation::V_alphabeta, va, vb, g));
                                const auto rhs = diffop::conjugate(Conjugation::V_alphabeta, va, vb,
                                                                   diffop::apply_G_weighted(ga, gb, g));
                                return diffop::max_abs_diff(lhs, rhs) / diffop::max_abs(rhs);
                            }),
                            1.9));
    }
    return out;
}

const std::vector<Criterion>& registry()
{
    static const std::vector<Criterion> all = {
        {"S1", "specfun", "Bessel reference values", specfun_values},
        {"H1", "hankel", "Hankel transform of the Liouville gaussian", hankel_gaussian},
        {"1", "laguerre", "Example 1 coefficients and Parseval sum", c1_example1},
        {"2", "gtransform", "Example 2 Plancherel identity", c2_example2},
        {"3", "gtransform", "transform round trips", c3_roundtrip},
        {"4", "gtransform", "hat variant equals the transform", c4_hat},
        {"5", "gtransform", "intertwining with finite differences", c5_intertwining},
        {"6", "heat", "kernel scaling and symmetry", c6_scaling},
        {"7", "heat", "Mehler sum", c7_mehler},
        {"8", "heat", "kernel route against spectral route", c8_routes},
        {"9", "heat", "semigroup property", c9_semigroup},
        {"10", "heat", "half-integer closed form", c10_half},
        {"11", "heat", "diagonal profile exponents", c11_profiles},
        {"12", "diffop", "eigenfunction and factorization residual orders", c12_orders},
        {"13", "diffop", "conjugation identity orders", c13_conjugation},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"all", "specfun", "hankel", "laguerre", "gtransform", "heat",
                                                   "diffop"};
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Result> run_suite(const std::string& suite, double tol_scale)
{
    if (!is_suite(suite))
        throw DomainError("verify: unknown suite '" + suite + "'");
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
        throw DomainError("verify: tol-scale must be a positive real");
    std::vector<Result> out;
    for (const Criterion& c : registry()) {
        // `all` is the numbered acceptance criteria
        if (suite == "all" ? !std::isdigit(static_cast<unsigned char>(c.id[0])) : c.suite != suite)
            continue;
        Result r{c.id, c.suite, c.title, {}, {}, 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.checks = c.body(tol_scale);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

void print_table(std::ostream& os, const std::vector<Result>& results)
{
    char buf[256];
    double total = 0.0;
    for (const Result& r : results) {
        std::snprintf(buf, sizeof buf, "%-4s %-3s %-10s %-50s %8.2fs\n", r.pass() ? "PASS" : "FAIL", r.id.c_str(),
                      r.suite.c_str(), r.title.c_str(), r.seconds);
        os << buf;
        for (const Check& c : r.checks) {
            std::snprintf(buf, sizeof buf, "       %-4s %-40s %12.4e %s %.1e\n", c.pass() ? "ok" : "FAIL",
                          c.what.c_str(), c.value, c.upper ? "<" : ">", c.bound);
            os << buf;
        }
        if (!r.error.empty())
            os << "       error: " << r.error << '\n';
        total += r.seconds;
    }
    std::size_t passed = 0;
    for (const Result& r : results)
        passed += r.pass() ? 1 : 0;
    std::snprintf(buf, sizeof buf, "%zu/%zu passed in %.1fs\n", passed, results.size(), total);
    os << buf;
}

bool all_pass(const std::vector<Result>& results)
{
    return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.pass(); });
}

}  // namespace grushin::verify
