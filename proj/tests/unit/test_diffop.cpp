#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "grushin/bump.hpp"
#include "grushin/diffop.hpp"
#include "oracles.hpp"

using namespace grushin;
using diffop::Conjugation;

namespace {

const Interval box{0.25, 4.0};
const Bump br{1.75, 1.25, 2.0};
const Bump bs{1.6, 1.1, 2.0};

int nodes_for(int inv_h)
{
    return static_cast<int>(3.75 * inv_h);
}

GridFunction2D separable(const std::function<double(double)>& fr, const std::function<double(double)>& fs, int inv_h)
{
    auto g = GridFunction2D::sample([](double, double) { return 0.0; }, box, box, nodes_for(inv_h), nodes_for(inv_h));
    std::vector<double> vs(g.s_nodes.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        vs[j] = fs(g.s_nodes[j]);
    for (std::size_t i = 0; i < g.r_nodes.size(); ++i) {
        const double vr = fr(g.r_nodes[i]);
        for (std::size_t j = 0; j < vs.size(); ++j)
            g.values(i, j) = vr * vs[j];
    }
    return g;
}

GridFunction2D bump_grid(int inv_h)
{
    return separable(br, bs, inv_h);
}

GridFunction2D scaled(const GridFunction2D& g, double c)
{
    GridFunction2D out = g;
    for (double& x : out.values.data())
        x *= c;
    return out;
}

// residuals at h = 1/128, 1/256, 1/512 must each drop by an order >= 1.9
void check_order(const std::function<double(int)>& residual)
{
    const double e1 = residual(128);
    const double e2 = residual(256);
    const double e3 = residual(512);
    INFO("residuals " << e1 << " " << e2 << " " << e3);
    CHECK(diffop::observed_order(e1, e2) >= 1.9);
    CHECK(diffop::observed_order(e2, e3) >= 1.9);
    CHECK(e3 < 1e-3);
}

// exact G_{a,b} of the bump product, from the closed-form derivatives
double exact_G_weighted(double a, double b, double r, double s)
{
    return -(br.d2(r) + (2 * a + 1) / r * br.d1(r)) * bs(s) - r * r * br(r) * (bs.d2(s) + (2 * b + 1) / s * bs.d1(s));
}

}  // namespace

TEST_CASE("eigenfunctions of the Liouville form")
{
    for (const auto [a, b, n, tau] : {std::tuple{0.3, 0.7, 3, 2.0}, std::tuple{-0.4, -0.3, 1, 1.0},
                                      std::tuple{1.5, 0.0, 5, 0.7}}) {
        CAPTURE(a);
        CAPTURE(b);
        const double lambda = 2.0 * (2 * n + a + 1);
        check_order([&](int inv_h) {
            const auto g = separable([&](double r) { return oracle::hermite_laguerre(n, a, tau, r); },
                                     [&](double s) { return std::sqrt(tau * s) * static_cast<double>(oracle::bessel_series(b, tau * s, -1)); },
                                     inv_h);
            return diffop::max_abs_diff(diffop::apply_G_circ(a, b, g), scaled(g.interior(1), lambda * tau)) /
                   diffop::max_abs(g);
        });
    }
}

TEST_CASE("one-dimensional Laguerre operator")
{
    const double a = 0.6;
    const double tau = 1.3;
    const int n = 4;
    std::vector<double> res;
    for (int inv_h : {128, 256, 512}) {
        std::vector<double> r(nodes_for(inv_h) + 1), v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = box.lo + (box.hi - box.lo) * static_cast<double>(i) / static_cast<double>(r.size() - 1);
            v[i] = oracle::hermite_laguerre(n, a, tau, r[i]);
        }
        const auto lv = diffop::apply_L_circ(a, tau, r, v);
        double e = 0.0;
        for (std::size_t i = 0; i < lv.size(); ++i)
            e = std::max(e, std::abs(lv[i] - 2.0 * (2 * n + a + 1) * tau * v[i + 1]));
        res.push_back(e);
    }
    CHECK(diffop::observed_order(res[0], res[1]) >= 1.9);
    CHECK(diffop::observed_order(res[1], res[2]) >= 1.9);
}

TEST_CASE("half-integer reduction")
{
    const auto g = bump_grid(64);
    const auto out = diffop::apply_G_circ(0.5, 0.5, g);
    const double hr = g.hr();
    const double hs = g.hs();
    double diff = 0.0;
    for (std::size_t i = 1; i + 1 < g.r_nodes.size(); ++i)
        for (std::size_t j = 1; j + 1 < g.s_nodes.size(); ++j) {
            const double r = g.r_nodes[i];
            const double direct = -(g(i + 1, j) - 2 * g(i, j) + g(i - 1, j)) / (hr * hr) -
                                  r * r * (g(i, j + 1) - 2 * g(i, j) + g(i, j - 1)) / (hs * hs);
            diff = std::max(diff, std::abs(out(i - 1, j - 1) - direct));
        }
    CHECK(diff / diffop::max_abs(out) < 1e-13);
}

TEST_CASE("zero grid")
{
    const auto g = GridFunction2D::sample([](double, double) { return 0.0; }, box, box, 40, 40);
    CHECK(diffop::max_abs(diffop::apply_G_circ(0.3, -0.2, g)) == 0.0);
    CHECK(diffop::max_abs(diffop::apply_G_weighted(0.3, -0.2, g)) == 0.0);
    CHECK(diffop::delta_factorization_residual(0.3, -0.2, g) == 0.0);
}

TEST_CASE("factorization through the delta-derivatives")
{
    for (const auto [a, b] : {std::pair{0.3, 0.7}, std::pair{-0.6, 1.2}, std::pair{2.0, -0.5}})
        check_order([&](int inv_h) {
            const auto g = bump_grid(inv_h);
            return diffop::delta_factorization_residual(a, b, g) / diffop::max_abs(diffop::apply_G_circ(a, b, g));
        });

    // at a = b = -1/2 only the stencils differ: -D D g versus the compact second difference
    const auto g = bump_grid(64);
    const double hr = g.hr();
    const double hs = g.hs();
    double expected = 0.0;
    for (std::size_t i = 2; i + 2 < g.r_nodes.size(); ++i)
        for (std::size_t j = 2; j + 2 < g.s_nodes.size(); ++j) {
            const double r = g.r_nodes[i];
            const double wide = -(g(i + 2, j) - 2 * g(i, j) + g(i - 2, j)) / (4 * hr * hr) -
                                r * r * (g(i, j + 2) - 2 * g(i, j) + g(i, j - 2)) / (4 * hs * hs);
            const double compact = -(g(i + 1, j) - 2 * g(i, j) + g(i - 1, j)) / (hr * hr) -
                                   r * r * (g(i, j + 1) - 2 * g(i, j) + g(i, j - 1)) / (hs * hs);
            expected = std::max(expected, std::abs(wide - compact));
        }
    CHECK(diffop::delta_factorization_residual(-0.5, -0.5, g) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("U intertwines the weighted and Liouville forms")
{
    for (const auto [a, b] : {std::pair{0.3, 0.7}, std::pair{-0.6, 0.0}, std::pair{1.5, -0.5}})
        check_order([&](int inv_h) {
            const auto g = bump_grid(inv_h);
            const auto lhs =
                diffop::conjugate(Conjugation::U_alphabeta, a, b, diffop::apply_G_weighted(a, b, g));
            const auto rhs = diffop::apply_G_circ(a, b, diffop::conjugate(Conjugation::U_alphabeta, a, b, g));
            return diffop::max_abs_diff(lhs, rhs) / diffop::max_abs(rhs);
        });
}

TEST_CASE("V identities")
{
    const double a = 0.6;
    const double b = 0.8;
    // G_{a,b} V_{a,b} = V_{a,b} G_{-a,-b}, and the mixed forms
    for (const auto [va, vb] : {std::pair{a, b}, std::pair{a, 0.0}, std::pair{0.0, b}}) {
        CAPTURE(va);
        CAPTURE(vb);
        const double ga = va == 0.0 ? a : -a;
        const double gb = vb == 0.0 ? b : -b;
        check_order([&](int inv_h) {
            const auto g = bump_grid(inv_h);
            const auto lhs = diffop::apply_G_weighted(a, b, diffop::conjugate(Conjugation::V_alphabeta, va, vb, g));
            const auto rhs = diffop::conjugate(Conjugation::V_alphabeta, va, vb, diffop::apply_G_weighted(ga, gb, g));
            return diffop::max_abs_diff(lhs, rhs) / diffop::max_abs(rhs);
        });
    }
}

TEST_CASE("parabolic homogeneity")
{
    const double a = 0.4;
    const double b = -0.3;
    for (const double tau : {0.8, 1.25}) {
        CAPTURE(tau);
        check_order([&](int inv_h) {
            const auto g = separable([&](double r) { return br(tau * r); }, [&](double s) { return bs(tau * tau * s); },
                                     inv_h);
            const auto out = diffop::apply_G_weighted(a, b, g);
            auto expected = out;
            for (std::size_t i = 0; i < out.r_nodes.size(); ++i)
                for (std::size_t j = 0; j < out.s_nodes.size(); ++j)
                    expected.values(i, j) =
                        tau * tau * exact_G_weighted(a, b, tau * out.r_nodes[i], tau * tau * out.s_nodes[j]);
            return diffop::max_abs_diff(out, expected) / diffop::max_abs(expected);
        });
    }
}

TEST_CASE("symmetric and nonnegative on bumps")
{
    const Bump other{2.0, 1.0, 1.0};
    for (const auto [a, b] : {std::pair{0.0, 0.0}, std::pair{-0.4, 0.9}}) {
        std::vector<double> asym;
        for (int inv_h : {64, 128}) {
            const auto phi = bump_grid(inv_h);
            const auto psi = separable(other, br, inv_h);
            const double lhs = diffop::inner(diffop::apply_G_circ(a, b, phi), psi.interior(1));
            const double rhs = diffop::inner(phi.interior(1), diffop::apply_G_circ(a, b, psi));
            asym.push_back(std::abs(lhs - rhs) / std::abs(lhs));
            CHECK(diffop::inner(diffop::apply_G_circ(a, b, phi), phi.interior(1)) > 0.0);
        }
        CHECK(asym[1] <= asym[0] / 3.5 + 1e-13);
        CHECK(asym[1] < 1e-4);
    }
}

TEST_CASE("conjugation round trips")
{
    const auto g = bump_grid(32);
    for (const auto kind : {Conjugation::U_alpha, Conjugation::U_alphabeta, Conjugation::V_alphabeta}) {
        const auto back = diffop::conjugate(kind, 0.7, -0.4, diffop::conjugate(kind, 0.7, -0.4, g), true);
        CHECK(diffop::max_abs_diff(back, g) <= 1e-15 * 4);
    }
    std::vector<double> r{0.5, 1.0, 2.0}, v{1.0, -2.0, 3.0};
    const auto u = diffop::conjugate_U_alpha(0.25, r, v);
    CHECK(u[2] == doctest::Approx(3.0 * std::pow(2.0, 0.75)));
    const auto back = diffop::conjugate_U_alpha(0.25, r, u, true);
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-15));
}

TEST_CASE("grid errors")
{
    auto g = GridFunction2D::sample([](double r, double s) { return r * s; }, box, box, 1, 10);
    CHECK_THROWS_AS(diffop::apply_G_circ(0.0, 0.0, g), GridError);
    CHECK_THROWS_AS(diffop::delta_factorization_residual(0.0, 0.0, GridFunction2D::sample([](double r, double s) { return r * s; }, box, box, 3, 10)), GridError);

    auto uneven = GridFunction2D::sample([](double r, double s) { return r * s; }, box, box, 10, 10);
    uneven.r_nodes[3] += 0.01;
    CHECK_THROWS_AS(diffop::apply_G_circ(0.0, 0.0, uneven), GridError);

    auto bad = GridFunction2D::sample([](double r, double s) { return r * s; }, box, box, 10, 10);
    bad.values(4, 4) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(diffop::apply_G_weighted(0.0, 0.0, bad), GridError);

    auto negative = GridFunction2D::sample([](double r, double s) { return r * s; }, {-1.0, 1.0}, box, 10, 10);
    CHECK_THROWS_AS(diffop::apply_G_circ(0.0, 0.0, negative), GridError);
    CHECK_THROWS_AS(diffop::max_abs_diff(g, bad), GridError);
}
