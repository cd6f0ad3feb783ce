#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "grushin/bump.hpp"
#include "grushin/hankel.hpp"

using namespace grushin;

namespace {

HalfLineFunction exp_decay(std::function<double(double)> f)
{
    HalfLineFunction h{std::move(f), std::nullopt, {}};
    h.decay_hint.decay_hint = quad::DecayHint::exponential;
    h.decay_hint.abs_tol = 1e-15;
    return h;
}

HalfLineFunction gauss_decay(std::function<double(double)> f)
{
    HalfLineFunction h{std::move(f), std::nullopt, {}};
    h.decay_hint.abs_tol = 1e-16;
    return h;
}

struct Tabulated {
    quad::HalfLineRule rule;
    std::vector<double> values;
};

Tabulated tabulate(const Bump& b)
{
    Tabulated t{quad::interval_rule(b.support().lo, b.support().hi, 0.0125, 8), {}};
    for (double u : t.rule.nodes)
        t.values.push_back(b(u));
    return t;
}

double norm2(const quad::HalfLineRule& rule, const std::vector<double>& v)
{
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += rule.weights[i] * v[i] * v[i];
    return s;
}

}  // namespace

TEST_CASE("modified transform: cosine case")
{
    const auto f = exp_decay([](double u) { return std::exp(-u); });
    const std::vector<double> taus{0.0, 1.0};
    const auto h = hankel::hankel_modified(-0.5, f, taus);
    CHECK(h[0] == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-10));
    CHECK(h[0] == doctest::Approx(0.79788456).epsilon(1e-8));
    CHECK(h[1] == doctest::Approx(std::sqrt(2.0 / std::numbers::pi) / 2).epsilon(1e-10));
    CHECK(h[1] == doctest::Approx(0.39894228).epsilon(1e-8));
}

TEST_CASE("modified transform: gaussian is invariant")
{
    const auto f = gauss_decay([](double u) { return std::exp(-u * u / 2); });
    const std::vector<double> taus{0.5, 1.0, 2.0};
    const auto h = hankel::hankel_modified(0.3, f, taus);
    for (std::size_t k = 0; k < taus.size(); ++k)
        CHECK(h[k] == doctest::Approx(std::exp(-taus[k] * taus[k] / 2)).epsilon(1e-10));
    // composed twice
    const auto hh = hankel::hankel_modified_inverse(-0.5, gauss_decay([](double u) {
        return hankel::hankel_modified(-0.5, gauss_decay([](double v) { return std::exp(-v * v / 2); }),
                                       std::vector<double>{u})[0];
    }), std::vector<double>{0.3, 1.7});
    CHECK(hh[0] == doctest::Approx(std::exp(-0.045)).epsilon(1e-8));
    CHECK(hh[1] == doctest::Approx(std::exp(-1.445)).epsilon(1e-8));
}

TEST_CASE("liouville transform: closed forms")
{
    for (double beta : {-0.5, 0.0, 0.7, 2.0}) {
        const auto f = gauss_decay([&](double s) { return std::pow(s, beta + 0.5) * std::exp(-s * s / 2); });
        const std::vector<double> taus{0.3, 1.0, 2.5};
        const auto h = hankel::hankel_liouville(beta, f, taus);
        for (std::size_t k = 0; k < taus.size(); ++k)
            CHECK(h[k] == doctest::Approx(f.eval(taus[k])).epsilon(1e-10));
    }
    const auto g = exp_decay([](double u) { return std::exp(-u); });
    const std::vector<double> taus{0.5, 1.0, 3.0};
    const auto h = hankel::hankel_liouville(0.5, g, taus);
    for (std::size_t k = 0; k < taus.size(); ++k)
        CHECK(h[k] ==
              doctest::Approx(std::sqrt(2 / std::numbers::pi) * taus[k] / (1 + taus[k] * taus[k])).epsilon(1e-10));
    CHECK_THROWS_AS(hankel::hankel_liouville(0.5, g, std::vector<double>{0.0}), DomainError);
}

TEST_CASE("zero function")
{
    const HalfLineFunction z{[](double) { return 0.0; }, Interval{0.5, 2.0}, {}};
    for (double v : hankel::hankel_liouville_inverse(0.2, z, std::vector<double>{0.5, 4.0}))
        CHECK(v == 0.0);
}

TEST_CASE("plancherel on a bump")
{
    const Bump b{1.5, 0.5, 1.0};
    const auto t = tabulate(b);
    const double f2 = norm2(t.rule, t.values);
    const auto tau_rule = quad::interval_rule(0.0, 160.0, 0.5, 8, 20);
    for (double beta : {-0.5, 0.0, 0.5, 0.7, 1.3}) {
        const auto h = hankel::hankel_liouville_samples(beta, t.rule, t.values, tau_rule.nodes);
        CHECK(std::abs(norm2(tau_rule, h) - f2) / f2 < 1e-6);
    }
}

TEST_CASE("self-inverse on a bump")
{
    // the L2 error is the square root of the energy beyond the tau cut, so a
    // sharper bump is used here
    const Bump b{1.5, 0.5, 4.0};
    const auto t = tabulate(b);
    const double f2 = norm2(t.rule, t.values);
    const auto tau_rule = quad::interval_rule(0.0, 160.0, 0.5, 8, 20);
    const auto out_rule = quad::interval_rule(0.0, 3.5, 0.025, 8, 10);
    for (double beta : {-0.5, 0.0, 0.4, 1.3}) {
        const auto h = hankel::hankel_liouville_samples(beta, t.rule, t.values, tau_rule.nodes);
        const auto back = hankel::hankel_liouville_samples(beta, tau_rule, h, out_rule.nodes);
        double err = 0.0;
        for (std::size_t i = 0; i < out_rule.size(); ++i) {
            const double d = back[i] - b(out_rule.nodes[i]);
            err += out_rule.weights[i] * d * d;
        }
        CHECK(std::sqrt(err / f2) < 1e-5);
    }
}

TEST_CASE("liouville form is the conjugated modified form")
{
    // H°_a g = U_a H_a U_a^{-1} g with U_a f = u^{a+1/2} f
    for (double a : {-0.5, 0.2, 1.1}) {
        const HalfLineFunction g{[](double u) { return Bump{1.2, 0.6, 2.0}(u); }, Interval{0.6, 1.8}, {}};
        const HalfLineFunction ug{[&](double u) { return std::pow(u, -a - 0.5) * g.eval(u); }, g.support_hint, {}};
        const std::vector<double> taus{0.4, 1.3, 5.0};
        const auto lhs = hankel::hankel_liouville(a, g, taus);
        const auto mid = hankel::hankel_modified(a, ug, taus);
        for (std::size_t k = 0; k < taus.size(); ++k)
            CHECK(std::abs(lhs[k] - std::pow(taus[k], a + 0.5) * mid[k]) < 1e-8);
    }
}
