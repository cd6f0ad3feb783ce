#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "grushin/bump.hpp"
#include "grushin/laguerre.hpp"
#include "grushin/specfun.hpp"
#include "oracles.hpp"

using namespace grushin;
using namespace grushin::laguerre;

namespace {

HalfLineFunction skew_gaussian(double a)
{
    HalfLineFunction f{[a](double r) { return std::pow(r, a + 0.5) * std::exp(-r * r / 2); }, std::nullopt, {}};
    f.decay_hint.abs_tol = 1e-16;
    return f;
}

}  // namespace

TEST_CASE("oracle values")
{
    CHECK(example1_oracle(0.0, 1, 1.0) == 0.0);
    CHECK(example1_oracle(0.0, 0, 1.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    for (double a : {-0.5, 0.0, 1.7})
        for (int n : {0, 1, 7, 20})
            for (double tau : {0.25, 2.0})
                CHECK(example1_oracle(a, n, tau) == doctest::Approx(oracle::example1(a, n, tau)).epsilon(1e-12));
    for (double a : {0.0, 0.5})
        for (double tau : {0.3, 1.0, 2.5}) {
            double s = 0.0;
            for (int n = 0; n < 400; ++n)
                s += std::pow(example1_oracle(a, n, tau), 2);
            CHECK(s == doctest::Approx(std::tgamma(a + 1) / 2).epsilon(1e-12));
        }
}

TEST_CASE("analysis of the skewed gaussian")
{
    double worst = 0.0;
    for (double a : {-0.5, 0.0, 0.5, 1.7}) {
        const auto f = skew_gaussian(a);
        for (double tau : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const auto c = laguerre_analyze(a, tau, f, 21);
            for (int n = 0; n <= 20; ++n)
                worst = std::max(worst, std::abs(c.values[n] - oracle::example1(a, n, tau)));
        }
    }
    CHECK(worst < 1e-8);

    const auto c = laguerre_analyze(0.0, 1.0, skew_gaussian(0.0), 5);
    CHECK(c.values[0] == doctest::Approx(0.70710678).epsilon(1e-8));
    for (int n = 1; n < 5; ++n)
        CHECK(std::abs(c.values[n]) < 1e-12);
}

TEST_CASE("truncated parseval sum")
{
    for (double a : {0.0, 0.5}) {
        const auto c = laguerre_analyze(a, 0.5, skew_gaussian(a), 200);
        double s = 0.0, prev = -1.0;
        for (double v : c.values) {
            s += v * v;
            CHECK(s >= prev);
            prev = s;
        }
        CHECK(std::abs(s - std::tgamma(a + 1) / 2) < 1e-6);
    }
}

TEST_CASE("analysis of a basis function")
{
    const double a = 0.4, tau = 1.6;
    HalfLineFunction f{[&](double r) { return specfun::laguerre_fn({3, a, tau}, r); }, std::nullopt, {}};
    f.decay_hint.abs_tol = 1e-16;
    f.decay_hint.scale = 1.0 / std::sqrt(tau);
    const auto c = laguerre_analyze(a, tau, f, 8);
    for (int n = 0; n < 8; ++n)
        CHECK(std::abs(c.values[n] - (n == 3 ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("synthesis")
{
    LaguerreCoeffs e0{0.3, 1.0, {1.0, 0.0, 0.0}};
    const std::vector<double> rs{0.2, 1.0, 2.7};
    const auto v = laguerre_synthesize(e0, rs);
    for (std::size_t i = 0; i < rs.size(); ++i)
        CHECK(v[i] == doctest::Approx(oracle::hermite_laguerre(0, 0.3, 1.0, rs[i])).epsilon(1e-12));
    LaguerreCoeffs z{0.3, 1.0, std::vector<double>(10, 0.0)};
    for (double x : laguerre_synthesize(z, rs))
        CHECK(x == 0.0);
}

TEST_CASE("round trip on bumps")
{
    const std::vector<Bump> bumps{{1.5, 1.0, 4.0}, {2.0, 1.2, 3.0}};
    for (double a : {-0.5, 0.0, 1.2})
        for (const Bump& b : bumps) {
            const HalfLineFunction f{b, b.support(), {}};
            const auto c = laguerre_analyze(a, 4.0, f, 128);
            const auto rule = quad::interval_rule(0.0, 5.0, 0.01, 8, 10);
            const auto g = laguerre_synthesize(c, rule.nodes);
            double err = 0.0, nrm = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double fv = b(rule.nodes[i]);
                err += rule.weights[i] * (g[i] - fv) * (g[i] - fv);
                nrm += rule.weights[i] * fv * fv;
            }
            CHECK(std::sqrt(err / nrm) < 1e-4);
        }
}
