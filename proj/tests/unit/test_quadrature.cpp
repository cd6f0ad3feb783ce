#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grushin/quadrature.hpp"
#include "grushin/specfun.hpp"

using namespace grushin::quad;

namespace {

TruncationPolicy policy(DecayHint hint, double tol)
{
    TruncationPolicy p;
    p.decay_hint = hint;
    p.abs_tol = tol;
    return p;
}

}  // namespace

TEST_CASE("upper cut from the decay hint")
{
    CHECK(upper_cut_for(policy(DecayHint::gaussian, 1e-12)) >= 8.0);
    CHECK(std::exp(-0.5 * 64.0) < 1e-12);
    CHECK(upper_cut_for(policy(DecayHint::exponential, 1e-10)) >= 24.0);
    auto alg = policy(DecayHint::algebraic_oscillatory, 1e-4);
    alg.algebraic_power = 3.0;
    CHECK(upper_cut_for(alg) == doctest::Approx(std::sqrt(0.5e4)).epsilon(1e-12));
}

TEST_CASE("rule structure")
{
    auto p = policy(DecayHint::gaussian, 1e-12);
    const auto rule = build_rule(p, 8);
    CHECK_NOTHROW(rule.validate());
    CHECK(rule.kind == RuleKind::composite_legendre);
    CHECK(rule.nodes.front() < std::ldexp(rule.upper_cut, -20));
    CHECK_THROWS_AS(build_rule(p, 3), QuadratureError);

    auto osc = policy(DecayHint::exponential, 1e-10);
    osc.frequency = 10.0;
    const auto r2 = build_rule(osc, 8);
    // every panel is 8 nodes; check the widest panel against pi/(2*freq)
    double widest = 0.0;
    for (std::size_t i = 0; i + 8 <= r2.size(); i += 8) {
        double w = 0.0;
        for (std::size_t j = i; j < i + 8; ++j)
            w += r2.weights[j];
        widest = std::max(widest, w);
    }
    CHECK(widest <= std::numbers::pi / 20.0 + 1e-14);
    CHECK(integrate([](double u) { return std::exp(-u) * std::sin(10.0 * u); }, r2) ==
          doctest::Approx(10.0 / 101.0).epsilon(1e-10));
}

TEST_CASE("too many panels is an error")
{
    auto p = policy(DecayHint::algebraic_oscillatory, 1e-10);
    p.max_panels = 1000;
    try {
        (void)build_rule(p, 8);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::string(e.what()).find("max_panels") != std::string::npos);
    }
}

TEST_CASE("basic integrals")
{
    const auto re = build_rule(policy(DecayHint::exponential, 1e-12), 8);
    CHECK(std::abs(integrate([](double u) { return std::exp(-u); }, re) - 1.0) < 1e-10);
    const auto rg = build_rule(policy(DecayHint::gaussian, 1e-12), 8);
    CHECK(std::abs(integrate([](double u) { return std::exp(-u * u); }, rg) - std::sqrt(std::numbers::pi) / 2) < 1e-10);
    const double a = 0.25;
    const double got = integrate([&](double u) { return std::pow(u, 2 * a + 1) * std::exp(-u * u); }, rg);
    CHECK(std::abs(got - std::exp(grushin::specfun::log_gamma(a + 1)) / 2) < 1e-9);
}

TEST_CASE("refinement, positivity, linearity")
{
    for (auto hint : {DecayHint::exponential, DecayHint::gaussian}) {
        const auto p = policy(hint, 1e-12);
        const auto r8 = build_rule(p, 8), r16 = build_rule(p, 16);
        auto f = [](double u) { return std::exp(-u) + std::exp(-u * u) + std::pow(u, 1.5) * std::exp(-u * u); };
        CHECK(std::abs(integrate(f, r8) - integrate(f, r16)) < 1e-12);
        CHECK(integrate([](double u) { return 1e-30 * std::exp(-u); }, r8) > 0.0);
        auto g = [](double u) { return std::cos(u) * std::exp(-u); };
        const double lhs = integrate([&](double u) { return 2.5 * f(u) - 1.5 * g(u); }, r8);
        const double rhs = 2.5 * integrate(f, r8) - 1.5 * integrate(g, r8);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
    }
}

TEST_CASE("singular endpoint")
{
    auto p = policy(DecayHint::gaussian, 1e-14);
    const auto rule = build_rule(p, 10);
    // u^{2a+1} e^{-u^2} is integrable but unbounded for a < -1/2; the first
    // panel [0, eps] carries an error of order eps^{2a+2}
    for (double a : {-0.3, -0.6, -0.8}) {
        const double got = integrate([&](double u) { return std::pow(u, 2 * a + 1) * std::exp(-u * u); }, rule);
        const double eps = std::ldexp(rule.upper_cut, -20);
        // bound: half the mass of the first panel
        CHECK(std::abs(got - std::tgamma(a + 1) / 2) < 0.5 * std::pow(eps, 2 * a + 2) / (2 * a + 2) + 1e-12);
    }
}

TEST_CASE("non-finite integrand reports the node")
{
    const auto rule = build_rule(policy(DecayHint::exponential, 1e-8), 8);
    try {
        (void)integrate([](double u) { return u > 3.0 ? std::nan("") : 1.0; }, rule);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.node() > 3.0);
    }
}

TEST_CASE("other rule kinds")
{
    const auto gl = gauss_laguerre_rule(40);
    CHECK(gl.kind == RuleKind::exp_weighted);
    CHECK_NOTHROW(gl.validate());
    CHECK(integrate([](double u) { return std::exp(-u) * u * u; }, gl) == doctest::Approx(2.0).epsilon(1e-12));
    const auto gl2 = gauss_laguerre_rule(40, 0.5);
    CHECK(integrate([](double u) { return std::exp(-2 * u); }, gl2) == doctest::Approx(0.5).epsilon(1e-12));
    const auto mp = mapped_rule(200, 1.0);
    CHECK(mp.kind == RuleKind::mapped);
    CHECK(integrate([](double u) { return 1.0 / ((1 + u) * (1 + u)); }, mp) == doctest::Approx(1.0).epsilon(1e-12));
    const auto iv = interval_rule(1.0, 3.0, 0.3, 8);
    CHECK(integrate([](double u) { return u * u; }, iv) == doctest::Approx(26.0 / 3.0).epsilon(1e-14));
}
