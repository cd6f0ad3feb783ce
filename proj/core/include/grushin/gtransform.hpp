#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grushin/hankel.hpp"
#include "grushin/quadrature.hpp"
#include "grushin/types.hpp"

namespace grushin {

struct PlaneFunction {
    std::function<double(double, double)> eval;
    std::optional<Box> support_hint;
    quad::TruncationPolicy decay_r{};  // used when there is no support hint
    quad::TruncationPolicy decay_s{};
};

struct SpectralData {
    TypePair tp{0.0, 0.0};
    int n_max = 0;
    std::vector<double> tau_grid;
    std::vector<double> tau_weights;
    Matrix values;  // n_max x tau_grid.size()

    void validate() const;
};

struct Multiplier {
    std::function<double(double)> phi;
    bool bounded_hint = false;  // phi must stay finite on the sampled spectrum
};

}  // namespace grushin

namespace grushin::gt {

// Gaussian-decay rule on [0, 12]: 32 uniform panels of 8 points, refined geometrically near 0.
quad::HalfLineRule default_tau_rule();

struct TransformOptions {
    int n_max = 96;
    quad::HalfLineRule tau_rule = default_tau_rule();
    int points_per_panel = 8;
};

// Theta(n, tau) = lambda_n tau, lambda_n = 2(2n + alpha + 1)
double theta(double alpha, int n, double tau);

// Quadrature rules used for the r and s directions of f.
quad::HalfLineRule r_rule_for(const PlaneFunction& f, double alpha, double tau_max, int n_max, int points_per_panel);
quad::HalfLineRule s_rule_for(const PlaneFunction& f, double tau_max, int points_per_panel);

SpectralData g_forward(const TypePair& tp, const PlaneFunction& f, const TransformOptions& opts = {});

// Same transform from samples f(r_i, s_j), stored row-major (i over rr, j over sr).
SpectralData g_forward_sampled(const TypePair& tp, const quad::HalfLineRule& rr, const quad::HalfLineRule& sr,
                               std::span<const double> samples, const TransformOptions& opts = {});

// f(r, s) = f1(r) f2(s)
SpectralData g_forward_separated(const TypePair& tp, const HalfLineFunction& f1, const HalfLineFunction& f2,
                                 const TransformOptions& opts = {});

// Laguerre in r first, Hankel in s second, with rules chosen per tau.
SpectralData g_forward_hat(const TypePair& tp, const PlaneFunction& f, const TransformOptions& opts = {});

std::vector<double> g_inverse(const SpectralData& sd, std::span<const Point> points);

// L2 norm over N x (0, inf) with the stored tau weights.
double plancherel_norm(const SpectralData& sd);

SpectralData apply_multiplier(const SpectralData& sd, const Multiplier& phi);

std::vector<double> functional_calculus(const TypePair& tp, const Multiplier& phi, const PlaneFunction& f,
                                        std::span<const Point> points, const TransformOptions& opts = {});

}  // namespace grushin::gt
