#pragma once

#include <span>
#include <vector>

#include "grushin/hankel.hpp"
#include "grushin/types.hpp"

namespace grushin::laguerre {

struct LaguerreCoeffs {
    double alpha = 0.0;
    double tau = 1.0;
    std::vector<double> values;  // index n = 0 .. n_max-1
    int n_max() const { return static_cast<int>(values.size()); }
};

// Panel width resolving l_{n,tau} for all n < n_max.
double panel_width(double alpha, double tau, int n_max);

LaguerreCoeffs laguerre_analyze(Order alpha, double tau, const HalfLineFunction& f, int n_max = 128,
                                int points_per_panel = 8);

// Same coefficients from samples of f on a fixed rule.
LaguerreCoeffs laguerre_analyze_samples(Order alpha, double tau, const quad::HalfLineRule& rule,
                                        std::span<const double> samples, int n_max);

std::vector<double> laguerre_synthesize(const LaguerreCoeffs& coeffs, std::span<const double> rs);

// Closed-form coefficients of r^{alpha+1/2} e^{-r^2/2}.
double example1_oracle(Order alpha, int n, double tau);

}  // namespace grushin::laguerre
