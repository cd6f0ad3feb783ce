#pragma once

#include <span>
#include <vector>

#include "grushin/types.hpp"

namespace grushin::specfun {

double log_gamma(double x);

double bessel_j(double nu, double x);
double bessel_i(double nu, double x);
// e^{-x} I_nu(x)
double bessel_i_scaled(double nu, double x);

// J_nu(x)/x^nu and e^{-x} I_nu(x)/x^nu; both finite at x = 0 for every nu > -1.
double bessel_j_normalized(double nu, double x);
double bessel_i_scaled_normalized(double nu, double x);

double laguerre_poly(int n, double alpha, double x);

// c_{n,alpha} = sqrt(2 Gamma(n+1) / Gamma(n+alpha+1))
double laguerre_norm(int n, double alpha);

// Hermite-type Laguerre function tau^{1/4} l_n(sqrt(tau) r).
double laguerre_fn(const LaguerreIndex& idx, double r);

// Precomputed recurrence coefficients for l_{n,tau}, n < n_max, fixed alpha.
class LaguerreRecurrence {
public:
    LaguerreRecurrence(double alpha, int n_max);
    int n_max() const { return static_cast<int>(b_.size()) + 1; }
    double alpha() const { return alpha_; }
    // out[n] = l_{n,tau}(r), out.size() <= n_max
    void eval(double tau, double r, std::span<double> out) const;

private:
    double alpha_;
    double log_norm0_;
    std::vector<double> a_;  // sqrt(n (n + alpha))
    std::vector<double> b_;  // 1 / sqrt((n + 1)(n + alpha + 1))
};

// out[n] = l_{n,tau}(r) for n = 0 .. out.size()-1.
void laguerre_fn_sequence(double alpha, double tau, double r, std::span<double> out);

}  // namespace grushin::specfun
