#include "grushin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace grushin {

Order::Order(double nu) : nu_(nu)
{
    if (!(nu > -1.0))
        throw DomainError("order must be > -1, got " + std::to_string(nu));
}

LaguerreIndex::LaguerreIndex(int n_, double alpha_, double tau_) : n(n_), alpha(alpha_), tau(tau_)
{
    if (n < 0)
        throw DomainError("laguerre index n must be >= 0");
    if (!(alpha > -1.0))
        throw DomainError("laguerre alpha must be > -1");
    if (!(tau > 0.0))
        throw DomainError("laguerre tau must be > 0");
}

}  // namespace grushin

namespace grushin::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;
constexpr int kMaxIter = 200000;
constexpr double kAsymptoticFrom = 25.0;

void check_args(double nu, double x, const char* who)
{
    if (!(nu > -1.0))
        throw DomainError(std::string(who) + ": order must be > -1");
    if (!(x >= 0.0))
        throw DomainError(std::string(who) + ": argument must be >= 0");
    if (x == 0.0 && nu < 0.0)
        throw DomainError(std::string(who) + ": x = 0 with negative order");
}

// sum_k (sign q)^k / (k! (nu+1)_k)
double hyp0f1(double nu, double q, double sign)
{
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= sign * q / (k * (nu + k));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

bool j_series_regime(double nu, double x)
{
    return x < 2.0 || x * x < 2.0 * (nu + 1.0);
}

bool i_series_regime(double nu, double x)
{
    return x < std::max(12.0, 2.0 * std::abs(nu));
}

// Hankel expansion for J_nu at large x.  Returns false if the terms stop
// shrinking before reaching round-off.
bool j_asymptotic(double nu, double x, double& out)
{
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0, term = 1.0, prev = 1.0;
    bool ok = false;
    for (int k = 1; k < 60; ++k) {
        const double m = 2.0 * k - 1.0;
        term *= (mu - m * m) / (k * 8.0 * x);
        const double a = std::abs(term);
        if (a > prev)
            break;
        prev = a;
        // k odd feeds Q, k even feeds P, signs alternate in pairs
        const int r = k % 4;
        if (r == 1) q += term;
        else if (r == 2) p -= term;
        else if (r == 3) q -= term;
        else p += term;
        if (a < 1e-17) {
            ok = true;
            break;
        }
    }
    if (!ok)
        return false;
    const double w = x - (0.5 * nu + 0.25) * kPi;
    out = std::sqrt(2.0 / (kPi * x)) * (p * std::cos(w) - q * std::sin(w));
    return true;
}

bool i_scaled_asymptotic(double nu, double x, double& out)
{
    const double mu = 4.0 * nu * nu;
    double sum = 1.0, term = 1.0, prev = 1.0;
    bool ok = false;
    for (int k = 1; k < 60; ++k) {
        const double m = 2.0 * k - 1.0;
        term *= -(mu - m * m) / (k * 8.0 * x);
        const double a = std::abs(term);
        if (a > prev)
            break;
        prev = a;
        sum += term;
        if (a < 1e-17) {
            ok = true;
            break;
        }
    }
    if (!ok)
        return false;
    out = sum / std::sqrt(2.0 * kPi * x);
    return true;
}

struct JY {
    double j;
    double y;
};

// Steed's method, nu >= 0, x >= 2.
JY steed_jy(double nu, double x)
{
    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x, xi2 = 2.0 * xi, w = xi2 / kPi;

    int isign = 1;
    double h = nu * xi;
    if (h < kFpMin)
        h = kFpMin;
    double b = xi2 * nu, d = 0.0, c = h;
    int i = 0;
    for (; i < kMaxIter; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kFpMin)
            d = kFpMin;
        c = b - 1.0 / c;
        if (std::abs(c) < kFpMin)
            c = kFpMin;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0)
            isign = -isign;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    if (i == kMaxIter)
        throw DomainError("bessel_j: continued fraction did not converge");

    double rjl = isign * kFpMin, rjpl = h * rjl;
    const double rjl1 = rjl;
    double lscale = 0.0;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double t = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * t - rjl;
        rjl = t;
        if (std::abs(rjl) > 1e200) {
            rjl *= 1e-200;
            rjpl *= 1e-200;
            lscale += 200.0;
        }
    }
    if (rjl == 0.0)
        rjl = kEps;
    const double f = rjpl / rjl;

    double a = 0.25 - xmu2, p = -0.5 * xi, q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fc = a * xi / (p * p + q * q);
    double cr = br + q * fc, ci = bi + p * fc;
    double den = br * br + bi * bi;
    double dr = br / den, di = -bi / den;
    double dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
    double tmp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = tmp;
    for (i = 2; i < kMaxIter; ++i) {
        a += 2.0 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::abs(dr) + std::abs(di) < kFpMin)
            dr = kFpMin;
        fc = a / (cr * cr + ci * ci);
        cr = br + cr * fc;
        ci = bi - ci * fc;
        if (std::abs(cr) + std::abs(ci) < kFpMin)
            cr = kFpMin;
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        tmp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = tmp;
        if (std::abs(dlr - 1.0) + std::abs(dli) < kEps)
            break;
    }
    if (i == kMaxIter)
        throw DomainError("bessel_j: second continued fraction did not converge");

    const double gam = (p - f) / q;
    double rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    double rymu = rjmu * gam;
    const double rymup = rymu * (p + q / gam);
    double ry1 = xmu * xi * rymu - rymup;
    const double rj = rjl1 * (rjmu / rjl) * std::pow(10.0, -lscale);
    for (int k = 1; k <= nl; ++k) {
        const double t = (xmu + k) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = t;
    }
    return {rj, rymu};
}

struct IK {
    double i;  // e^{-x} I_nu
    double k;  // e^{x} K_nu
};

// Steed/Temme continued fractions, nu >= 0, x >= 2; exponential factors dropped.
IK steed_ik_scaled(double nu, double x)
{
    const int nl = static_cast<int>(nu + 0.5);
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x, xi2 = 2.0 * xi;

    double h = nu * xi;
    if (h < kFpMin)
        h = kFpMin;
    double b = xi2 * nu, d = 0.0, c = h;
    int i = 0;
    for (; i < kMaxIter; ++i) {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    if (i == kMaxIter)
        throw DomainError("bessel_i: continued fraction did not converge");

    double ril = kFpMin, ripl = h * ril;
    const double ril1 = ril;
    double lscale = 0.0;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double t = fact * ril + ripl;
        fact -= xi;
        ripl = fact * t + ril;
        ril = t;
        if (std::abs(ril) > 1e200) {
            ril *= 1e-200;
            ripl *= 1e-200;
            lscale += 200.0;
        }
    }
    const double f = ripl / ril;

    b = 2.0 * (1.0 + x);
    d = 1.0 / b;
    h = d;
    double delh = d, q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - xmu2;
    double q = a1;
    c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (i = 2; i < kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps)
            break;
    }
    if (i == kMaxIter)
        throw DomainError("bessel_i: second continued fraction did not converge");
    h = a1 * h;
    double rkmu = std::sqrt(kPi / (2.0 * x)) / s;
    double rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    const double rkmup = xmu * xi * rkmu - rk1;
    const double rimu = xi / (f * rkmu - rkmup);
    const double ri = rimu * ril1 / ril * std::pow(10.0, -lscale);
    for (int k = 1; k <= nl; ++k) {
        const double t = (xmu + k) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = t;
    }
    return {ri, rkmu};
}

double j_large(double nu, double x)
{
    double v = 0.0;
    if (x >= kAsymptoticFrom && j_asymptotic(nu, x, v))
        return v;
    if (nu >= 0.0)
        return steed_jy(nu, x).j;
    const double mu = -nu;
    const JY jy = steed_jy(mu, x);
    return std::cos(mu * kPi) * jy.j - std::sin(mu * kPi) * jy.y;
}

double i_scaled_large(double nu, double x)
{
    double v = 0.0;
    if (x >= kAsymptoticFrom && i_scaled_asymptotic(nu, x, v))
        return v;
    if (nu >= 0.0)
        return steed_ik_scaled(nu, x).i;
    const double mu = -nu;
    const IK ik = steed_ik_scaled(mu, x);
    return ik.i + (2.0 / kPi) * std::sin(mu * kPi) * ik.k * std::exp(-2.0 * x);
}

}  // namespace

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("log_gamma: argument must be > 0");
    return std::lgamma(x);
}

double bessel_j(double nu, double x)
{
    check_args(nu, x, "bessel_j");
    if (x == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;
    if (j_series_regime(nu, x))
        return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0)) * hyp0f1(nu, 0.25 * x * x, -1.0);
    return j_large(nu, x);
}

double bessel_i_scaled(double nu, double x)
{
    check_args(nu, x, "bessel_i");
    if (x == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;
    if (i_series_regime(nu, x))
        return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) - x) * hyp0f1(nu, 0.25 * x * x, 1.0);
    return i_scaled_large(nu, x);
}

double bessel_i(double nu, double x)
{
    check_args(nu, x, "bessel_i");
    if (x == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;
    if (i_series_regime(nu, x))
        return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0)) * hyp0f1(nu, 0.25 * x * x, 1.0);
    return i_scaled_large(nu, x) * std::exp(x);
}

double bessel_j_normalized(double nu, double x)
{
    if (!(nu > -1.0) || !(x >= 0.0))
        throw DomainError("bessel_j_normalized: bad arguments");
    if (j_series_regime(nu, x))
        return std::exp(-nu * std::numbers::ln2 - std::lgamma(nu + 1.0)) * hyp0f1(nu, 0.25 * x * x, -1.0);
    return j_large(nu, x) * std::pow(x, -nu);
}

double bessel_i_scaled_normalized(double nu, double x)
{
    if (!(nu > -1.0) || !(x >= 0.0))
        throw DomainError("bessel_i_scaled_normalized: bad arguments");
    if (i_series_regime(nu, x))
        return std::exp(-nu * std::numbers::ln2 - std::lgamma(nu + 1.0) - x) * hyp0f1(nu, 0.25 * x * x, 1.0);
    return i_scaled_large(nu, x) * std::pow(x, -nu);
}

double laguerre_poly(int n, double alpha, double x)
{
    if (n < 0)
        throw DomainError("laguerre_poly: n must be >= 0");
    if (n == 0)
        return 1.0;
    double lm1 = 1.0, l = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

double laguerre_norm(int n, double alpha)
{
    return std::exp(0.5 * (std::numbers::ln2 + std::lgamma(n + 1.0) - log_gamma(n + alpha + 1.0)));
}

LaguerreRecurrence::LaguerreRecurrence(double alpha, int n_max) : alpha_(alpha)
{
    if (!(alpha > -1.0))
        throw DomainError("laguerre: alpha must be > -1");
    if (n_max < 1)
        throw DomainError("laguerre: n_max must be >= 1");
    log_norm0_ = 0.5 * std::numbers::ln2 - 0.5 * std::lgamma(alpha + 1.0);
    a_.resize(n_max - 1);
    b_.resize(n_max - 1);
    for (int n = 0; n + 1 < n_max; ++n) {
        a_[n] = n == 0 ? 0.0 : std::sqrt(n * (n + alpha));
        b_[n] = 1.0 / std::sqrt((n + 1.0) * (n + alpha + 1.0));
    }
}

void LaguerreRecurrence::eval(double tau, double r, std::span<double> out) const
{
    if (out.empty())
        return;
    if (out.size() > b_.size() + 1)
        throw DomainError("laguerre: more terms requested than prepared");
    if (!(r > 0.0))
        throw DomainError("laguerre_fn: r must be > 0");
    if (!(tau > 0.0))
        throw DomainError("laguerre_fn: tau must be > 0");
    const double x = tau * r * r;
    // orthonormal polynomials p_n = L_n sqrt(n!/Gamma(n+alpha+1)), carried with a log scale
    double logpref = log_norm0_ + 0.25 * std::log(tau) - 0.5 * x + 0.5 * (alpha_ + 0.5) * std::log(x);
    double fac = std::exp(logpref);
    double pm1 = 0.0, p = 1.0;
    out[0] = fac;
    const std::size_t n_out = out.size();
    double c = alpha_ + 1.0 - x;
    for (std::size_t n = 0; n + 1 < n_out; ++n) {
        const double next = (c * p - a_[n] * pm1) * b_[n];
        c += 2.0;
        pm1 = p;
        p = next;
        if (std::abs(p) > 1e150) {
            p *= 1e-150;
            pm1 *= 1e-150;
            logpref += 150.0 * std::numbers::ln10;
            fac = std::exp(logpref);
        }
        out[n + 1] = p * fac;
    }
}

void laguerre_fn_sequence(double alpha, double tau, double r, std::span<double> out)
{
    if (out.empty())
        return;
    LaguerreRecurrence(alpha, static_cast<int>(out.size())).eval(tau, r, out);
}

double laguerre_fn(const LaguerreIndex& idx, double r)
{
    std::vector<double> seq(static_cast<std::size_t>(idx.n) + 1);
    laguerre_fn_sequence(idx.alpha, idx.tau, r, seq);
    return seq.back();
}

}  // namespace grushin::specfun
