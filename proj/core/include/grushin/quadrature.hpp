#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grushin::quad {

enum class DecayHint { gaussian, exponential, algebraic_oscillatory };
enum class RuleKind { composite_legendre, exp_weighted, mapped };

struct TruncationPolicy {
    double abs_tol = 1e-10;
    int max_panels = 4096;
    DecayHint decay_hint = DecayHint::gaussian;
    double scale = 1.0;            // decay length: e^{-(x/scale)^2/2}, e^{-x/scale}, (scale/x)^p
    double algebraic_power = 2.0;  // p for the algebraic tail
    double frequency = 0.0;        // oscillation bound, 0 = none
    double max_width = 0.5;        // panel width cap
    int refine_levels = 20;        // first panel is [0, 2^-levels * cut]
};

struct HalfLineRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::composite_legendre;
    double upper_cut = 0.0;

    std::size_t size() const { return nodes.size(); }
    void validate() const;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double node = 0.0) : std::runtime_error(what), node_(node) {}
    double node() const { return node_; }

private:
    double node_;
};

struct GaussRule {
    std::vector<double> nodes;  // on [-1, 1]
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

double upper_cut_for(const TruncationPolicy& policy);

// Widest panel allowed by the policy (width cap and oscillation).
double panel_width_for(const TruncationPolicy& policy);

HalfLineRule build_rule(const TruncationPolicy& policy, int points_per_panel = 8);

// Composite rule on [a, b]; when refine_levels > 0 panels shrink geometrically toward a.
HalfLineRule interval_rule(double a, double b, double max_width, int points_per_panel = 8, int refine_levels = 0);

// Gauss-Laguerre nodes with e^{x/scale} folded into the weights.
HalfLineRule gauss_laguerre_rule(int n, double scale = 1.0);

// Gauss-Legendre on (0,1) pushed through x = scale t/(1-t).
HalfLineRule mapped_rule(int n, double scale = 1.0);

double integrate(const std::function<double(double)>& f, const HalfLineRule& rule);

// Compensated (Neumaier) accumulator.
class Sum {
public:
    void add(double x)
    {
        const double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace grushin::quad
