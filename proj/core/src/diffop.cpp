#include "grushin/diffop.hpp"

#include <algorithm>
#include <cmath>

#include "grushin/parallel.hpp"

namespace grushin::diffop {

namespace {

void check_finite(const GridFunction2D& g)
{
    for (const double x : g.values.data())
        if (!std::isfinite(x))
            throw GridError("diffop: non-finite grid value");
}

// Shared driver: out(i, j) = op(i, j) on the margin-m interior, indices in the input grid.
template <class Op>
GridFunction2D on_interior(const GridFunction2D& g, int margin, Op op)
{
    g.validate_uniform(margin);
    check_finite(g);
    GridFunction2D out = g.interior(margin);
    const std::size_t m = static_cast<std::size_t>(margin);
    parallel_for(out.r_nodes.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < out.s_nodes.size(); ++j)
            out.values(i, j) = op(i + m, j + m);
    });
    return out;
}

struct Stencil {
    const GridFunction2D& g;
    double hr, hs;
    double d_rr(std::size_t i, std::size_t j) const
    {
        return (g(i + 1, j) - 2.0 * g(i, j) + g(i - 1, j)) / (hr * hr);
    }
    double d_ss(std::size_t i, std::size_t j) const
    {
        return (g(i, j + 1) - 2.0 * g(i, j) + g(i, j - 1)) / (hs * hs);
    }
    double d_r(std::size_t i, std::size_t j) const { return (g(i + 1, j) - g(i - 1, j)) / (2.0 * hr); }
    double d_s(std::size_t i, std::size_t j) const { return (g(i, j + 1) - g(i, j - 1)) / (2.0 * hs); }
};

void check_same_nodes(const GridFunction2D& a, const GridFunction2D& b)
{
    if (a.r_nodes != b.r_nodes || a.s_nodes != b.s_nodes)
        throw GridError("diffop: grids have different nodes");
}

}  // namespace

GridFunction2D apply_G_circ(double alpha, double beta, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    const double pa = alpha * alpha - 0.25;
    const double pb = beta * beta - 0.25;
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        const double r = g.r_nodes[i];
        const double s = g.s_nodes[j];
        const double v = g(i, j);
        return -st.d_rr(i, j) + pa / (r * r) * v + r * r * (-st.d_ss(i, j) + pb / (s * s) * v);
    });
}

GridFunction2D apply_G_weighted(double alpha, double beta, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        const double r = g.r_nodes[i];
        const double s = g.s_nodes[j];
        return -(st.d_rr(i, j) + (2.0 * alpha + 1.0) / r * st.d_r(i, j)) -
               r * r * (st.d_ss(i, j) + (2.0 * beta + 1.0) / s * st.d_s(i, j));
    });
}

std::vector<double> apply_L_circ(double alpha, double tau, std::span<const double> r, std::span<const double> v)
{
    if (r.size() != v.size() || r.size() < 3)
        throw GridError("apply_L_circ: need at least 3 nodes and matching values");
    const double h = r[1] - r[0];
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i - 1] > 0.0) || std::abs(r[i] - r[i - 1] - h) > 1e-9 * h)
            throw GridError("apply_L_circ: nodes must be positive and equally spaced");
    const double pa = alpha * alpha - 0.25;
    std::vector<double> out(r.size() - 2);
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        const double d2 = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        out[i - 1] = -d2 + (pa / (r[i] * r[i]) + tau * tau * r[i] * r[i]) * v[i];
    }
    return out;
}

GridFunction2D delta_1(double alpha, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        return st.d_r(i, j) - (alpha + 0.5) / g.r_nodes[i] * g(i, j);
    });
}

GridFunction2D delta_1_adjoint(double alpha, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        return -st.d_r(i, j) - (alpha + 0.5) / g.r_nodes[i] * g(i, j);
    });
}

GridFunction2D delta_2(double beta, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        return g.r_nodes[i] * (st.d_s(i, j) - (beta + 0.5) / g.s_nodes[j] * g(i, j));
    });
}

GridFunction2D delta_2_adjoint(double beta, const GridFunction2D& g)
{
    const Stencil st{g, g.hr(), g.hs()};
    return on_interior(g, 1, [&](std::size_t i, std::size_t j) {
        return g.r_nodes[i] * (-st.d_s(i, j) - (beta + 0.5) / g.s_nodes[j] * g(i, j));
    });
}

double delta_factorization_residual(double alpha, double beta, const GridFunction2D& g)
{
    g.validate_uniform(2);
    const GridFunction2D a = delta_1_adjoint(alpha, delta_1(alpha, g));
    const GridFunction2D b = delta_2_adjoint(beta, delta_2(beta, g));
    const GridFunction2D c = apply_G_circ(alpha, beta, g).interior(1);
    double res = 0.0;
    for (std::size_t k = 0; k < c.values.data().size(); ++k)
        res = std::max(res, std::abs(a.values.data()[k] + b.values.data()[k] - c.values.data()[k]));
    return res;
}

GridFunction2D conjugate(Conjugation kind, double alpha, double beta, const GridFunction2D& g, bool inverse)
{
    g.validate();
    double pr = 0.0;
    double ps = 0.0;
    switch (kind) {
    case Conjugation::U_alpha:
        pr = alpha + 0.5;
        break;
    case Conjugation::U_alphabeta:
        pr = alpha + 0.5;
        ps = beta + 0.5;
        break;
    case Conjugation::V_alphabeta:
        pr = -2.0 * alpha;
        ps = -2.0 * beta;
        break;
    }
    if (inverse) {
        pr = -pr;
        ps = -ps;
    }
    GridFunction2D out = g;
    for (std::size_t i = 0; i < g.r_nodes.size(); ++i) {
        const double wr = std::pow(g.r_nodes[i], pr);
        for (std::size_t j = 0; j < g.s_nodes.size(); ++j)
            out.values(i, j) = g(i, j) * wr * std::pow(g.s_nodes[j], ps);
    }
    return out;
}

std::vector<double> conjugate_U_alpha(double alpha, std::span<const double> r, std::span<const double> v, bool inverse)
{
    if (r.size() != v.size())
        throw GridError("conjugate_U_alpha: nodes and values differ in length");
    const double p = inverse ? -(alpha + 0.5) : alpha + 0.5;
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * std::pow(r[i], p);
    return out;
}

double max_abs(const GridFunction2D& g)
{
    double m = 0.0;
    for (const double x : g.values.data())
        m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const GridFunction2D& a, const GridFunction2D& b)
{
    check_same_nodes(a, b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.values.data().size(); ++k)
        m = std::max(m, std::abs(a.values.data()[k] - b.values.data()[k]));
    return m;
}

double inner(const GridFunction2D& a, const GridFunction2D& b)
{
    check_same_nodes(a, b);
    const auto wr = trapezoid_rule(a.r_nodes).weights;
    const auto ws = trapezoid_rule(a.s_nodes).weights;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.r_nodes.size(); ++i)
        for (std::size_t j = 0; j < a.s_nodes.size(); ++j)
            sum += wr[i] * ws[j] * a(i, j) * b(i, j);
    return sum;
}

double observed_order(double coarse, double fine)
{
    return std::log2(coarse / fine);
}

}  // namespace grushin::diffop
