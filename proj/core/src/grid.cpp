#include "grushin/grid.hpp"

#include <cmath>
#include <sstream>

namespace grushin {

namespace {

std::vector<double> uniform_nodes(Interval iv, int n)
{
    if (n < 1 || !(iv.hi > iv.lo))
        throw GridError("grid: need n >= 1 and a non-empty interval");
    std::vector<double> x(n + 1);
    const double h = (iv.hi - iv.lo) / n;
    for (int i = 0; i <= n; ++i)
        x[i] = iv.lo + i * h;
    x[n] = iv.hi;
    return x;
}

void check_axis(const std::vector<double>& x, const char* name)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !std::isfinite(x[i])) {
            std::ostringstream os;
            os << "grid: " << name << " nodes must be positive and finite";
            throw GridError(os.str());
        }
        if (i > 0 && !(x[i] > x[i - 1])) {
            std::ostringstream os;
            os << "grid: " << name << " nodes must be strictly increasing";
            throw GridError(os.str());
        }
    }
}

}  // namespace

GridFunction2D GridFunction2D::sample(const std::function<double(double, double)>& f, Interval r, Interval s, int nr,
                                      int ns)
{
    GridFunction2D g = zeros(uniform_nodes(r, nr), uniform_nodes(s, ns));
    for (std::size_t i = 0; i < g.r_nodes.size(); ++i)
        for (std::size_t j = 0; j < g.s_nodes.size(); ++j)
            g.values(i, j) = f(g.r_nodes[i], g.s_nodes[j]);
    return g;
}

GridFunction2D GridFunction2D::zeros(std::vector<double> r_nodes, std::vector<double> s_nodes)
{
    GridFunction2D g;
    g.r_nodes = std::move(r_nodes);
    g.s_nodes = std::move(s_nodes);
    g.values = Matrix(g.r_nodes.size(), g.s_nodes.size());
    return g;
}

void GridFunction2D::validate() const
{
    check_axis(r_nodes, "r");
    check_axis(s_nodes, "s");
    if (values.rows() != r_nodes.size() || values.cols() != s_nodes.size())
        throw GridError("grid: value matrix does not match the nodes");
}

void GridFunction2D::validate_uniform(int margin) const
{
    validate();
    for (const auto* x : {&r_nodes, &s_nodes}) {
        if (x->size() < static_cast<std::size_t>(2 * margin + 1))
            throw GridError("grid: too small for the stencil");
        const double h = (*x)[1] - (*x)[0];
        for (std::size_t i = 1; i < x->size(); ++i)
            if (std::abs((*x)[i] - (*x)[i - 1] - h) > 1e-9 * h)
                throw GridError("grid: nodes must be equally spaced");
    }
}

GridFunction2D GridFunction2D::interior(int margin) const
{
    const std::size_t m = static_cast<std::size_t>(margin);
    if (r_nodes.size() < 2 * m + 1 || s_nodes.size() < 2 * m + 1)
        throw GridError("grid: too small for the stencil");
    GridFunction2D g = zeros(std::vector<double>(r_nodes.begin() + m, r_nodes.end() - m),
                             std::vector<double>(s_nodes.begin() + m, s_nodes.end() - m));
    for (std::size_t i = 0; i < g.r_nodes.size(); ++i)
        for (std::size_t j = 0; j < g.s_nodes.size(); ++j)
            g.values(i, j) = values(i + m, j + m);
    return g;
}

quad::HalfLineRule trapezoid_rule(const std::vector<double>& nodes)
{
    quad::HalfLineRule rule;
    rule.nodes = nodes;
    rule.weights.assign(nodes.size(), 0.0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double h = nodes[i] - nodes[i - 1];
        rule.weights[i - 1] += h / 2;
        rule.weights[i] += h / 2;
    }
    if (!nodes.empty())
        rule.upper_cut = nodes.back();
    return rule;
}

}  // namespace grushin
