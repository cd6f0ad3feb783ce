#pragma once

#include <functional>
#include <vector>

#include "grushin/quadrature.hpp"
#include "grushin/types.hpp"

namespace grushin {

// Values on a tensor grid, values(i, j) = g(r_nodes[i], s_nodes[j]).
struct GridFunction2D {
    std::vector<double> r_nodes;
    std::vector<double> s_nodes;
    Matrix values;

    // n+1 equally spaced nodes on each closed interval
    static GridFunction2D sample(const std::function<double(double, double)>& f, Interval r, Interval s, int nr,
                                 int ns);
    static GridFunction2D zeros(std::vector<double> r_nodes, std::vector<double> s_nodes);

    double operator()(std::size_t i, std::size_t j) const { return values(i, j); }
    double hr() const { return r_nodes[1] - r_nodes[0]; }
    double hs() const { return s_nodes[1] - s_nodes[0]; }

    // shape and positivity; throws GridError
    void validate() const;
    // additionally equal spacing (relative 1e-9) and at least 2 margin + 1 nodes per direction
    void validate_uniform(int margin) const;
    // drop `margin` nodes on every side
    GridFunction2D interior(int margin) const;
};

// Trapezoid weights on arbitrary increasing nodes.
quad::HalfLineRule trapezoid_rule(const std::vector<double>& nodes);

}  // namespace grushin
