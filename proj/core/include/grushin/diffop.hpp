#pragma once

#include <span>
#include <vector>

#include "grushin/grid.hpp"
#include "grushin/types.hpp"

// Finite-difference application of the differential expressions on uniform grids.
// Any real alpha, beta is accepted. Outputs live on the interior nodes only.
namespace grushin::diffop {

// -d2/dr2 + (a^2 - 1/4)/r^2 + r^2 (-d2/ds2 + (b^2 - 1/4)/s^2); margin 1
GridFunction2D apply_G_circ(double alpha, double beta, const GridFunction2D& g);
inline GridFunction2D apply_G_circ(const TypePair& tp, const GridFunction2D& g)
{
    return apply_G_circ(tp.alpha.value(), tp.beta.value(), g);
}

// -(d2/dr2 + (2a+1)/r d/dr) - r^2 (d2/ds2 + (2b+1)/s d/ds); margin 1
GridFunction2D apply_G_weighted(double alpha, double beta, const GridFunction2D& g);
inline GridFunction2D apply_G_weighted(const TypePair& tp, const GridFunction2D& g)
{
    return apply_G_weighted(tp.alpha.value(), tp.beta.value(), g);
}

// -v'' + (a^2 - 1/4)/r^2 v + tau^2 r^2 v on uniform r nodes; returns the interior values.
// tau = 0 gives B°.
std::vector<double> apply_L_circ(double alpha, double tau, std::span<const double> r, std::span<const double> v);

// d1 = d/dr - (a+1/2)/r, d1' = -d/dr - (a+1/2)/r,
// d2 = r (d/ds - (b+1/2)/s), d2' = r (-d/ds - (b+1/2)/s); margin 1
GridFunction2D delta_1(double alpha, const GridFunction2D& g);
GridFunction2D delta_1_adjoint(double alpha, const GridFunction2D& g);
GridFunction2D delta_2(double beta, const GridFunction2D& g);
GridFunction2D delta_2_adjoint(double beta, const GridFunction2D& g);

// max |(d1' d1 + d2' d2) g - G° g| over the margin-2 interior
double delta_factorization_residual(double alpha, double beta, const GridFunction2D& g);
inline double delta_factorization_residual(const TypePair& tp, const GridFunction2D& g)
{
    return delta_factorization_residual(tp.alpha.value(), tp.beta.value(), g);
}

// U_alpha: r^{a+1/2}; U_alphabeta: r^{a+1/2} s^{b+1/2}; V_alphabeta: r^{-2a} s^{-2b}
enum class Conjugation { U_alpha, U_alphabeta, V_alphabeta };

GridFunction2D conjugate(Conjugation kind, double alpha, double beta, const GridFunction2D& g, bool inverse = false);
// r^{a+1/2} v(r), or its inverse
std::vector<double> conjugate_U_alpha(double alpha, std::span<const double> r, std::span<const double> v,
                                      bool inverse = false);

double max_abs(const GridFunction2D& g);
// throws GridError when the node sets differ
double max_abs_diff(const GridFunction2D& a, const GridFunction2D& b);
// trapezoid pairing sum w_i w_j a b on common nodes
double inner(const GridFunction2D& a, const GridFunction2D& b);
// log2(coarse / fine)
double observed_order(double coarse, double fine);

}  // namespace grushin::diffop
