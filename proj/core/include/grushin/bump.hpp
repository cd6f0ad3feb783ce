#pragma once

#include "grushin/types.hpp"

namespace grushin {

// C-infinity bump exp(k - k/(1 - y^2)), y = (x - center)/half_width, zero for |y| >= 1.
// Larger k concentrates it (near the centre it looks like exp(-k y^2)).
struct Bump {
    double center = 1.0;
    double half_width = 0.5;
    double sharpness = 1.0;

    double operator()(double x) const;
    // d/dx and d^2/dx^2, exact
    double d1(double x) const;
    double d2(double x) const;
    Interval support() const { return {center - half_width, center + half_width}; }
};

}  // namespace grushin
