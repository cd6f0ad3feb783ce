#include "grushin/bump.hpp"

#include <cmath>

namespace grushin {

double Bump::operator()(double x) const
{
    const double y = (x - center) / half_width;
    if (!(std::abs(y) < 1.0))
        return 0.0;
    return std::exp(sharpness - sharpness / (1.0 - y * y));
}

double Bump::d1(double x) const
{
    const double y = (x - center) / half_width;
    if (!(std::abs(y) < 1.0))
        return 0.0;
    const double q = 1.0 - y * y;
    // g = k - k/q, g' = -2 k y / q^2 (in y)
    const double gp = -2.0 * sharpness * y / (q * q);
    return (*this)(x) * gp / half_width;
}

double Bump::d2(double x) const
{
    const double y = (x - center) / half_width;
    if (!(std::abs(y) < 1.0))
        return 0.0;
    const double q = 1.0 - y * y;
    const double gp = -2.0 * sharpness * y / (q * q);
    const double gpp = -2.0 * sharpness * (1.0 + 3.0 * y * y) / (q * q * q);
    return (*this)(x) * (gp * gp + gpp) / (half_width * half_width);
}

}  // namespace grushin
