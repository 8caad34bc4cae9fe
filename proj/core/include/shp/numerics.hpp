#pragma once

#include <cmath>
#include <vector>

namespace shp::numerics {

// Value at x = 0 of the interpolating polynomial through (xs[i], ys[i]).
double neville_at_zero(const std::vector<double>& xs, const std::vector<double>& ys);

// One Richardson step for an error expansion starting at h^order, coarse step = 2 h.
template <class T>
T richardson(const T& fine, const T& coarse, int order = 2) {
    const double f = std::pow(2.0, order);
    return (f * fine - coarse) / (f - 1.0);
}

// log2(|e_coarse| / |e_fine|); about 2 for a second-order method.
double observed_order(double err_coarse, double err_fine);

}  // namespace shp::numerics
