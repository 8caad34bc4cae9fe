#include "shp/numerics.hpp"

#include "shp/errors.hpp"

namespace shp::numerics {

double neville_at_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw DomainError("neville_at_zero needs matching, non-empty samples");
    std::vector<double> t = ys;
    const std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            t[i] = (xs[i - k] * t[i] - xs[i] * t[i - 1]) / (xs[i - k] - xs[i]);
            if (i == k) break;
        }
    return t[n - 1];
}

double observed_order(double err_coarse, double err_fine) {
    return std::log2(std::abs(err_coarse) / std::abs(err_fine));
}

}  // namespace shp::numerics
