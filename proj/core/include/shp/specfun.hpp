#pragma once

#include <vector>

namespace shp::specfun {

// Lanczos approximation with reflection below 1/2. PoleError at 0, -1, -2, ...
double gamma_fn(double x);

// P_m(zeta) on [-1, 1] by the three-term recurrence.
double legendre_p(int m, double zeta);

// dP_m/dzeta by the derivative recurrence.
double legendre_p_derivative(int m, double zeta);

// Degree m, order -n with 0 <= n <= m. IndexError otherwise.
class LegendreOrderDegree {
public:
    LegendreOrderDegree(int m, int n);
    int m() const { return m_; }
    int n() const { return n_; }

private:
    int m_;
    int n_;
};

// P_m^{-n}(zeta) = (m-n)!/(m+n)! (1-zeta^2)^{n/2} d^n P_m / dzeta^n.
// With the (-1)^n phase carried by P_m^{n}, the reflected negative order is positive
// on (-1, 1). n == 0 accepts the closed interval.
double assoc_legendre_p(const LegendreOrderDegree& idx, double zeta);

// Same, with s = sqrt(1 - zeta^2) supplied by a caller that knows it more accurately
// than 1 - zeta*zeta would give near the end points.
double assoc_legendre_p(const LegendreOrderDegree& idx, double zeta, double s);

// L_n^alpha(x) for x >= 0, alpha > -1.
double laguerre(int n, double alpha, double x);

// sqrt(n) sqrt(Gamma(1+m+n)/Gamma(1+m-n)), 1 <= n <= m.
double b_norm_constant(int m, int n);

// Makes sqrt(...) * P_l^{-n} unit-normalized on [-1, 1].
double theta_norm_constant(int l, int n);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1] (Golub-Welsch).
QuadratureRule gauss_jacobi(int npts, double alpha, double beta);

QuadratureRule gauss_legendre(int npts);

// Generalized Gauss-Laguerre rule for x^alpha e^{-x} on [0, inf).
QuadratureRule gauss_laguerre(int npts, double alpha);

// Integral of (1-zeta^2)^{-1} |P_m^{-n}|^2 over (-1, 1), computed as the trapezoid
// sum of |P_m^{-n}(tanh b)|^2 over b in [-beta_max, beta_max].
double normalization_integral(int m, int n, double beta_max = 20.0, int nodes = 4001);

// (1/n) Gamma(1+m-n)/Gamma(1+m+n).
double normalization_closed_form(int m, int n);

}  // namespace shp::specfun
