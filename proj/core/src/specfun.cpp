#include "shp/specfun.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "shp/errors.hpp"

namespace shp::specfun {

namespace {

// g = 7, n = 9 Lanczos coefficients.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(1+m+n)/Gamma(1+m-n) as an exact-ish product of integers.
double rising_ratio(int m, int n) {
    double r = 1.0;
    for (int j = m - n + 1; j <= m + n; ++j) r *= j;
    return r;
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma of a non-finite argument");
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("gamma has a pole at " + std::to_string(x));
    if (x < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = lanczos_c[0];
    const double t = z + lanczos_g + 0.5;
    for (std::size_t i = 1; i < lanczos_c.size(); ++i) a += lanczos_c[i] / (z + double(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double legendre_p(int m, double zeta) {
    if (m < 0) throw IndexError("Legendre degree must be non-negative");
    if (!(zeta >= -1.0 && zeta <= 1.0)) throw DomainError("legendre_p needs zeta in [-1, 1]");
    if (m == 0) return 1.0;
    double p0 = 1.0;
    double p1 = zeta;
    for (int k = 1; k < m; ++k) {
        const double p2 = ((2 * k + 1) * zeta * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_p_derivative(int m, double zeta) {
    if (m < 0) throw IndexError("Legendre degree must be non-negative");
    if (!(zeta >= -1.0 && zeta <= 1.0)) throw DomainError("legendre_p needs zeta in [-1, 1]");
    // P'_{k+1} = P'_{k-1} + (2k+1) P_k
    double p_prev = 1.0, p_cur = zeta;
    double d_prev = 0.0, d_cur = 1.0;
    if (m == 0) return 0.0;
    for (int k = 1; k < m; ++k) {
        const double d_next = d_prev + (2 * k + 1) * p_cur;
        const double p_next = ((2 * k + 1) * zeta * p_cur - k * p_prev) / (k + 1);
        p_prev = p_cur;
        p_cur = p_next;
        d_prev = d_cur;
        d_cur = d_next;
    }
    return d_cur;
}

LegendreOrderDegree::LegendreOrderDegree(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw IndexError("Legendre indices must be non-negative");
    if (n > m)
        throw IndexError("order " + std::to_string(n) + " exceeds degree " + std::to_string(m));
}

double assoc_legendre_p(const LegendreOrderDegree& idx, double zeta) {
    if (idx.n() == 0) return legendre_p(idx.m(), zeta);
    if (!(zeta > -1.0 && zeta < 1.0))
        throw DomainError("assoc_legendre_p needs zeta in (-1, 1) for nonzero order");
    return assoc_legendre_p(idx, zeta, std::sqrt((1.0 - zeta) * (1.0 + zeta)));
}

double assoc_legendre_p(const LegendreOrderDegree& idx, double zeta, double s) {
    const int m = idx.m();
    const int n = idx.n();
    if (n == 0) return legendre_p(m, zeta);
    // zeta may round to +-1 while s is still resolved.
    if (!(zeta >= -1.0 && zeta <= 1.0) || !(s > 0.0))
        throw DomainError("assoc_legendre_p needs zeta in (-1, 1) for nonzero order");
    // Positive order without the Condon-Shortley sign, seeded at P_n^n = (2n-1)!! s^n.
    double pnn = 1.0;
    for (int j = 1; j <= n; ++j) pnn *= (2 * j - 1) * s;
    double result = pnn;
    if (m > n) {
        double p0 = pnn;
        double p1 = zeta * (2 * n + 1) * pnn;
        for (int l = n + 2; l <= m; ++l) {
            const double p2 = ((2 * l - 1) * zeta * p1 - (l + n - 1) * p0) / (l - n);
            p0 = p1;
            p1 = p2;
        }
        result = p1;
    }
    return result / rising_ratio(m, n);
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw IndexError("Laguerre degree must be non-negative");
    if (!(alpha > -1.0)) throw DomainError("Laguerre parameter must exceed -1");
    if (!(x >= 0.0)) throw DomainError("Laguerre argument must be non-negative");
    if (n == 0) return 1.0;
    double l0 = 1.0;
    double l1 = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2 * k + 1 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double b_norm_constant(int m, int n) {
    if (n < 1 || n > m)
        throw IndexError("b_norm_constant needs 1 <= n <= m, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
    return std::sqrt(double(n)) * std::sqrt(rising_ratio(m, n));
}

double theta_norm_constant(int l, int n) {
    if (n < 0 || n > l) throw IndexError("theta_norm_constant needs 0 <= n <= l");
    return std::sqrt(0.5 * (2 * l + 1) * rising_ratio(l, n));
}

namespace {

QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw ConvergenceError("Golub-Welsch eigensolve failed");
    QuadratureRule rule;
    const auto npts = diag.size();
    rule.nodes.resize(npts);
    rule.weights.resize(npts);
    for (Eigen::Index i = 0; i < npts; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_jacobi(int npts, double alpha, double beta) {
    if (npts < 1) throw DomainError("quadrature needs at least one node");
    if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("Jacobi parameters must exceed -1");
    const double ab = alpha + beta;
    Eigen::VectorXd diag(npts);
    Eigen::VectorXd off(std::max(npts - 1, 0));
    for (int k = 0; k < npts; ++k) {
        const double s = 2.0 * k + ab;
        if (k == 0)
            diag(k) = (beta - alpha) / (ab + 2.0);
        else
            diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < npts; ++k) {
        const double s = 2.0 * k + ab;
        double b2;
        if (k == 1)
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 (s * s * (s + 1.0) * (s - 1.0));
        off(k - 1) = std::sqrt(b2);
    }
    const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(alpha + 1.0) *
                       gamma_fn(beta + 1.0) / gamma_fn(ab + 2.0);
    return golub_welsch(diag, off, mu0);
}

QuadratureRule gauss_legendre(int npts) { return gauss_jacobi(npts, 0.0, 0.0); }

QuadratureRule gauss_laguerre(int npts, double alpha) {
    if (npts < 1) throw DomainError("quadrature needs at least one node");
    if (!(alpha > -1.0)) throw DomainError("Laguerre parameter must exceed -1");
    Eigen::VectorXd diag(npts);
    Eigen::VectorXd off(std::max(npts - 1, 0));
    for (int k = 0; k < npts; ++k) diag(k) = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < npts; ++k) off(k - 1) = std::sqrt(k * (k + alpha));
    return golub_welsch(diag, off, gamma_fn(alpha + 1.0));
}

double normalization_integral(int m, int n, double beta_max, int nodes) {
    const LegendreOrderDegree idx(m, n);
    if (n < 1) throw IndexError("the weighted integral diverges for n = 0");
    if (nodes < 3 || !(beta_max > 0.0)) throw DomainError("bad trapezoid parameters");
    const double h = 2.0 * beta_max / (nodes - 1);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double b = -beta_max + i * h;
        const double p = assoc_legendre_p(idx, std::tanh(b), 1.0 / std::cosh(b));
        const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
        sum += w * p * p;
    }
    return sum * h;
}

double normalization_closed_form(int m, int n) {
    const LegendreOrderDegree idx(m, n);
    if (n < 1) throw IndexError("closed form needs n >= 1");
    return 1.0 / (n * rising_ratio(m, n));
}

}  // namespace shp::specfun
