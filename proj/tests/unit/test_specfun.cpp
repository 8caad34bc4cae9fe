#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "shp/errors.hpp"
#include "shp/specfun.hpp"

using namespace shp::specfun;
using doctest::Approx;

TEST_CASE("gamma") {
    CHECK(gamma_fn(1.0) == Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == Approx(oracle::gamma_integral(0.5)).epsilon(1e-9));
    CHECK(gamma_fn(2.7) == Approx(oracle::gamma_integral(2.7)).epsilon(1e-9));
    CHECK(gamma_fn(0.3) == Approx(2.9915689876875907).epsilon(1e-13));
    CHECK(gamma_fn(-1.5) == Approx(2.3632718012073547).epsilon(1e-13));
    for (double x : {0.1, 0.7, 1.3, 3.9, 7.25, 12.5, -0.4, -2.6})
        CHECK(gamma_fn(x + 1.0) == Approx(x * gamma_fn(x)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), shp::PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), shp::PoleError);
}

TEST_CASE("legendre polynomials against Rodrigues") {
    CHECK(legendre_p(0, 0.37) == 1.0);
    CHECK(legendre_p(1, 0.5) == Approx(0.5));
    CHECK(legendre_p(5, 0.3) == Approx(0.34538625).epsilon(1e-14));
    for (int m = 0; m <= 12; ++m)
        for (double z : {-0.95, -0.6, -0.2, 0.1, 0.45, 0.8, 0.99}) {
            const double ref = oracle::legendre(m, z);
            CHECK(std::abs(legendre_p(m, z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
            const double dref = oracle::legendre_rodrigues_derivative(m, 1, z);
            CHECK(std::abs(legendre_p_derivative(m, z) - dref) <= 1e-9 * std::max(1.0, std::abs(dref)));
        }
}

TEST_CASE("associated legendre of negative order") {
    CHECK(assoc_legendre_p(LegendreOrderDegree(2, 1), 0.6) == Approx(0.24).epsilon(1e-14));
    CHECK(assoc_legendre_p(LegendreOrderDegree(3, 2), 0.5) == Approx(0.046875).epsilon(1e-14));
    CHECK(assoc_legendre_p(LegendreOrderDegree(4, 3), -0.7) == Approx(-0.005311437393728745).epsilon(1e-13));
    CHECK(assoc_legendre_p(LegendreOrderDegree(1, 1), 0.0) == Approx(0.5));
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= m; ++n)
            for (double z : {-0.9, -0.3, 0.2, 0.75}) {
                const double ref = oracle::assoc_legendre_neg(m, n, z);
                CHECK(std::abs(assoc_legendre_p(LegendreOrderDegree(m, n), z) - ref) <=
                      1e-11 * std::max(1e-3, std::abs(ref)));
            }
    CHECK_THROWS_AS(LegendreOrderDegree(1, 2), shp::IndexError);
    CHECK_THROWS_AS(assoc_legendre_p(LegendreOrderDegree(2, 1), 1.0), shp::DomainError);
}

TEST_CASE("laguerre") {
    CHECK(laguerre(0, 1.3, 4.0) == 1.0);
    CHECK(laguerre(1, 1.3, 4.0) == Approx(1.0 + 1.3 - 4.0));
    CHECK(laguerre(3, 2.0, 1.5) == Approx(0.0625).epsilon(1e-13));
    CHECK(laguerre(5, 0.5, 7.25) == Approx(-3.0257080078125).epsilon(1e-13));
    for (int n = 0; n <= 8; ++n)
        for (double x : {0.0, 0.4, 2.5, 9.0})
            CHECK(laguerre(n, 1.5, x) == Approx(oracle::laguerre_series(n, 1.5, x)).epsilon(1e-11));

    // (n+1) L_{n+1} - (2n+1+a-x) L_n + (n+a) L_{n-1} = 0, relative to the term scale
    double worst = 0.0;
    for (double a : {0.0, 0.5, 2.0})
        for (int n = 1; n <= 10; ++n)
            for (int i = 0; i <= 100; ++i) {
                const double x = 0.5 * i;
                const double t1 = (n + 1) * laguerre(n + 1, a, x);
                const double t2 = (2 * n + 1 + a - x) * laguerre(n, a, x);
                const double t3 = (n + a) * laguerre(n - 1, a, x);
                const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
                worst = std::max(worst, std::abs(t1 - t2 + t3) / scale);
            }
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), shp::DomainError);
}

TEST_CASE("normalization constants and the weighted integral") {
    CHECK(b_norm_constant(1, 1) == Approx(std::sqrt(2.0)));
    CHECK(b_norm_constant(2, 1) == Approx(std::sqrt(6.0)));
    CHECK(normalization_integral(2, 1) == Approx(1.0 / 6.0).epsilon(1e-10));
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n) {
            const double closed = normalization_closed_form(m, n);
            CHECK(closed == Approx(std::tgamma(1.0 + m - n) / (n * std::tgamma(1.0 + m + n))).epsilon(1e-13));
            CHECK(std::abs(normalization_integral(m, n) - closed) <= 1e-8 * closed);
            // b_hat = b_norm P_m^{-n} has unit weighted norm
            CHECK(b_norm_constant(m, n) * b_norm_constant(m, n) * closed == Approx(1.0).epsilon(1e-12));
        }
    CHECK_THROWS_AS(normalization_integral(3, 0), shp::IndexError);
}

TEST_CASE("gauss rules") {
    const auto gl = gauss_legendre(20);
    const auto ref = oracle::gauss_legendre_newton(20);
    std::vector<double> a = gl.nodes, b = ref.x;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < 20; ++i) CHECK(a[i] == Approx(b[i]).epsilon(1e-13));
    double wsum = 0.0;
    for (double w : gl.weights) wsum += w;
    CHECK(wsum == Approx(2.0).epsilon(1e-14));

    // x^k e^{-x} x^alpha integrates to Gamma(k + alpha + 1)
    const auto lag = gauss_laguerre(15, 2.0);
    for (int k = 0; k <= 20; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < lag.nodes.size(); ++i) s += lag.weights[i] * std::pow(lag.nodes[i], k);
        CHECK(s == Approx(std::tgamma(k + 3.0)).epsilon(1e-10));
    }
    // (1-x)^a (1+x)^b moments
    const auto gj = gauss_jacobi(10, -0.5, 0.5);
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
        m0 += gj.weights[i];
        m1 += gj.weights[i] * gj.nodes[i];
    }
    CHECK(m0 == Approx(std::numbers::pi).epsilon(1e-13));
    CHECK(m1 == Approx(std::numbers::pi / 2).epsilon(1e-13));
}
