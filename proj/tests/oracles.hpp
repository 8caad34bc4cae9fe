#pragma once

// Test-side reference implementations. Each follows a different route from the
// library so that agreement means something.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// Coefficients of (x^2 - 1)^m, lowest power first.
inline std::vector<long double> rodrigues_poly(int m) {
    std::vector<long double> c(2 * m + 1, 0.0L);
    long double binom = 1.0L;
    for (int j = 0; j <= m; ++j) {
        // binom(m, j) (x^2)^j (-1)^(m-j)
        c[2 * j] = binom * (((m - j) % 2) ? -1.0L : 1.0L);
        binom = binom * (m - j) / (j + 1);
    }
    return c;
}

inline std::vector<long double> derivative(std::vector<long double> c, int times) {
    for (int t = 0; t < times; ++t) {
        if (c.size() <= 1) return {0.0L};
        std::vector<long double> d(c.size() - 1);
        for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<long double>(k);
        c = std::move(d);
    }
    return c;
}

inline long double horner(const std::vector<long double>& c, long double x) {
    long double s = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

inline long double factorial(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// d^{m+n}/dx^{m+n} (x^2-1)^m / (2^m m!)
inline double legendre_rodrigues_derivative(int m, int n, double x) {
    const auto c = derivative(rodrigues_poly(m), m + n);
    return static_cast<double>(horner(c, x) / (std::pow(2.0L, m) * factorial(m)));
}

inline double legendre(int m, double x) { return legendre_rodrigues_derivative(m, 0, x); }

// (m-n)!/(m+n)! (1-x^2)^{n/2} d^n P_m.
inline double assoc_legendre_neg(int m, int n, double x) {
    return static_cast<double>(factorial(m - n) / factorial(m + n)) * std::pow(1.0 - x * x, 0.5 * n) *
           legendre_rodrigues_derivative(m, n, x);
}

// Explicit finite sum.
inline double laguerre_series(int n, double alpha, double x) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double binom = std::tgamma(n + alpha + 1.0) / (std::tgamma(n - k + 1.0) * std::tgamma(alpha + k + 1.0));
        s += ((k % 2) ? -1.0 : 1.0) * binom * std::pow(x, k) / std::tgamma(k + 1.0);
    }
    return s;
}

struct Rule {
    std::vector<double> x, w;
};

// Newton iteration on P_n from Chebyshev starting points.
inline Rule gauss_legendre_newton(int n) {
    Rule r;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double p = n == 0 ? 1.0 : p1;
            dp = n * (x * p - p0) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x.push_back(x);
        r.w.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    return r;
}

// Composite Simpson on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// Gamma(x) = 2 int_0^inf t^{2x-1} e^{-t^2} dt for x > 0, by Simpson.
inline double gamma_integral(double x) {
    return 2.0 * simpson([x](double t) { return t == 0.0 ? (x == 0.5 ? 1.0 : 0.0) : std::pow(t, 2 * x - 1) * std::exp(-t * t); },
                         0.0, 12.0, 200000);
}

// Central difference of f at x.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Hydrogen-like energies -Z^2 m e^4 / (2 hbar^2 N^2), atomic units.
inline double coulomb_level(int Z, double mass, int N) { return -0.5 * Z * Z * mass / (N * N); }

inline double oscillator_level(double omega, int n_a, int l) { return omega * (2 * n_a + l + 1.5); }

}  // namespace oracle
