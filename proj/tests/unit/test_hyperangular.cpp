#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "shp/angular_grid.hpp"
#include "shp/errors.hpp"
#include "shp/hyperangular.hpp"
#include "shp/specfun.hpp"

using namespace shp::hyperangular;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("phi factor is double valued and orthonormal") {
    CHECK(std::abs(phi_m(0, 0.0) - complex(1.0 / std::sqrt(2 * pi), 0.0)) < 1e-15);
    for (int m : {0, 1, 3})
        for (double phi : {0.0, 0.7, 2.9, 5.1}) {
            const auto a = phi_m(m, phi), b = phi_m(m, phi + 2 * pi);
            CHECK(std::abs(a + b) < 1e-14);
        }
    const int N = 64;
    for (int m = 0; m <= 3; ++m)
        for (int mp = 0; mp <= 3; ++mp) {
            complex s = 0.0;
            for (int k = 0; k < N; ++k) {
                const double phi = 2 * pi * k / N;
                s += phi_m(m, phi) * std::conj(phi_m(mp, phi));
            }
            s *= 2 * pi / N;
            CHECK(std::abs(s - (m == mp ? 1.0 : 0.0)) < 1e-13);
        }
}

TEST_CASE("beta and theta factors") {
    CHECK(b_hat(1, 1, 0.0) == Approx(std::sqrt(2.0) * oracle::assoc_legendre_neg(1, 1, 0.0)));
    CHECK_THROWS_AS(b_hat(1, 2, 0.3), shp::IndexError);
    CHECK(theta_fn(0, 0, 0.3) == Approx(1.0 / std::sqrt(2.0)));
    const auto gl = oracle::gauss_legendre_newton(30);
    for (int n = 0; n <= 2; ++n)
        for (int l = n; l <= 4; ++l)
            for (int lp = n; lp <= 4; ++lp) {
                double s = 0.0;
                for (std::size_t i = 0; i < gl.x.size(); ++i)
                    s += gl.w[i] * theta_fn(l, n, gl.x[i]) * theta_fn(lp, n, gl.x[i]);
                CHECK(s == Approx(l == lp ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
            }
    // unit weighted norm of b_hat, by a trapezoid in beta
    for (auto [m, n] : {std::pair{1, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
        const double h = 0.01;
        double s = 0.0;
        for (int i = -3000; i <= 3000; ++i) {
            const double b = i * h;
            const double v = b_hat(m, n, std::tanh(b), 1.0 / std::cosh(b));
            s += v * v * h;
        }
        CHECK(s == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("states validate their quantum numbers") {
    CHECK_THROWS_AS(HyperangularState(0, 0, 0), shp::DomainError);
    CHECK_THROWS(HyperangularState(2, 0, 1));
    CHECK_THROWS(HyperangularState(1, -1, 1));
    const HyperangularState s(2, 1, 3);
    CHECK(s.m() == 3);
    CHECK(s.n2_eigenvalue() == Approx(3.75));
    CHECK(s.l3_eigenvalue() == Approx(3.5));
    CHECK(HyperangularState(2, 1, 3, true).l3_eigenvalue() == Approx(-3.5));
}

TEST_CASE("regularized ground family") {
    // m = 0: eps * int (1-z^2)^{eps-1} dz = sqrt(pi) Gamma(1+eps) / Gamma(eps+1/2)
    for (double eps : default_eps_sequence()) {
        const auto mo = regularized_moments(0, eps);
        CHECK(mo.norm2 ==
              Approx(std::sqrt(pi) * std::tgamma(1 + eps) / std::tgamma(eps + 0.5)).epsilon(1e-12));
        CHECK(mo.l3 == Approx(0.5));
    }
    CHECK(regularized_moments(0, 0.1).norm2 == Approx(1.1323086975215753).epsilon(1e-12));
    // pointwise decay like sqrt(eps)
    for (double z : {-0.5, 0.1, 0.7}) {
        const double r1 = b_hat_regularized(2, 1e-4, z) / std::sqrt(1e-4);
        CHECK(r1 == Approx(shp::specfun::legendre_p(2, z)).epsilon(1e-3));
    }
    for (int m = 0; m <= 4; ++m) {
        std::vector<double> n2, norm, t2;
        for (double e : default_eps_sequence()) {
            const auto mo = regularized_moments(m, e);
            n2.push_back(mo.n2);
            norm.push_back(mo.norm2);
            t2.push_back(mo.tanh2);
        }
        const auto x = extrapolate_in_eps(default_eps_sequence(), norm);
        CHECK(std::isfinite(x.limit));
        CHECK(extrapolate_in_eps(default_eps_sequence(), n2).drift < 1e-3);
        CHECK(extrapolate_in_eps(default_eps_sequence(), t2).drift < 1e-3);
    }
}

namespace {

double rel_residual(const AngularGridFunction& f, const AngularGridFunction& g) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.data().size(); ++i) {
        num += std::norm(f.data()[i] - g.data()[i]);
        den += std::norm(g.data()[i]);
    }
    return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("generators on the grid") {
    const auto grid = make_grid(64, 64, 16);
    for (bool conj : {false, true}) {
        const HyperangularState s(2, 1, 2, conj);
        const auto f = chi_state(grid, s);
        const auto L3f = apply_generator(Generator::L3, f);
        CHECK(residual_norm(f, L3f, s.l3_eigenvalue()) < 1e-12);
        const auto e = rayleigh_richardson([](const auto& a, const auto& o) { return apply_N2(a, o); }, f);
        CHECK(e.value.real() == Approx(3.75).epsilon(1e-4));
    }

    // hand-applied H+ on sech^{3/2}(beta) e^{i phi/2}
    const auto f = sample(grid, Monodromy::Antiperiodic, [](double, double b, double phi) {
        return std::pow(1.0 / std::cosh(b), 1.5) * std::exp(complex(0, 0.5 * phi));
    });
    const auto exact = sample(grid, Monodromy::Periodic, [](double, double b, double phi) {
        return complex(0, 2.0) * std::tanh(b) * std::pow(1.0 / std::cosh(b), 1.5) * std::exp(complex(0, 1.5 * phi));
    });
    const auto hf = apply_generator(Generator::Hplus, f);
    const double r64 = rel_residual(hf, exact);
    CHECK(r64 < 5e-3);
    const auto g128 = make_grid(16, 128, 16);
    const auto f128 = sample(g128, Monodromy::Antiperiodic, [](double, double b, double phi) {
        return std::pow(1.0 / std::cosh(b), 1.5) * std::exp(complex(0, 0.5 * phi));
    });
    const auto e128 = sample(g128, Monodromy::Periodic, [](double, double b, double phi) {
        return complex(0, 2.0) * std::tanh(b) * std::pow(1.0 / std::cosh(b), 1.5) * std::exp(complex(0, 1.5 * phi));
    });
    const auto fine = apply_generator(Generator::Hplus, f128);
    const double r128 = rel_residual(fine, e128);
    CHECK(r64 / r128 == Approx(4.0).epsilon(0.15));
    OperatorOptions wide;
    wide.stride = 2;
    const auto coarse = apply_generator(Generator::Hplus, f128, wide);
    const auto extrapolated = complex(4.0 / 3.0) * fine - complex(1.0 / 3.0) * coarse;
    CHECK(rel_residual(extrapolated, e128) < 1e-4);
}

TEST_CASE("commutator [L3, H+-] = +-H+-") {
    const auto grid = make_grid(32, 128, 16);
    const auto f = chi_state(grid, HyperangularState(2, 1, 2));
    for (auto [g, sign] : {std::pair{Generator::Hplus, 1.0}, std::pair{Generator::Hminus, -1.0}}) {
        const auto hf = apply_generator(g, f);
        auto comm = apply_generator(Generator::L3, hf) - apply_generator(g, apply_generator(Generator::L3, f));
        CHECK(rel_residual(comm, complex(sign) * hf) < 1e-4);
    }
}

TEST_CASE("ladder coefficients") {
    const auto grid = make_grid(128, 128, 16);
    CHECK(std::abs(ladder_coefficient_exact(1, 0) - complex(0, std::sqrt(3.0))) < 1e-15);
    CHECK(std::abs(ladder_coefficient_exact(2, 1) - complex(0, std::sqrt(12.0))) < 1e-15);
    for (auto [n, k] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 3}}) {
        const auto up = ladder_richardson(n, k, grid, true);
        const auto ex = ladder_coefficient_exact(n, k);
        CHECK(std::abs(up.value - ex) / std::abs(ex) < 1e-4);
        const double order = std::abs(up.coarse - ex) / std::abs(up.fine - ex);
        CHECK(order == Approx(4.0).epsilon(0.15));
        const auto down = ladder_richardson(n, k, grid, false);
        CHECK(std::abs(down.value - lowering_coefficient_exact(n, k)) / std::abs(ex) < 1e-4);
    }
}

TEST_CASE("casimir operators on product states") {
    const auto grid = make_grid(128, 128, 16);
    const GridOperator lam = [](const auto& f, const auto& o) { return apply_Lambda(f, o); };
    const GridOperator lamc = [](const auto& f, const auto& o) { return apply_Lambda_composed(f, o); };
    const GridOperator n2c = [](const auto& f, const auto& o) { return apply_N2_composed(f, o); };
    for (auto [n, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
        const HyperangularState s(n, 0, l);
        const auto f = product_state(grid, s);
        const auto e = rayleigh_richardson(lam, f);
        // the eigenvalue on these functions is l(l+1) - 3/4
        CHECK(e.value.real() == Approx(l * (l + 1) - 0.75).epsilon(1e-4));
        CHECK(std::abs(rayleigh_richardson(lamc, f).value - e.value) < 1e-4 * std::abs(e.value));
        const auto nc = rayleigh_richardson(n2c, chi_state(grid, s));
        CHECK(nc.value.real() == Approx(n * n - 0.25).epsilon(1e-4));
    }
    // pointwise agreement where the theta factor vanishes faster than sin^{1/2} at the poles
    for (int l : {2, 3}) {
        const auto f = product_state(grid, HyperangularState(2, 0, l));
        OperatorOptions wide;
        wide.stride = 2;
        auto combined = [&](const GridOperator& op) {
            return complex(4.0 / 3.0) * op(f, {}) - complex(1.0 / 3.0) * op(f, wide);
        };
        const auto direct = combined(lam);
        CHECK(angular_norm(combined(lamc) - direct) / angular_norm(direct) < 1e-4);
    }
}

TEST_CASE("grid plumbing") {
    const auto a = make_grid(8, 8, 8), b = make_grid(8, 16, 8);
    const auto fa = chi_state(a, HyperangularState(1, 0, 1));
    const auto fb = chi_state(b, HyperangularState(1, 0, 1));
    CHECK_THROWS_AS(require_compatible(fa, fb), shp::GridMismatch);
    CHECK_THROWS_AS(fa + fb, shp::GridMismatch);
    OperatorOptions strict;
    strict.tolerance = 1e-9;
    CHECK_THROWS_AS(apply_N2(fa, strict), shp::GridTooCoarse);

    std::ostringstream os;
    export_csv(fa, os, {"n=1"});
    std::istringstream is(os.str());
    std::string line;
    int data = 0, meta = 0;
    while (std::getline(is, line)) {
        if (line.starts_with("#")) ++meta;
        else ++data;
    }
    CHECK(meta >= 1);
    CHECK(data == 8 * 8 * 8 + 1);
}
