#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "shp/errors.hpp"
#include "shp/kinematics.hpp"

using namespace shp::kinematics;
using std::numbers::pi;

namespace {

double component_dot(const FourVector& a, const FourVector& b) {
    return -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

RMSPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return RMSPoint(0.1 + 5.0 * u(rng), 0.05 + (pi - 0.1) * u(rng), -3.0 + 6.0 * u(rng), 2.0 * pi * u(rng));
}

FourVector random_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng), n(rng), n(rng)};
}

}  // namespace

TEST_CASE("minkowski dot, signature and component oracle") {
    CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == -1.0);
    CHECK(minkowski_dot({0, 0, 0, 1}, {0, 0, 0, 1}) == 1.0);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_vector(rng), b = random_vector(rng);
        CHECK(minkowski_dot(a, b) == doctest::Approx(component_dot(a, b)).epsilon(1e-14));
    }
}

TEST_CASE("RMS chart examples") {
    const auto x = rms_to_cartesian(RMSPoint(1.0, pi / 2, 0.0, 0.0));
    CHECK(x.x0 == doctest::Approx(0.0));
    CHECK(x.x1 == doctest::Approx(1.0));
    CHECK(std::abs(x.x3) < 1e-15);
    const auto y = rms_to_cartesian(RMSPoint(1.0, pi / 2, 0.0, pi / 2));
    CHECK(y.x2 == doctest::Approx(1.0));
    CHECK(std::abs(y.x1) < 1e-15);

    const auto p = cartesian_to_rms({0, 1, 0, 0});
    CHECK(p.rho() == doctest::Approx(1.0));
    CHECK(p.theta() == doctest::Approx(pi / 2));
    CHECK(p.beta() == doctest::Approx(0.0));
    CHECK(p.phi() == doctest::Approx(0.0));
    CHECK_THROWS_AS(cartesian_to_rms({0, 0, 0, 1}), shp::NotInRMS);
}

TEST_CASE("spacelike chart examples") {
    const auto a = spacelike_to_cartesian(1.0, 0.0, pi / 2, 0.0);
    CHECK(a.x1 == doctest::Approx(1.0));
    const auto b = spacelike_to_cartesian(1.0, 1.0, 0.0, 0.0);
    CHECK(b.x0 == doctest::Approx(std::sinh(1.0)));
    CHECK(b.x3 == doctest::Approx(std::cosh(1.0)));
    CHECK(std::abs(b.x1) + std::abs(b.x2) < 1e-15);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double rho = 0.1 + 3 * u(rng);
        const auto x = spacelike_to_cartesian(rho, -2 + 4 * u(rng), pi * u(rng), 2 * pi * u(rng));
        CHECK(minkowski_dot(x, x) == doctest::Approx(rho * rho).epsilon(1e-12));
    }
}

TEST_CASE("region classification") {
    CHECK(classify_region({0, 1, 0, 0}) == RegionTag::RMS);
    CHECK(classify_region({1, 0, 0, 2}) == RegionTag::SpacelikeOutsideRMS);
    CHECK(classify_region({2, 1, 0, 0}) == RegionTag::Timelike);
    CHECK(classify_region({1, 1, 0, 0}) == RegionTag::LightlikeBoundary);
}

TEST_CASE("property: random RMS points") {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_point(rng);
        const auto x = rms_to_cartesian(p);
        CHECK(std::abs(minkowski_dot(x, x) - p.rho() * p.rho()) <= 1e-12 * p.rho() * p.rho());
        CHECK(classify_region(x) == RegionTag::RMS);
        const auto q = cartesian_to_rms(x);
        const auto back = rms_to_cartesian(q);
        worst = std::max(worst, std::sqrt(euclidean_norm2(back - x) / euclidean_norm2(x)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("measure weight against a finite-difference Jacobian") {
    CHECK(measure_weight(RMSPoint(2.0, pi / 2, 0.0, 0.3)) == doctest::Approx(8.0));
    CHECK(measure_weight(RMSPoint(1.0, pi / 2, 0.0, 0.0)) == doctest::Approx(1.0));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_point(rng);
        const double c[4] = {p.rho(), p.theta(), p.beta(), p.phi()};
        double J[4][4];
        const double h = 1e-6;
        for (int k = 0; k < 4; ++k) {
            double cp[4], cm[4];
            for (int j = 0; j < 4; ++j) cp[j] = cm[j] = c[j];
            cp[k] += h;
            cm[k] -= h;
            const auto xp = rms_to_cartesian(RMSPoint(cp[0], cp[1], cp[2], cp[3]));
            const auto xm = rms_to_cartesian(RMSPoint(cm[0], cm[1], cm[2], cm[3]));
            for (int mu = 0; mu < 4; ++mu) J[mu][k] = (xp[mu] - xm[mu]) / (2 * h);
        }
        // Laplace expansion of the 4x4 determinant.
        auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
            return J[r0][c0] * (J[r1][c1] * J[r2][c2] - J[r1][c2] * J[r2][c1]) -
                   J[r0][c1] * (J[r1][c0] * J[r2][c2] - J[r1][c2] * J[r2][c0]) +
                   J[r0][c2] * (J[r1][c0] * J[r2][c1] - J[r1][c1] * J[r2][c0]);
        };
        const double det = J[0][0] * det3(1, 2, 3, 1, 2, 3) - J[0][1] * det3(1, 2, 3, 0, 2, 3) +
                           J[0][2] * det3(1, 2, 3, 0, 1, 3) - J[0][3] * det3(1, 2, 3, 0, 1, 2);
        CHECK(std::abs(det) == doctest::Approx(measure_weight(p)).epsilon(1e-6));
    }
}

TEST_CASE("two-body split") {
    const TwoBodyMasses eq(1.0, 1.0);
    const FourVector p1{0.3, 0.2, -0.1, 0.5};
    const auto s = cm_split({0, 1, 2, 3}, {1, 0, 0, 1}, p1, -1.0 * p1, eq);
    CHECK(euclidean_norm2(s.P) == doctest::Approx(0.0));
    CHECK(euclidean_norm2(s.p - p1) < 1e-28);

    const TwoBodyMasses heavy(1.0, 1e9);
    const FourVector x2{0.4, -1.0, 2.0, 0.5};
    const auto h = cm_split({1, 2, 3, 4}, x2, p1, {0.1, 0.1, 0.1, 0.1}, heavy);
    CHECK(std::sqrt(euclidean_norm2(h.X - x2)) < 1e-8);
    CHECK(std::sqrt(euclidean_norm2(h.p - p1)) < 1e-8);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int i = 0; i < 200; ++i) {
        const TwoBodyMasses m(u(rng), u(rng));
        const auto a = random_vector(rng), b = random_vector(rng);
        const auto split = cm_split(random_vector(rng), random_vector(rng), a, b, m);
        CHECK(two_body_K(a, b, m) == doctest::Approx(separated_K(split.P, split.p, m)).epsilon(1e-12));
        const auto back = cm_join(split, m);
        CHECK(euclidean_norm2(back.p1 - a) < 1e-24);
        CHECK(euclidean_norm2(back.p2 - b) < 1e-24);
    }
}
