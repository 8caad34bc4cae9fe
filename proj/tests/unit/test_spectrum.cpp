#include <cmath>

#include "doctest.h"
#include "shp/errors.hpp"
#include "shp/spectrum.hpp"

using namespace shp::radial;
using doctest::Approx;

TEST_CASE("mass squared and total energy") {
    CHECK(mass_squared(-0.3, -0.3, 2.0) == 0.0);
    CHECK(mass_squared(-0.25, -1.0, 2.0) == Approx(3.0));
    CHECK(total_energy(0.0, 2.0, 3.0) == Approx(18.0));
    CHECK_THROWS_AS(total_energy(-1.2, 2.0, 1.0), shp::ImaginaryMass);
    // E^2 = c^2 s with K = -M c^2 / 2
    const auto u = UnitSystem::atomic();
    for (double K : {-0.5, -0.125, 1.5, 40.0}) {
        const double M = 4.0;
        const double s = mass_squared(K, -0.5 * M * u.c * u.c, M);
        CHECK(std::pow(total_energy(K, M, u.c), 2) == Approx(u.c * u.c * s).epsilon(1e-14));
    }
}

TEST_CASE("energy expansion") {
    const double M = 2.0, c = 1.0, K = -0.01;
    const auto t = energy_expansion(K, M, 3, c);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == Approx(M));
    CHECK(t[1] == Approx(K));
    CHECK(t[2] == Approx(-K * K / (2 * M)));
    CHECK(t[3] == Approx(K * K * K / (2 * M * M)));
    double sum = 0.0;
    for (double x : energy_expansion(K, M, 12, c)) sum += x;
    CHECK(sum == Approx(total_energy(K, M, c)).epsilon(1e-15));
    CHECK_THROWS_AS(energy_expansion(-1.0, M, 3, c), shp::DivergenceWarning);
}

TEST_CASE("relativistic correction ratio") {
    const double alpha = 1.0 / 137.035999084;
    CHECK(relativistic_correction_ratio(1, 0.5, 2.0, 0, 0, alpha) == Approx(alpha * alpha / 16));
    CHECK(relativistic_correction_ratio(1, 0.5, 2.0, 0, 0, alpha) == Approx(3.328e-6).epsilon(1e-3));
    double prev = 1.0;
    for (int N = 1; N < 50; ++N) {
        const double r = relativistic_correction_ratio(1, 0.5, 2.0, N - 1, 0, alpha);
        CHECK(r < prev);
        prev = r;
    }
    CHECK(relativistic_correction_ratio(1, 1.0 / (1 + 1.0 / 1836), 1837, 0, 0, alpha) < 1e-8);
}

TEST_CASE("assembled line and positronium") {
    const auto u = UnitSystem::atomic();
    const auto line = assemble_line(0, 0, -0.5, 4.0, u);
    CHECK(line.N == 1);
    CHECK(line.s_a == Approx(line.s_linear));
    CHECK(line.correction == Approx(0.25 / (8 * u.c * u.c)));

    const auto ps = positronium_report();
    CHECK(ps.binding == Approx(-6.8028465615).epsilon(1e-9));
    CHECK(ps.delta == Approx(2.2641e-5).epsilon(1e-4));
    CHECK(std::abs(ps.delta - 2e-5) <= 0.25 * 2e-5);
    CHECK(ps.fraction_of_hyperfine >= 0.02);
    CHECK(ps.fraction_of_hyperfine <= 0.035);
    CHECK_THROWS_AS(positronium_report(UnitSystem::atomic()), shp::DomainError);
}
