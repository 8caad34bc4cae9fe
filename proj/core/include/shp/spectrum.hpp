#pragma once

#include <vector>

#include "shp/radial.hpp"

namespace shp::radial {

// s_a = 2 M (K_a - K)
double mass_squared(double K_a, double K, double M);

// c sqrt(M^2 c^2 + 2 M K_a). ImaginaryMass when the radicand is negative.
double total_energy(double K_a, double M, double c = 1.0);

// Terms Mc^2 binom(1/2, j) (2 K_a / Mc^2)^j for j = 0..order:
// Mc^2, K_a, -K_a^2/(2Mc^2), K_a^3/(2 M^2 c^4), ...
// DivergenceWarning when |2 K_a / Mc^2| >= 1.
std::vector<double> energy_expansion(double K_a, double M, int order, double c = 1.0);

// Z^2 alpha^2 (m/M) / (4 N^2), N = n_a + l + 1.
double relativistic_correction_ratio(int Z, double m, double M, int n_a, int ell, double alpha);

struct SpectralLine {
    int n_a = 0;
    int ell = 0;
    int N = 1;
    double K_a = 0.0;
    double K_ref = 0.0;            // K in s = 2M(K_a - K)
    double s_a = 0.0;
    double s_linear = 0.0;         // M^2 c^2 + 2 M K_a
    double E_a = 0.0;
    std::vector<double> E_series;  // terms through third order
    double correction_ratio = 0.0; // |K_a| / (2 M c^2), first-order relative correction
    double correction = 0.0;       // K_a^2 / (2 M c^2)
};

// Assemble the observables of one level. K_ref defaults to -M c^2 / 2.
SpectralLine assemble_line(int n_a, int ell, double K_a, double M, const UnitSystem& units,
                           std::optional<double> K_ref = std::nullopt);

struct PositroniumReport {
    SpectralLine line;
    double binding = 0.0;        // K_a, eV
    double delta = 0.0;          // |K_a| times the correction ratio, eV
    double ratio = 0.0;
    double hyperfine = 8.4e-4;   // eV
    double fraction_of_hyperfine = 0.0;
};

// Ground state of e+ e- with standard constants; requires the eV system.
PositroniumReport positronium_report(const UnitSystem& units = UnitSystem::electron_volt());

}  // namespace shp::radial
