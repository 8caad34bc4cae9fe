#include "shp/spectrum.hpp"

#include <cmath>
#include <string>

#include "shp/errors.hpp"

namespace shp::radial {

double mass_squared(double K_a, double K, double M) { return 2.0 * M * (K_a - K); }

double total_energy(double K_a, double M, double c) {
    if (!(M > 0.0) || !(c > 0.0)) throw DomainError("mass and c must be positive");
    const double radicand = M * M * c * c + 2.0 * M * K_a;
    if (radicand < 0.0)
        throw ImaginaryMass("M^2 c^2 + 2 M K_a = " + std::to_string(radicand) + " < 0");
    return c * std::sqrt(radicand);
}

std::vector<double> energy_expansion(double K_a, double M, int order, double c) {
    if (order < 0) throw DomainError("expansion order must be non-negative");
    if (!(M > 0.0) || !(c > 0.0)) throw DomainError("mass and c must be positive");
    const double rest = M * c * c;
    const double x = 2.0 * K_a / rest;
    if (std::abs(x) >= 1.0)
        throw DivergenceWarning("|2 K_a / M c^2| = " + std::to_string(std::abs(x)) +
                                " is outside the radius of convergence");
    std::vector<double> terms;
    terms.reserve(order + 1);
    double binom = 1.0;  // binom(1/2, j)
    double xp = 1.0;
    for (int j = 0; j <= order; ++j) {
        terms.push_back(rest * binom * xp);
        binom *= (0.5 - j) / (j + 1.0);
        xp *= x;
    }
    return terms;
}

double relativistic_correction_ratio(int Z, double m, double M, int n_a, int ell, double alpha) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    if (Z < 1) throw DomainError("Z must be >= 1");
    if (!(m > 0.0) || !(M > 0.0)) throw DomainError("masses must be positive");
    const double N = n_a + ell + 1;
    return double(Z) * Z * alpha * alpha * (m / M) / (4.0 * N * N);
}

SpectralLine assemble_line(int n_a, int ell, double K_a, double M, const UnitSystem& units,
                           std::optional<double> K_ref) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    const double c = units.c;
    const double rest = M * c * c;
    SpectralLine line;
    line.n_a = n_a;
    line.ell = ell;
    line.N = n_a + ell + 1;
    line.K_a = K_a;
    line.K_ref = K_ref ? *K_ref : -0.5 * rest;
    line.s_a = mass_squared(K_a, line.K_ref, M);
    line.s_linear = M * M * c * c + 2.0 * M * K_a;
    line.E_a = total_energy(K_a, M, c);
    line.E_series = energy_expansion(K_a, M, 3, c);
    line.correction_ratio = std::abs(K_a) / (2.0 * rest);
    line.correction = K_a * K_a / (2.0 * rest);
    return line;
}

PositroniumReport positronium_report(const UnitSystem& units) {
    if (units.mode != UnitSystem::Mode::ElectronVolt)
        throw DomainError("the positronium report needs the eV unit system");
    const double me = units.electron_mass;
    const double M = 2.0 * me;
    const double m = 0.5 * me;
    PositroniumReport r;
    const double K = coulomb_K(0, 0, 1, m, units);
    r.line = assemble_line(0, 0, K, M, units);
    r.binding = K;
    r.ratio = relativistic_correction_ratio(1, m, M, 0, 0, units.alpha);
    r.delta = std::abs(K) * r.ratio;
    r.fraction_of_hyperfine = r.delta / r.hyperfine;
    return r;
}

}  // namespace shp::radial
