#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shp::radial {

namespace codata {
inline constexpr double alpha_inverse = 137.035999084;
inline constexpr double hbar_c_eV_nm = 197.3269804;
inline constexpr double electron_rest_energy_eV = 510998.95;
inline constexpr double rydberg_eV = 13.605693122994;
}  // namespace codata

// Constants of the active unit system. Masses are expressed through
// electron_mass (a rest mass in the system's mass unit); Coulomb couplings
// through e2 = alpha * hbar * c.
struct UnitSystem {
    enum class Mode { Atomic, ElectronVolt };

    Mode mode = Mode::Atomic;
    double hbar = 1.0;
    double c = codata::alpha_inverse;
    double electron_mass = 1.0;
    double e2 = 1.0;
    double alpha = 1.0 / codata::alpha_inverse;
    std::string energy_unit = "hartree";
    std::string length_unit = "bohr";
    std::string mass_unit = "m_e";

    // hbar = m_e = e^2 = 1, c = 1/alpha.
    static UnitSystem atomic(double alpha = 1.0 / codata::alpha_inverse);
    // Energies in eV, lengths in nm, c = 1 so masses are rest energies.
    static UnitSystem electron_volt();

    double hbar_c() const { return hbar * c; }
    // hbar^2 / (2 m) for a mass m in this system.
    double kinetic_coefficient(double mass) const { return hbar * hbar / (2.0 * mass); }
    void validate() const;
};

const char* to_string(UnitSystem::Mode mode);

struct Coulomb {
    int Z = 1;
    double e2 = 1.0;  // coupling in the active units
};

struct Oscillator {
    double omega = 1.0;  // hbar * omega is an energy in the active units
};

struct Tabulated {
    std::vector<double> rho;
    std::vector<double> V;
};

using PotentialSpec = std::variant<Coulomb, Oscillator, Tabulated>;

// Throws DomainError on non-positive parameters or a non-increasing table.
void validate(const PotentialSpec& V);

Coulomb coulomb_in(const UnitSystem& units, int Z = 1);

struct RadialSolution {
    double K = 0.0;               // Richardson-extrapolated eigenvalue
    double K_fine = 0.0;          // finest-grid eigenvalue
    double error_estimate = 0.0;  // |K - extrapolation one level coarser|
    int n_a = 0;
    int ell = 0;
    int nodes = 0;                // interior sign changes of R
    std::vector<double> rho;      // finest grid
    std::vector<double> R;        // normalized: sum R^2 rho^2 h = 1
    double h = 0.0;
};

struct RadialGridParams {
    int points = 20000;             // interior nodes of the coarsest grid
    std::optional<double> rho_max;  // defaults per potential
    double tolerance = 1e-6;        // relative bound on error_estimate
};

// Lowest `count` eigenpairs of -(hbar^2/2m)[d^2/drho^2 + (2/rho) d/drho - l(l+1)/rho^2] + V.
// u = rho R on a uniform Dirichlet grid, Sturm bisection on the tridiagonal matrix at
// grid spacings h, h/2, h/4; K is the Richardson value of the two finest.
std::vector<RadialSolution> solve_radial_numeric(const PotentialSpec& V, int ell, int count,
                                                 double mass, const UnitSystem& units,
                                                 const RadialGridParams& grid = {});

double default_rho_max(const PotentialSpec& V, int ell, int count, double mass,
                       const UnitSystem& units);

double potential_value(const PotentialSpec& V, double rho);

// Closed forms.
double coulomb_K(int n_a, int ell, int Z, double mass, const UnitSystem& units = UnitSystem::atomic());
double coulomb_K(int n_a, int ell, const Coulomb& V, double mass, const UnitSystem& units);
double bohr_radius(double mass, double e2, const UnitSystem& units);
double coulomb_radial(int n_a, int ell, int Z, double rho, double mass = 1.0,
                      const UnitSystem& units = UnitSystem::atomic());

double oscillator_K(int n_a, int ell, double omega, const UnitSystem& units = UnitSystem::atomic());
double oscillator_radial(int n_a, int ell, double omega, double rho, double mass = 1.0,
                         const UnitSystem& units = UnitSystem::atomic());

// Interior sign changes, ignoring samples below rel_floor * max|R|.
int count_nodes(const std::vector<double>& R, double rel_floor = 1e-8);

}  // namespace shp::radial
