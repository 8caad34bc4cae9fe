#include "shp/radial.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_interp.h>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "shp/errors.hpp"
#include "shp/numerics.hpp"
#include "shp/specfun.hpp"

namespace shp::radial {

UnitSystem UnitSystem::atomic(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    UnitSystem u;
    u.mode = Mode::Atomic;
    u.alpha = alpha;
    u.c = 1.0 / alpha;
    return u;
}

UnitSystem UnitSystem::electron_volt() {
    UnitSystem u;
    u.mode = Mode::ElectronVolt;
    u.alpha = 1.0 / codata::alpha_inverse;
    u.c = 1.0;
    u.hbar = codata::hbar_c_eV_nm;
    u.electron_mass = codata::electron_rest_energy_eV;
    u.e2 = u.alpha * u.hbar_c();
    u.energy_unit = "eV";
    u.length_unit = "nm";
    u.mass_unit = "eV/c^2";
    return u;
}

void UnitSystem::validate() const {
    if (!(hbar > 0.0 && c > 0.0 && electron_mass > 0.0 && e2 > 0.0 && alpha > 0.0))
        throw DomainError("unit-system constants must be positive");
    if (std::abs(e2 - alpha * hbar_c()) > 1e-12 * e2)
        throw DomainError("e^2 and alpha disagree in this unit system");
}

const char* to_string(UnitSystem::Mode mode) {
    return mode == UnitSystem::Mode::Atomic ? "atomic" : "ev";
}

void validate(const PotentialSpec& V) {
    if (const auto* c = std::get_if<Coulomb>(&V)) {
        if (c->Z < 1) throw DomainError("Coulomb charge Z must be >= 1");
        if (!(c->e2 > 0.0)) throw DomainError("Coulomb coupling must be positive");
    } else if (const auto* o = std::get_if<Oscillator>(&V)) {
        if (!(o->omega > 0.0)) throw DomainError("oscillator frequency must be positive");
    } else {
        const auto& t = std::get<Tabulated>(V);
        if (t.rho.size() != t.V.size() || t.rho.size() < 3)
            throw DomainError("tabulated potential needs at least three (rho, V) pairs");
        for (std::size_t i = 0; i < t.rho.size(); ++i) {
            if (!std::isfinite(t.rho[i]) || !std::isfinite(t.V[i]))
                throw DomainError("tabulated potential has a non-finite entry at row " +
                                  std::to_string(i + 1));
            if (i > 0 && !(t.rho[i] > t.rho[i - 1]))
                throw DomainError("tabulated rho grid must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
        }
        if (!(t.rho.front() >= 0.0)) throw DomainError("tabulated rho must be non-negative");
    }
}

Coulomb coulomb_in(const UnitSystem& units, int Z) { return Coulomb{Z, units.e2}; }

namespace {

// Cubic spline through a table, held constant outside it.
class Spline {
public:
    explicit Spline(const Tabulated& t) : x_(t.rho), y_(t.V) {
        gsl_set_error_handler_off();
        interp_.reset(gsl_interp_alloc(gsl_interp_cspline, x_.size()));
        acc_.reset(gsl_interp_accel_alloc());
        if (!interp_ || !acc_) throw std::bad_alloc();
        if (gsl_interp_init(interp_.get(), x_.data(), y_.data(), x_.size()) != GSL_SUCCESS)
            throw DomainError("could not build a spline through the tabulated potential");
    }

    double operator()(double r) const {
        if (r <= x_.front()) return y_.front();
        if (r >= x_.back()) return y_.back();
        return gsl_interp_eval(interp_.get(), x_.data(), y_.data(), r, acc_.get());
    }

private:
    struct InterpFree { void operator()(gsl_interp* p) const { gsl_interp_free(p); } };
    struct AccelFree { void operator()(gsl_interp_accel* p) const { gsl_interp_accel_free(p); } };
    std::vector<double> x_, y_;
    std::unique_ptr<gsl_interp, InterpFree> interp_;
    std::unique_ptr<gsl_interp_accel, AccelFree> acc_;
};

struct Evaluator {
    explicit Evaluator(const PotentialSpec& V, double mass) : spec(V), m(mass) {
        if (const auto* t = std::get_if<Tabulated>(&V)) spline = std::make_unique<Spline>(*t);
    }
    double operator()(double r) const {
        if (const auto* c = std::get_if<Coulomb>(&spec)) return -c->Z * c->e2 / r;
        if (const auto* o = std::get_if<Oscillator>(&spec))
            return 0.5 * m * o->omega * o->omega * r * r;
        return (*spline)(r);
    }
    const PotentialSpec& spec;
    double m;
    std::unique_ptr<Spline> spline;
};

struct Tridiagonal {
    std::vector<double> diag;
    double off = 0.0;  // constant off-diagonal
    double h = 0.0;
    std::vector<double> rho;
};

Tridiagonal build(const Evaluator& V, int ell, double kappa, double rho_max, int n) {
    Tridiagonal t;
    t.h = rho_max / (n + 1);
    t.off = -kappa / (t.h * t.h);
    t.diag.resize(n);
    t.rho.resize(n);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 1) * t.h;
        t.rho[i] = r;
        t.diag[i] = 2.0 * kappa / (t.h * t.h) + V(r) + kappa * ell * (ell + 1) / (r * r);
    }
    return t;
}

// Number of eigenvalues strictly below x (Sturm count of the LDL^T pivots).
int sturm_count(const Tridiagonal& t, double x) {
    const double b2 = t.off * t.off;
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        d = (t.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (0-based) by bisection.
double bisect_eigenvalue(const Tridiagonal& t, int k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double a : t.diag) {
        lo = std::min(lo, a - 2.0 * std::abs(t.off));
        hi = std::max(hi, a + 2.0 * std::abs(t.off));
    }
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda) {
    const int n = int(t.diag.size());
    const double shift = lambda + 1e-10 * std::max(std::abs(lambda), std::abs(t.off) * 1e-6);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        trip.emplace_back(i, i, t.diag[i] - shift);
        if (i + 1 < n) {
            trip.emplace_back(i, i + 1, t.off);
            trip.emplace_back(i + 1, i, t.off);
        }
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) throw ConvergenceError("inverse iteration factorization failed");
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
    for (int it = 0; it < 3; ++it) {
        x = lu.solve(x);
        if (lu.info() != Eigen::Success) throw ConvergenceError("inverse iteration solve failed");
        x /= x.norm();
    }
    return std::vector<double>(x.data(), x.data() + n);
}

void check_fall_to_center(const Evaluator& V, int ell, double kappa, double h) {
    // rho^2 V(rho) below -(l + 1/2)^2 hbar^2 / 2m at small rho has no ground state.
    const double limit = -(ell + 0.5) * (ell + 0.5) * kappa;
    bool all_below = true;
    for (double r : {h, 2.0 * h, 4.0 * h}) {
        const double g = r * r * V(r);
        if (!(g < limit)) all_below = false;
    }
    if (all_below)
        throw DomainError("potential falls faster than -(l+1/2)^2 hbar^2/(2 m rho^2) at the origin;"
                          " no ground state");
}

}  // namespace

double potential_value(const PotentialSpec& V, double rho) {
    validate(V);
    return Evaluator(V, 1.0)(rho);
}

double bohr_radius(double mass, double e2, const UnitSystem& units) {
    return units.hbar * units.hbar / (mass * e2);
}

double default_rho_max(const PotentialSpec& V, int ell, int count, double mass,
                       const UnitSystem& units) {
    if (const auto* c = std::get_if<Coulomb>(&V)) {
        const double a = bohr_radius(mass, c->e2, units) / c->Z;
        const double n_top = count + ell;
        return a * std::max(40.0, 14.0 * n_top * n_top);
    }
    if (const auto* o = std::get_if<Oscillator>(&V)) {
        const double b = std::sqrt(units.hbar / (mass * o->omega));
        const double e_top = ell + 2.0 * (count - 1) + 1.5;
        return b * std::max(10.0, std::sqrt(2.0 * e_top) + 6.0);
    }
    return std::get<Tabulated>(V).rho.back();
}

std::vector<RadialSolution> solve_radial_numeric(const PotentialSpec& V, int ell, int count,
                                                 double mass, const UnitSystem& units,
                                                 const RadialGridParams& grid) {
    validate(V);
    if (ell < 0) throw IndexError("l must be non-negative");
    if (count < 1) throw DomainError("count must be at least 1");
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (grid.points < 16) throw DomainError("radial grid needs at least 16 points");
    if (!(grid.tolerance > 0.0)) throw DomainError("radial tolerance must be positive");
    const double rho_max = grid.rho_max ? *grid.rho_max : default_rho_max(V, ell, count, mass, units);
    if (!(rho_max > 0.0)) throw DomainError("rho_max must be positive");

    const Evaluator pot(V, mass);
    const double kappa = units.kinetic_coefficient(mass);

    // Spacings h, h/2, h/4 share nodes: n -> 2n + 1 -> 4n + 3.
    const int n0 = grid.points;
    const std::array<int, 3> sizes = {n0, 2 * n0 + 1, 4 * n0 + 3};
    check_fall_to_center(pot, ell, kappa, rho_max / (sizes[2] + 1));

    std::array<Tridiagonal, 3> mats;
    std::array<std::vector<double>, 3> eig;
    for (int g = 0; g < 3; ++g) {
        mats[g] = build(pot, ell, kappa, rho_max, sizes[g]);
        if (count > sizes[g]) throw DomainError("more levels requested than grid points");
        for (int k = 0; k < count; ++k) eig[g].push_back(bisect_eigenvalue(mats[g], k));
    }

    std::vector<RadialSolution> out;
    for (int k = 0; k < count; ++k) {
        RadialSolution s;
        s.n_a = k;
        s.ell = ell;
        s.K_fine = eig[2][k];
        s.K = numerics::richardson(eig[2][k], eig[1][k]);
        const double coarser = numerics::richardson(eig[1][k], eig[0][k]);
        s.error_estimate = std::abs(s.K - coarser);
        const double scale = std::max(std::abs(s.K), std::numeric_limits<double>::min());
        if (s.error_estimate > grid.tolerance * scale)
            throw ConvergenceError("level " + std::to_string(k) + " (l=" + std::to_string(ell) +
                                   "): estimated relative error " +
                                   std::to_string(s.error_estimate / scale) + " exceeds " +
                                   std::to_string(grid.tolerance));

        const auto& t = mats[2];
        auto u = inverse_iteration(t, eig[2][k]);
        // Fix the sign so the innermost significant lobe is positive.
        const double umax = std::abs(*std::max_element(u.begin(), u.end(), [](double a, double b) {
            return std::abs(a) < std::abs(b);
        }));
        for (double x : u)
            if (std::abs(x) > 1e-6 * umax) {
                if (x < 0.0)
                    for (double& y : u) y = -y;
                break;
            }
        double norm = 0.0;
        for (double x : u) norm += x * x;
        norm = std::sqrt(norm * t.h);
        s.h = t.h;
        s.rho = t.rho;
        s.R.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) s.R[i] = u[i] / (norm * t.rho[i]);
        s.nodes = count_nodes(s.R);
        out.push_back(std::move(s));
    }
    return out;
}

double coulomb_K(int n_a, int ell, int Z, double mass, const UnitSystem& units) {
    return coulomb_K(n_a, ell, coulomb_in(units, Z), mass, units);
}

double coulomb_K(int n_a, int ell, const Coulomb& V, double mass, const UnitSystem& units) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    const double N = n_a + ell + 1;
    return -double(V.Z) * V.Z * mass * V.e2 * V.e2 / (2.0 * units.hbar * units.hbar * N * N);
}

double coulomb_radial(int n_a, int ell, int Z, double rho, double mass, const UnitSystem& units) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    if (!(rho >= 0.0)) throw DomainError("rho must be non-negative");
    const double N = n_a + ell + 1;
    const double a0 = bohr_radius(mass, units.e2, units);
    const double k = 2.0 * Z / (N * a0);
    const double x = k * rho;
    // (2Z/(N a0))^{3/2} sqrt(n_a! / (2N (n_a + 2l + 1)!))
    const double c = std::pow(k, 1.5) *
                     std::sqrt(specfun::gamma_fn(n_a + 1.0) /
                               (2.0 * N * specfun::gamma_fn(n_a + 2.0 * ell + 2.0)));
    return c * std::pow(x, ell) * std::exp(-0.5 * x) * specfun::laguerre(n_a, 2.0 * ell + 1.0, x);
}

double oscillator_K(int n_a, int ell, double omega, const UnitSystem& units) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    return units.hbar * omega * (ell + 2.0 * n_a + 1.5);
}

double oscillator_radial(int n_a, int ell, double omega, double rho, double mass,
                         const UnitSystem& units) {
    if (n_a < 0 || ell < 0) throw IndexError("quantum numbers must be non-negative");
    if (!(rho >= 0.0)) throw DomainError("rho must be non-negative");
    const double a = mass * omega / units.hbar;
    const double x = a * rho * rho;
    const double c = std::sqrt(2.0 * std::pow(a, 1.5) * specfun::gamma_fn(n_a + 1.0) /
                               specfun::gamma_fn(n_a + ell + 1.5));
    return c * std::pow(x, 0.5 * ell) * std::exp(-0.5 * x) * specfun::laguerre(n_a, ell + 0.5, x);
}

int count_nodes(const std::vector<double>& R, double rel_floor) {
    double rmax = 0.0;
    for (double x : R) rmax = std::max(rmax, std::abs(x));
    int nodes = 0;
    int last_sign = 0;
    for (double x : R) {
        if (std::abs(x) <= rel_floor * rmax) continue;
        const int s = x > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++nodes;
        last_sign = s;
    }
    return nodes;
}

}  // namespace shp::radial
