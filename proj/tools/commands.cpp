#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "shp/errors.hpp"
#include "shp/hyperangular.hpp"
#include "shp/induced.hpp"
#include "shp/io.hpp"
#include "shp/radial.hpp"
#include "shp/specfun.hpp"
#include "shp/spectrum.hpp"
#include "table.hpp"
#include "verify.hpp"

namespace shp::cli {

namespace {

using radial::UnitSystem;
namespace ind = shp::induced;

constexpr double pi = std::numbers::pi;

std::string fmt(double x) { return io::format_double(x); }

bool is_coulomb(const RunConfig& c) { return c.potential == "coulomb" || c.potential == "positronium"; }

int charge(const RunConfig& c) { return c.potential == "positronium" ? 1 : c.Z; }

std::string momentum2_unit(const UnitSystem& u) {
    return u.mode == UnitSystem::Mode::Atomic ? "m_e*hartree" : "eV^2/c^2";
}

void add_common_meta(Table& t, const RunConfig& cfg, const UnitSystem& u) {
    t.add_meta("command", cfg.command);
    t.add_meta("units", radial::to_string(u.mode));
    t.add_meta("energy_unit", u.energy_unit);
    t.add_meta("length_unit", u.length_unit);
    t.add_meta("mass_unit", u.mass_unit);
}

radial::PotentialSpec make_potential(const RunConfig& cfg, const UnitSystem& u) {
    if (is_coulomb(cfg)) return radial::Coulomb{charge(cfg), u.e2};
    if (cfg.potential == "oscillator") return radial::Oscillator{cfg.omega};
    return io::read_tabulated_csv_file(cfg.table);
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
    const UnitSystem u = resolve_units(cfg);
    const Masses ms = resolve_masses(cfg);
    const double m = ms.reduced * u.electron_mass;
    const double M = ms.total * u.electron_mass;
    const bool coulomb = is_coulomb(cfg);
    const bool oscillator = cfg.potential == "oscillator";
    if (cfg.method == "analytic" && !(coulomb || oscillator))
        throw ConfigError("method: analytic spectra exist only for coulomb and oscillator");

    const int l_max = coulomb ? std::min(cfg.l_max.value_or(cfg.N_max - 1), cfg.N_max - 1)
                              : cfg.l_max.value_or(2);
    const auto V = make_potential(cfg, u);
    radial::RadialGridParams grid;
    if (cfg.grid) grid.points = *cfg.grid;
    if (cfg.tol) grid.tolerance = *cfg.tol;

    struct Level {
        int n_a, l;
        double K, error;
    };
    // One independent solve per l; results are gathered in l order.
    std::vector<std::future<std::vector<Level>>> jobs;
    for (int l = 0; l <= l_max; ++l) {
        const int count = coulomb ? cfg.N_max - l : cfg.levels;
        jobs.push_back(std::async(std::launch::async, [&, l, count] {
            std::vector<Level> out;
            if (cfg.method == "analytic") {
                for (int na = 0; na < count; ++na)
                    out.push_back({na, l,
                                   coulomb ? radial::coulomb_K(na, l, std::get<radial::Coulomb>(V), m, u)
                                           : radial::oscillator_K(na, l, cfg.omega, u),
                                   0.0});
            } else {
                for (const auto& s : radial::solve_radial_numeric(V, l, count, m, u, grid))
                    out.push_back({s.n_a, l, s.K, s.error_estimate});
            }
            return out;
        }));
    }
    std::vector<Level> levels;
    for (auto& j : jobs)
        for (const auto& lv : j.get()) levels.push_back(lv);
    auto shell = [&](const Level& a) { return oscillator ? 2 * a.n_a + a.l : a.n_a + a.l + 1; };
    std::stable_sort(levels.begin(), levels.end(), [&](const Level& a, const Level& b) {
        if (shell(a) != shell(b)) return shell(a) < shell(b);
        return a.l < b.l;
    });

    Table t;
    t.schema = "shp.spectrum/1";
    add_common_meta(t, cfg, u);
    t.add_meta("potential", cfg.potential);
    if (coulomb) t.add_meta("Z", std::to_string(charge(cfg)));
    if (oscillator) t.add_meta("omega", fmt(cfg.omega));
    if (cfg.potential == "tabulated") t.add_meta("table", cfg.table);
    t.add_meta("reduced_mass", fmt(m) + " " + u.mass_unit);
    t.add_meta("total_mass", fmt(M) + " " + u.mass_unit);
    t.add_meta("K_reference", fmt(-0.5 * M * u.c * u.c) + " " + u.energy_unit);
    t.add_meta("method", cfg.method);
    if (cfg.method == "numeric") {
        t.add_meta("grid_points", std::to_string(grid.points));
        t.add_meta("tolerance", fmt(grid.tolerance));
    }
    t.add_meta("N_definition", oscillator ? "2 n_a + l" : "n_a + l + 1");
    t.add_meta("ordering", "N, then l");

    t.add_column("n_a", "1");
    t.add_column("l", "1");
    t.add_column("N", "1");
    t.add_column("K_a", u.energy_unit);
    t.add_column("K_exact", u.energy_unit);
    t.add_column("error_estimate", u.energy_unit);
    t.add_column("s_a", momentum2_unit(u));
    t.add_column("E_a", u.energy_unit);
    t.add_column("correction_ratio", "1");
    t.add_column("correction", u.energy_unit);

    for (const auto& lv : levels) {
        const double rest = M * u.c * u.c;
        Cell exact;
        if (coulomb) exact = radial::coulomb_K(lv.n_a, lv.l, std::get<radial::Coulomb>(V), m, u);
        if (oscillator) exact = radial::oscillator_K(lv.n_a, lv.l, cfg.omega, u);
        Cell energy;
        try {
            energy = radial::total_energy(lv.K, M, u.c);
        } catch (const ImaginaryMass&) {
        }
        t.rows.push_back({(long long)lv.n_a, (long long)lv.l, (long long)shell(lv), lv.K,
                          exact, lv.error, radial::mass_squared(lv.K, -0.5 * rest, M), energy,
                          std::abs(lv.K) / (2.0 * rest), lv.K * lv.K / (2.0 * rest)});
    }

    if (cfg.potential == "positronium" && u.mode == UnitSystem::Mode::ElectronVolt && ms.reduced == 0.5 &&
        ms.total == 2.0) {
        const auto ps = radial::positronium_report(u);
        t.add_meta("positronium.binding", fmt(ps.binding) + " eV");
        t.add_meta("positronium.delta", fmt(ps.delta) + " eV");
        t.add_meta("positronium.ratio", fmt(ps.ratio));
        t.add_meta("positronium.hyperfine", fmt(ps.hyperfine) + " eV");
        t.add_meta("positronium.fraction_of_hyperfine", fmt(ps.fraction_of_hyperfine));
    }
    return {t.render(resolve_format(cfg)), 0};
}

CommandResult cmd_wavefn(const RunConfig& cfg) {
    const UnitSystem u = resolve_units(cfg);
    const Masses ms = resolve_masses(cfg);
    const double m = ms.reduced * u.electron_mass;
    const bool coulomb = is_coulomb(cfg);
    if (!coulomb && cfg.potential != "oscillator")
        throw ConfigError("potential: wavefn samples the closed forms, coulomb or oscillator");

    const int n = cfg.n.value_or(0);
    const int l = cfg.l.value_or(n);
    const hyperangular::HyperangularState state(n, cfg.k, l, cfg.conjugated,
                                                n == 0 ? std::optional<double>(cfg.eps) : std::nullopt);
    const int nodes = cfg.grid.value_or(12);
    const int Z = charge(cfg);

    // rho: Gauss-Laguerre matched to the radial decay, exact for the closed forms.
    std::vector<double> rho, w_rho;
    if (coulomb) {
        const int N = cfg.n_a + l + 1;
        const double s = N * radial::bohr_radius(m, u.e2, u) / (2.0 * Z);
        const auto q = specfun::gauss_laguerre(nodes, 2.0);
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            rho.push_back(s * q.nodes[i]);
            w_rho.push_back(s * s * s * q.weights[i] * std::exp(q.nodes[i]) * rho.back());
        }
    } else {
        const double a = m * cfg.omega / u.hbar;
        const auto q = specfun::gauss_laguerre(nodes, 0.5);
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            rho.push_back(std::sqrt(q.nodes[i] / a));
            w_rho.push_back(q.weights[i] * std::exp(q.nodes[i]) / (2.0 * std::pow(a, 1.5)) * rho.back());
        }
    }
    // theta: Gauss-Legendre in cos(theta); sin^2 dtheta = sin dxi.
    const auto qt = specfun::gauss_legendre(nodes);
    // beta: Gauss-Jacobi in tanh(beta) with the end-point power of |b|^2 / (1 - zeta^2).
    const double nu = n == 0 ? cfg.eps : double(n);
    const auto qb = specfun::gauss_jacobi(nodes, nu - 1.0, nu - 1.0);

    Table t;
    t.schema = "shp.wavefn/1";
    add_common_meta(t, cfg, u);
    t.add_meta("potential", coulomb ? "coulomb" : "oscillator");
    if (coulomb) t.add_meta("Z", std::to_string(Z));
    else t.add_meta("omega", fmt(cfg.omega));
    t.add_meta("reduced_mass", fmt(m) + " " + u.mass_unit);
    t.add_meta("n_a", std::to_string(cfg.n_a));
    t.add_meta("l", std::to_string(l));
    t.add_meta("n", std::to_string(n));
    t.add_meta("k", std::to_string(cfg.k));
    t.add_meta("m", std::to_string(state.m()));
    if (n == 0) t.add_meta("eps", fmt(cfg.eps));
    t.add_meta("conjugated", cfg.conjugated ? "true" : "false");
    t.add_meta("nodes_per_axis", std::to_string(nodes));
    t.add_meta("psi", "rho^-1/2 R(rho) Theta(theta) chi(beta, phi)");
    t.add_meta("weight", "quadrature weight times rho^3 sin^2(theta) cosh(beta)");

    t.add_column("rho", u.length_unit);
    t.add_column("theta", "rad");
    t.add_column("beta", "1");
    t.add_column("phi", "rad");
    t.add_column("weight", u.length_unit + "^3");
    t.add_column("re", u.length_unit + "^-3/2");
    t.add_column("im", u.length_unit + "^-3/2");

    double norm2 = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double R = coulomb ? radial::coulomb_radial(cfg.n_a, l, Z, rho[i], m, u)
                                 : radial::oscillator_radial(cfg.n_a, l, cfg.omega, rho[i], m, u);
        const double radial_part = R / std::sqrt(rho[i]);
        for (std::size_t a = 0; a < qt.nodes.size(); ++a) {
            const double xi = qt.nodes[a];
            const double st = std::sqrt((1.0 - xi) * (1.0 + xi));
            const double theta = std::acos(xi);
            const double Th = hyperangular::theta_physical(l, n, xi, st);
            for (std::size_t b = 0; b < qb.nodes.size(); ++b) {
                const double z = qb.nodes[b];
                const double omz = (1.0 - z) * (1.0 + z);
                const double sech = std::sqrt(omz);
                const double beta = std::atanh(z);
                const double wb = qb.weights[b] * std::pow(omz, -nu - 0.5);
                for (int c = 0; c < nodes; ++c) {
                    const double phi = (c + 0.5) * 2.0 * pi / nodes;
                    const auto psi = radial_part * Th * hyperangular::chi(state, z, sech, phi);
                    const double w = w_rho[i] * qt.weights[a] * st * wb * (2.0 * pi / nodes);
                    norm2 += w * std::norm(psi);
                    mean += w * rho[i] * std::norm(psi);
                    t.rows.push_back({rho[i], theta, beta, phi, w, psi.real(), psi.imag()});
                }
            }
        }
    }
    t.add_meta("quadrature_norm2", fmt(norm2));
    t.add_meta("mean_rho", fmt(mean / norm2) + " " + u.length_unit);
    return {t.render(resolve_format(cfg)), 0};
}

CommandResult cmd_verify(const RunConfig& cfg) {
    VerifyParams p;
    if (cfg.grid) p.angular_nodes = *cfg.grid;
    p.tolerance = cfg.tol;
    p.seed = cfg.seed;
    const auto checks = run_suite(cfg.suite, p);

    Table t;
    t.schema = "shp.verify/1";
    t.add_meta("command", "verify");
    t.add_meta("suite", cfg.suite);
    t.add_meta("angular_nodes", std::to_string(p.angular_nodes));
    t.add_meta("seed", std::to_string(p.seed));
    t.add_column("check");
    t.add_column("residual", "1");
    t.add_column("tolerance", "1");
    t.add_column("pass");
    int failed = 0;
    for (const auto& c : checks) {
        t.rows.push_back({c.name, c.residual, c.tolerance, c.pass});
        failed += !c.pass;
    }
    t.add_meta("checks", std::to_string(checks.size()));
    t.add_meta("failed", std::to_string(failed));
    t.add_meta("pass", failed == 0 ? "true" : "false");
    return {t.render(resolve_format(cfg)), failed == 0 ? 0 : 1};
}

CommandResult cmd_orbit(const RunConfig& cfg) {
    std::vector<ind::SpacelikeDirection> dirs;
    if (!cfg.orbit.empty()) {
        dirs = ind::parse_orbit_json(io::read_text_file(cfg.orbit));
    } else {
        dirs = {ind::reference_direction(), ind::SpacelikeDirection::from_angles(0.4, 1.0, 0.5),
                ind::SpacelikeDirection::from_angles(-0.7, 2.0, 4.0),
                ind::SpacelikeDirection::from_angles(1.1, 0.3, 2.5)};
    }

    ind::LorentzMatrix Lambda;
    if (cfg.random_lambda) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Lambda = ind::boost({u(rng), u(rng), u(rng)}) *
                 ind::rotation({u(rng), u(rng), u(rng) + 1e-3}, pi * u(rng));
    } else {
        Lambda = ind::boost(cfg.boost) *
                 ind::rotation({cfg.rotate[0], cfg.rotate[1], cfg.rotate[2]}, cfg.rotate[3]);
    }

    const int n = cfg.n.value_or(1);
    const int l = cfg.l.value_or(std::max(1, n));
    const hyperangular::HyperangularState state(n, cfg.k, l, cfg.conjugated,
                                                n == 0 ? std::optional<double>(cfg.eps) : std::nullopt);
    const auto psi = ind::product_wavefunction([](double r) { return 2.0 * std::exp(-r); }, state);
    auto bundle = ind::fiber_constant_bundle(dirs, psi);
    if (cfg.no_family) bundle = ind::BundleFunction(bundle.members());

    ind::TransportOptions topt;
    topt.interpolate = cfg.interpolate;
    const auto moved = ind::transport_state(Lambda, bundle, topt);

    ind::OrbitQuadrature q;
    q.rho_nodes = 12;
    q.theta_nodes = 12;
    q.beta_step = 0.25;
    q.phi_nodes = 32;
    const auto before = ind::member_norms(bundle, q);
    const auto after = ind::member_norms(moved, q);
    const double drift_tol = cfg.tol.value_or(1e-8);

    Table t;
    t.schema = "shp.orbit/1";
    t.add_meta("command", "orbit");
    std::string lam;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) lam += (lam.empty() ? "" : " ") + fmt(Lambda(r, c));
    t.add_meta("Lambda_row_major", lam);
    t.add_meta("Lambda_pseudo_orthogonality", fmt(ind::pseudo_orthogonality_residual(Lambda)));
    t.add_meta("state", "n=" + std::to_string(n) + " k=" + std::to_string(cfg.k) + " l=" + std::to_string(l));
    t.add_meta("radial", "2 exp(-rho), rho in bohr");
    t.add_meta("stabilization_tolerance", "1e-10");
    t.add_meta("norm_drift_tolerance", fmt(drift_tol));
    t.add_column("member", "1");
    for (const char* c : {"m0", "m1", "m2", "m3"}) t.add_column(c, "1");
    t.add_column("norm_before", "1");
    t.add_column("norm_after", "1");
    t.add_column("norm_drift", "1");
    t.add_column("stabilization", "1");
    t.add_column("pseudo_orthogonality", "1");
    t.add_column("source_distance", "1");
    t.add_column("pass");

    const auto m0 = ind::to_vector(ind::reference_direction().vec());
    int failed = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const auto D = ind::little_group_element(Lambda, dirs[i]);
        const double stab = (D * m0 - m0).norm();
        const double drift = std::abs(after[i] - before[i]);
        const bool ok = stab < 1e-10 && drift < drift_tol;
        failed += !ok;
        const auto& v = dirs[i].vec();
        t.rows.push_back({(long long)i, v.x0, v.x1, v.x2, v.x3, before[i], after[i], drift, stab,
                          ind::pseudo_orthogonality_residual(D), moved[i].source_distance, ok});
    }
    t.add_meta("pass", failed == 0 ? "true" : "false");
    return {t.render(resolve_format(cfg)), failed == 0 ? 0 : 1};
}

CommandResult cmd_constants(const RunConfig& cfg) {
    const UnitSystem u = resolve_units(cfg);
    u.validate();
    const bool au = u.mode == UnitSystem::Mode::Atomic;
    Table t;
    t.schema = "shp.constants/1";
    add_common_meta(t, cfg, u);
    t.add_column("quantity");
    t.add_column("value");
    t.add_column("unit");
    const double a0 = radial::bohr_radius(u.electron_mass, u.e2, u);
    const double hartree = u.electron_mass * u.e2 * u.e2 / (u.hbar * u.hbar);
    auto row = [&](const char* q, double v, const char* atomic_unit, const char* ev_unit) {
        t.rows.push_back({std::string(q), v, std::string(au ? atomic_unit : ev_unit)});
    };
    row("hbar", u.hbar, "hartree*au_time", "eV*nm/c");
    row("c", u.c, "bohr/au_time", "c");
    row("electron_mass", u.electron_mass, "m_e", "eV/c^2");
    row("e2", u.e2, "hartree*bohr", "eV*nm");
    row("alpha", u.alpha, "1", "1");
    row("alpha_inverse", 1.0 / u.alpha, "1", "1");
    row("hbar_c", u.hbar_c(), "hartree*bohr", "eV*nm");
    row("bohr_radius", a0, "bohr", "nm");
    row("hartree", hartree, "hartree", "eV");
    row("rydberg", 0.5 * hartree, "hartree", "eV");
    return {t.render(resolve_format(cfg)), 0};
}

CommandResult dispatch(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg);
    if (cfg.command == "wavefn") return cmd_wavefn(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "orbit") return cmd_orbit(cfg);
    return cmd_constants(cfg);
}

}  // namespace shp::cli
