#include "verify.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "shp/angular_grid.hpp"
#include "shp/errors.hpp"
#include "shp/hyperangular.hpp"
#include "shp/induced.hpp"
#include "shp/radial.hpp"
#include "shp/specfun.hpp"
#include "shp/spectrum.hpp"

namespace shp::cli {

namespace {

namespace ha = shp::hyperangular;
namespace ind = shp::induced;

class Collector {
public:
    explicit Collector(const VerifyParams& p) : p_(p) {}

    void add(std::string name, double residual, double tolerance) {
        const double tol = p_.tolerance.value_or(tolerance);
        checks_.push_back({std::move(name), residual, tol, std::isfinite(residual) && residual <= tol});
    }
    // Observed convergence ratio for a second-order method.
    void add_order(std::string name, double ratio) { add(std::move(name), std::abs(ratio - 4.0), 0.5); }

    std::vector<Check> take() { return std::move(checks_); }

private:
    const VerifyParams& p_;
    std::vector<Check> checks_;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
double rel(ha::complex a, ha::complex b) { return std::abs(a - b) / std::abs(b); }

std::string tag(const char* base, std::initializer_list<std::pair<const char*, int>> idx) {
    std::string s = base;
    for (const auto& [k, v] : idx) s += std::string("_") + k + std::to_string(v);
    return s;
}

void angular_suite(Collector& c) {
    double worst = 0.0;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n)
            worst = std::max(worst, rel(specfun::normalization_integral(m, n),
                                        specfun::normalization_closed_form(m, n)));
    c.add("normalization_identity_max_rel_m<=8", worst, 1e-8);
    c.add("normalization_m2_n1_equals_1/6", rel(specfun::normalization_integral(2, 1), 1.0 / 6.0), 1e-8);

    double ortho = 0.0;
    const auto gl = specfun::gauss_legendre(12);
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
            double s = 0.0;
            for (std::size_t q = 0; q < gl.nodes.size(); ++q)
                s += gl.weights[q] * specfun::legendre_p(i, gl.nodes[q]) * specfun::legendre_p(j, gl.nodes[q]);
            ortho = std::max(ortho, std::abs(s - (i == j ? 2.0 / (2 * i + 1) : 0.0)));
        }
    c.add("legendre_orthogonality_gauss12", ortho, 1e-13);

    const auto& eps = ha::default_eps_sequence();
    for (int m = 0; m <= 4; ++m) {
        std::vector<double> n2, t2, l3;
        for (double e : eps) {
            const auto mo = ha::regularized_moments(m, e);
            n2.push_back(mo.n2);
            t2.push_back(mo.tanh2);
            l3.push_back(mo.l3);
        }
        c.add(tag("regularized_N2_eps_drift", {{"m", m}}), ha::extrapolate_in_eps(eps, n2).drift, 1e-3);
        c.add(tag("regularized_tanh2_eps_drift", {{"m", m}}), ha::extrapolate_in_eps(eps, t2).drift, 1e-3);
        double l3_err = 0.0;
        for (double v : l3) l3_err = std::max(l3_err, std::abs(v - (m + 0.5)));
        c.add(tag("regularized_L3", {{"m", m}}), l3_err, 1e-12);
    }
}

void ladder_suite(Collector& c, int nodes) {
    const auto grid = ha::make_grid(nodes, nodes, 16);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            const auto up = ha::ladder_richardson(n, k, grid, true);
            const auto ex_up = ha::ladder_coefficient_exact(n, k);
            c.add(tag("raising", {{"n", n}, {"k", k}}), rel(up.value, ex_up), 1e-4);
            const auto down = ha::ladder_richardson(n, k, grid, false);
            const auto ex_down = ha::lowering_coefficient_exact(n, k);
            c.add(tag("lowering", {{"n", n}, {"k", k}}), rel(down.value, ex_down), 1e-4);
            if (k == 0)
                c.add_order(tag("raising_order", {{"n", n}}),
                            std::abs(up.coarse - ex_up) / std::abs(up.fine - ex_up));
        }
}

void casimir_suite(Collector& c, int nodes) {
    const auto grid = ha::make_grid(nodes, nodes, 16);
    const ha::GridOperator n2 = [](const auto& f, const auto& o) { return ha::apply_N2(f, o); };
    const ha::GridOperator n2c = [](const auto& f, const auto& o) { return ha::apply_N2_composed(f, o); };
    const ha::GridOperator lam = [](const auto& f, const auto& o) { return ha::apply_Lambda(f, o); };
    const ha::GridOperator lamc = [](const auto& f, const auto& o) { return ha::apply_Lambda_composed(f, o); };

    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 1; ++k) {
            const ha::HyperangularState s(n, k, n);
            const auto f = ha::chi_state(grid, s);
            const auto e = ha::rayleigh_richardson(n2, f);
            c.add(tag("N2_eigenvalue", {{"n", n}, {"k", k}}), rel(e.value.real(), s.n2_eigenvalue()), 1e-4);
            const auto ec = ha::rayleigh_richardson(n2c, f);
            c.add(tag("N2_composed_vs_direct", {{"n", n}, {"k", k}}), rel(ec.value, e.value), 1e-4);
            if (k == 0)
                c.add_order(tag("N2_order", {{"n", n}}),
                            std::abs(e.coarse.real() - s.n2_eigenvalue()) /
                                std::abs(e.fine.real() - s.n2_eigenvalue()));
        }

    for (auto [n, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
        const ha::HyperangularState s(n, 1, l);
        const auto f = ha::product_state(grid, s);
        const double target = l * (l + 1) - 0.75;
        const auto e = ha::rayleigh_richardson(lam, f);
        c.add(tag("Lambda_eigenvalue_l(l+1)-3/4", {{"n", n}, {"l", l}}), rel(e.value.real(), target), 1e-4);
        const auto ec = ha::rayleigh_richardson(lamc, f);
        c.add(tag("Lambda_composed_vs_direct", {{"n", n}, {"l", l}}), rel(ec.value, e.value), 1e-4);
    }

    // The same Casimir from finite Lorentz transformations of a scalar field.
    for (int l = 1; l <= 2; ++l) {
        const ha::HyperangularState s(1, 1, l);
        const auto psi = ind::product_wavefunction([](double r) { return std::exp(-r); }, s);
        const auto b = ind::scalar_field_bundle({ind::reference_direction()},
                                                [psi](const ind::FourVector& x) { return psi(x); });
        const auto rep = ind::bundle_casimirs(b);
        c.add(tag("group_casimir_c1_scalar", {{"l", l}}),
              rel(rep.members[0].c1.real(), l * (l + 1) - 0.75), 1e-4);
    }
}

void radial_suite(Collector& c) {
    const auto au = radial::UnitSystem::atomic();
    for (int Z = 1; Z <= 2; ++Z)
        for (int l = 0; l <= 3; ++l) {
            const auto sols = radial::solve_radial_numeric(radial::Coulomb{Z, au.e2}, l, 5 - l, 1.0, au);
            double worst = 0.0;
            int node_err = 0;
            for (const auto& s : sols) {
                worst = std::max(worst, rel(s.K, radial::coulomb_K(s.n_a, l, Z, 1.0, au)));
                node_err += std::abs(s.nodes - s.n_a);
            }
            c.add(tag("coulomb_spectrum_N<=5", {{"Z", Z}, {"l", l}}), worst, 1e-6);
            c.add(tag("coulomb_node_count", {{"Z", Z}, {"l", l}}), node_err, 0.0);
        }
    for (int l = 0; l <= 2; ++l) {
        const auto sols = radial::solve_radial_numeric(radial::Oscillator{1.0}, l, 6, 1.0, au);
        double worst = 0.0;
        for (const auto& s : sols) worst = std::max(worst, rel(s.K, radial::oscillator_K(s.n_a, l, 1.0, au)));
        c.add(tag("oscillator_spectrum_6_levels", {{"l", l}}), worst, 1e-6);
    }
    c.add("oscillator_zero_point_3/2", std::abs(radial::oscillator_K(0, 0, 1.0, au) - 1.5), 0.0);

    // Closed-form radial functions: norm, orthogonality, <rho>.
    // rho = 2x matches the slowest decay, exp(-rho/2) at N = 4.
    const auto q = specfun::gauss_laguerre(60, 2.0);
    double norm_err = 0.0, ortho = 0.0, mean = 0.0;
    for (int na = 0; na <= 3; ++na) {
        double nn = 0.0, o = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            const double r = 2.0 * q.nodes[i];
            const double w = 8.0 * q.weights[i] * std::exp(q.nodes[i]);
            const double a = radial::coulomb_radial(na, 0, 1, r);
            nn += w * a * a;
            if (na > 0) o += w * a * radial::coulomb_radial(0, 0, 1, r);
            if (na == 0) mean += w * a * a * r;
        }
        norm_err = std::max(norm_err, std::abs(nn - 1.0));
        ortho = std::max(ortho, std::abs(o));
    }
    c.add("coulomb_radial_norm", norm_err, 1e-8);
    c.add("coulomb_radial_orthogonality", ortho, 1e-8);
    c.add("coulomb_ground_mean_rho_1.5a0", rel(mean, 1.5), 1e-4);

    const auto ps = radial::positronium_report();
    c.add("positronium_delta_within_25pct_of_2e-5eV", std::abs(ps.delta - 2e-5) / 2e-5, 0.25);
    c.add("positronium_fraction_of_hyperfine_in_[0.02,0.035]",
          std::max({0.0, 0.02 - ps.fraction_of_hyperfine, ps.fraction_of_hyperfine - 0.035}), 0.0);
    const auto line = ps.line;
    c.add("positronium_E2_equals_c2_s", rel(line.E_a * line.E_a, line.s_a), 1e-12);
}

void induced_suite(Collector& c, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_lorentz = [&]() -> ind::LorentzMatrix {
        return ind::boost({u(rng), u(rng), u(rng)}) *
               ind::rotation({u(rng), u(rng), u(rng) + 1e-3}, 3.0 * u(rng));
    };
    const auto m0 = ind::to_vector(ind::reference_direction().vec());
    double stab = 0.0, cocycle = 0.0, pseudo = 0.0, section = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto L1 = random_lorentz(), L2 = random_lorentz();
        const auto m = ind::SpacelikeDirection::from_angles(1.5 * u(rng), std::acos(u(rng)), 3.2 * (1.0 + u(rng)));
        const auto D = ind::little_group_element(L1 * L2, m);
        stab = std::max(stab, (D * m0 - m0).norm());
        const auto D1 = ind::little_group_element(L1, m);
        const auto D2 = ind::little_group_element(
            L2, ind::SpacelikeDirection::normalized(ind::apply(ind::inverse(L1), m.vec())));
        cocycle = std::max(cocycle, (D - D1 * D2).cwiseAbs().maxCoeff());
        pseudo = std::max(pseudo, ind::pseudo_orthogonality_residual(D));
        section = std::max(section, (ind::canonical_section(m) * ind::to_vector(m.vec()) - m0).norm());
    }
    c.add("stabilization_1000_random", stab, 1e-10);
    c.add("cocycle_1000_random", cocycle, 1e-10);
    c.add("pseudo_orthogonality_D", pseudo, 1e-10);
    c.add("section_maps_m_to_m0", section, 1e-10);

    const std::vector<ind::SpacelikeDirection> dirs = {
        ind::reference_direction(), ind::SpacelikeDirection::from_angles(0.4, 1.0, 0.5),
        ind::SpacelikeDirection::from_angles(-0.7, 2.0, 4.0)};
    const ha::HyperangularState st(1, 1, 1);
    const auto psi = ind::product_wavefunction([](double r) { return 2.0 * std::exp(-r); }, st);
    const auto bundle = ind::fiber_constant_bundle(dirs, psi);
    ind::Generator4 lam = 0.3 * ind::rotation_generator(0) + 0.7 * ind::boost_generator(1) -
                          0.4 * ind::boost_generator(2) + 0.2 * ind::rotation_generator(2);
    const auto rep = ind::infinitesimal_check(lam, bundle, 1e-3);
    c.add_order("antisymmetry_identity_order", rep.antisymmetry_ratio());
    c.add_order("transport_first_order_order", rep.transport_ratio());

    ind::OrbitQuadrature q;
    q.rho_nodes = 12;
    q.theta_nodes = 12;
    q.beta_step = 0.25;
    q.phi_nodes = 32;
    const auto Lam = random_lorentz();
    const auto before = ind::member_norms(bundle, q);
    const auto moved = ind::transport_state(Lam, bundle);
    const auto after = ind::member_norms(moved, q);
    double drift = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i) drift = std::max(drift, std::abs(after[i] - before[i]));
    c.add("transport_norm_preservation", drift, 1e-8);

    const auto L2 = random_lorentz();
    const auto two = ind::transport_state(Lam, ind::transport_state(L2, bundle));
    const auto one = ind::transport_state(Lam * L2, bundle);
    double comp = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (double th : {0.7, 1.4, 2.3})
            for (double be : {-0.6, 0.1, 0.8}) {
                const auto y = kinematics::rms_to_cartesian(kinematics::RMSPoint(1.1, th, be, 1.9));
                comp = std::max(comp, std::abs(two[i].psi(y) - one[i].psi(y)));
            }
    c.add("transport_composition", comp, 1e-10);

    const auto harmonic = ind::scalar_field_bundle(
        dirs, [](const ind::FourVector& x) { return std::pow(ind::complex(x.x1, x.x2), 2) * x.x3; });
    const auto cas = ind::bundle_casimirs(harmonic);
    double c1_err = 0.0, c2_err = 0.0;
    for (const auto& e : cas.members) {
        c1_err = std::max(c1_err, rel(e.c1.real(), 15.0));
        c2_err = std::max(c2_err, std::abs(e.c2));
    }
    c.add("casimir_c1_harmonic_degree3_equals_15", c1_err, 1e-4);
    c.add("casimir_c2_harmonic_vanishes", c2_err, 1e-5);
}

}  // namespace

std::vector<Check> run_suite(const std::string& suite, const VerifyParams& params) {
    Collector c(params);
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "angular") { angular_suite(c); known = true; }
    if (all || suite == "ladder") { ladder_suite(c, params.angular_nodes); known = true; }
    if (all || suite == "casimir") { casimir_suite(c, params.angular_nodes); known = true; }
    if (all || suite == "radial") { radial_suite(c); known = true; }
    if (all || suite == "induced") { induced_suite(c, params.seed); known = true; }
    if (!known) throw ConfigError("suite: unknown suite '" + suite + "'");
    return c.take();
}

}  // namespace shp::cli
