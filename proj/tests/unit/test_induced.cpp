#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "shp/errors.hpp"
#include "shp/induced.hpp"
#include "shp/kinematics.hpp"

using namespace shp::induced;
using shp::hyperangular::HyperangularState;
using doctest::Approx;
using std::numbers::pi;

namespace {

LorentzMatrix random_lorentz(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::array<double, 3> z{u(rng), u(rng), u(rng)};
    const std::array<double, 3> axis{u(rng), u(rng), u(rng) + 2.0};
    return boost(z) * rotation(axis, pi * u(rng));
}

SpacelikeDirection random_direction(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double eta = 1.5 * u(rng), ct = u(rng), phi = pi * (1.0 + u(rng));
    return SpacelikeDirection::from_angles(eta, std::acos(ct), phi);
}

template <class M>
double max_abs(const M& a) { return a.cwiseAbs().maxCoeff(); }

FourVector rms(double rho, double th, double be, double ph) {
    return shp::kinematics::rms_to_cartesian(shp::kinematics::RMSPoint(rho, th, be, ph));
}

WaveFunction test_psi() {
    return product_wavefunction([](double r) { return 2.0 * std::exp(-r); }, HyperangularState(1, 1, 1));
}

}  // namespace

TEST_CASE("Lorentz matrices") {
    CHECK(max_abs(boost({0, 0, 0}) - LorentzMatrix::Identity()) == 0.0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto L = random_lorentz(rng);
        CHECK(pseudo_orthogonality_residual(L) < 1e-12);
        CHECK(is_proper_orthochronous(L));
        CHECK(max_abs(L * inverse(L) - LorentzMatrix::Identity()) < 1e-12);
    }
    CHECK(max_abs(exp_generator(rotation_generator(2), 0.7) - rotation({0, 0, 1}, 0.7)) < 1e-13);
    CHECK(max_abs(exp_generator(boost_generator(0), 0.4) - boost({0.4, 0, 0})) < 1e-13);
    for (int a = 0; a < 3; ++a) {
        CHECK(max_abs(rotation_generator(a) + rotation_generator(a).transpose()) == 0.0);
        CHECK(max_abs(boost_generator(a) + boost_generator(a).transpose()) == 0.0);
    }
    CHECK_THROWS_AS(rotation({0, 0, 0}, 1.0), shp::DomainError);
}

TEST_CASE("spacelike directions") {
    CHECK_THROWS_AS(SpacelikeDirection({1, 0, 0, 0}), shp::DomainError);
    CHECK_THROWS_AS(SpacelikeDirection({0, 0, 0, 2}), shp::DomainError);
    const auto d = SpacelikeDirection::normalized({0, 0, 0, 2});
    CHECK(d.vec().x3 == Approx(1.0));
    const auto a = SpacelikeDirection::from_angles(0.8, 1.1, 2.0).vec();
    CHECK(shp::kinematics::minkowski_dot(a, a) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("canonical section") {
    const auto m0 = to_vector(reference_direction().vec());
    CHECK(max_abs(canonical_section(reference_direction()) - LorentzMatrix::Identity()) < 1e-15);
    const auto Lx = canonical_section(SpacelikeDirection({0, 1, 0, 0}));
    CHECK(Lx(0, 0) == Approx(1.0));
    CHECK((Lx * to_vector({0, 1, 0, 0}) - m0).norm() < 1e-15);
    CHECK(std::abs((Lx.block<3, 3>(1, 1)).determinant() - 1.0) < 1e-14);
    CHECK(max_abs(Lx.block<3, 3>(1, 1).transpose() * Lx.block<3, 3>(1, 1) - Eigen::Matrix3d::Identity()) < 1e-14);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const auto m = random_direction(rng);
        const auto L = canonical_section(m);
        CHECK((L * to_vector(m.vec()) - m0).norm() < 1e-12);
        CHECK(pseudo_orthogonality_residual(L) < 1e-12);
    }
    const SpacelikeDirection south({0, 0, 0, -1});
    CHECK_THROWS_AS(canonical_section(south), shp::ChartSingular);
    SectionOptions alt{Chart::Alternate};
    CHECK((canonical_section(south, alt) * to_vector(south.vec()) - m0).norm() < 1e-14);
    CHECK_THROWS_AS(canonical_section(reference_direction(), alt), shp::ChartSingular);
    SectionOptions autoc{Chart::Auto};
    CHECK((canonical_section(south, autoc) * to_vector(south.vec()) - m0).norm() < 1e-14);
}

TEST_CASE("little group: stabilization and cocycle over random draws") {
    const auto m0 = to_vector(reference_direction().vec());
    CHECK(max_abs(little_group_element(LorentzMatrix::Identity(), SpacelikeDirection::from_angles(0.3, 1.0, 2.0)) -
                  LorentzMatrix::Identity()) < 1e-14);
    const auto Rz = rotation({0, 0, 1}, 0.9);
    CHECK(max_abs(little_group_element(Rz, reference_direction()) - Rz) < 1e-15);

    std::mt19937_64 rng(13);
    double stab = 0.0, cocycle = 0.0, pseudo = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto L1 = random_lorentz(rng), L2 = random_lorentz(rng);
        const auto m = random_direction(rng);
        const LorentzMatrix D = little_group_element(L1 * L2, m);
        stab = std::max(stab, (D * m0 - m0).norm());
        const auto src = SpacelikeDirection::normalized(apply(inverse(L1), m.vec()));
        cocycle = std::max(cocycle, max_abs(D - little_group_element(L1, m) * little_group_element(L2, src)));
        pseudo = std::max(pseudo, pseudo_orthogonality_residual(D));
    }
    CHECK(stab < 1e-10);
    CHECK(cocycle < 1e-10);
    CHECK(pseudo < 1e-12);
}

TEST_CASE("transport of bundles") {
    const auto psi = test_psi();
    const std::vector<SpacelikeDirection> dirs = {reference_direction(), SpacelikeDirection::from_angles(0.4, 1.0, 0.5)};
    const auto b = fiber_constant_bundle(dirs, psi);
    const std::vector<FourVector> ys = {rms(1.0, 1.1, 0.3, 0.7), rms(0.6, 2.0, -0.8, 4.0), rms(2.0, 0.5, 1.2, 2.2)};

    const auto same = transport_state(LorentzMatrix::Identity(), b);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (const auto& y : ys) CHECK(std::abs(same[i].psi(y) - b[i].psi(y)) < 1e-15);

    // a z rotation keeps m0 and rotates the member internally
    const auto single = fiber_constant_bundle({reference_direction()}, psi);
    const auto Rz = rotation({0, 0, 1}, 0.8);
    const auto moved = transport_state(Rz, single);
    for (const auto& y : ys) CHECK(std::abs(moved[0].psi(y) - psi(apply(inverse(Rz), y))) < 1e-14);

    // without a family only sampled directions can serve as sources
    const BundleFunction bare(b.members());
    const auto B = boost({0.2, 0.1, 0.0});
    try {
        transport_state(B, bare);
        FAIL("expected OrbitCoverage");
    } catch (const shp::OrbitCoverage& e) {
        CHECK(std::string(e.what()).find("Lambda^-1 m") != std::string::npos);
    }
    TransportOptions interp;
    interp.interpolate = true;
    const auto near = transport_state(B, bare, interp);
    CHECK(near[0].source_distance == 0.0);
    CHECK(near[1].source_distance > 0.0);

    OrbitQuadrature q;
    q.rho_nodes = 12;
    q.theta_nodes = 12;
    q.beta_step = 0.25;
    q.phi_nodes = 32;
    std::mt19937_64 rng(14);
    const auto L1 = random_lorentz(rng), L2 = random_lorentz(rng);
    const auto before = member_norms(b, q);
    const auto after = member_norms(transport_state(L1, b), q);
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i] == Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(after[i] - before[i]) < 1e-8);
    }
    const auto two = transport_state(L1, transport_state(L2, b));
    const auto one = transport_state(L1 * L2, b);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (const auto& y : ys) CHECK(std::abs(two[i].psi(y) - one[i].psi(y)) < 1e-12);

    TransportOptions push;
    push.mode = TransportMode::Pushforward;
    const auto pushed = transport_state(L1, b, push);
    const auto target = apply(L1, dirs[1].vec());
    CHECK(std::sqrt(shp::kinematics::euclidean_norm2(pushed[1].m.vec() - target)) < 1e-12);
}

TEST_CASE("infinitesimal checks") {
    const auto b = fiber_constant_bundle({reference_direction(), SpacelikeDirection::from_angles(0.4, 1.0, 0.5)}, test_psi());
    const auto zero = infinitesimal_check(Generator4::Zero(), b, 1e-3);
    CHECK(zero.antisymmetry_residual == 0.0);
    CHECK(zero.transport_residual < 1e-14);

    // a z rotation fixes m0, so no family is needed there
    const BundleFunction at_m0({BundleMember{reference_direction(), test_psi()}});
    const auto rz = infinitesimal_check(rotation_generator(2), at_m0, 1e-3);
    CHECK(rz.antisymmetry_residual < 1e-12);
    CHECK(rz.transport_ratio() == Approx(4.0).epsilon(0.125));

    const Generator4 lam = 0.3 * rotation_generator(0) + 0.7 * boost_generator(1) - 0.4 * boost_generator(2);
    const auto r = infinitesimal_check(lam, b, 1e-3);
    CHECK(r.antisymmetry_ratio() >= 3.5);
    CHECK(r.antisymmetry_ratio() <= 4.5);
    CHECK(r.transport_ratio() >= 3.5);
    CHECK(r.transport_ratio() <= 4.5);
}

TEST_CASE("bundle casimirs") {
    const std::vector<SpacelikeDirection> dirs = {reference_direction(), SpacelikeDirection::from_angles(0.1, 0.2, 0.3)};
    // harmonic polynomial of degree s: c1 = s(s+2), c2 = 0
    const auto quad = scalar_field_bundle(dirs, [](const FourVector& x) { return std::pow(complex(x.x1, x.x2), 2); });
    for (const auto& e : bundle_casimirs(quad).members) {
        CHECK(e.c1.real() == Approx(8.0).epsilon(1e-4));
        CHECK(std::abs(e.c2) < 1e-6);
    }
    const auto cubic = scalar_field_bundle(dirs, [](const FourVector& x) { return std::pow(complex(x.x1, x.x2), 2) * x.x3; });
    CasimirOptions h1, h2;
    h1.h = 1e-2;
    h2.h = 5e-3;
    const auto r1 = bundle_casimirs(cubic, h1), r2 = bundle_casimirs(cubic, h2);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        CHECK(r2.members[i].c1.real() == Approx(15.0).epsilon(1e-4));
        CHECK(r1.members[i].commutator_residual / r2.members[i].commutator_residual == Approx(4.0).epsilon(0.1));
    }

    // one (l, n) family seen from nearby frames: c1 agrees across members
    const auto psi = product_wavefunction([](double r) { return std::exp(-r); }, HyperangularState(1, 1, 1));
    const auto fam = scalar_field_bundle(dirs, [psi](const FourVector& x) { return psi(x); });
    const auto rf = bundle_casimirs(fam);
    CHECK(rf.c1_spread < 1e-3);

    // the same wavefunction pinned to every member breaks covariance and c2 shows it
    const auto fc = bundle_casimirs(fiber_constant_bundle(dirs, psi));
    CHECK(std::abs(fc.members[1].c2) > 1e-2);
}

TEST_CASE("orbit files") {
    const auto dirs = parse_orbit_json(R"({"directions": [[0, 0, 0, 1], [0, 0, 3, 0], [0.5, 1, 1, 1]]})");
    REQUIRE(dirs.size() == 3);
    CHECK(dirs[1].vec().x2 == Approx(1.0));
    const auto bare = parse_orbit_json("[[0, 1, 0, 0]]");
    CHECK(bare.size() == 1);
    const auto again = parse_orbit_json(orbit_to_json(dirs));
    for (std::size_t i = 0; i < dirs.size(); ++i)
        CHECK(std::sqrt(shp::kinematics::euclidean_norm2(again[i].vec() - dirs[i].vec())) < 1e-15);
    CHECK_THROWS_AS(parse_orbit_json("{\"directions\": [[1, 0, 0]]}"), shp::ConfigError);
    CHECK_THROWS_AS(parse_orbit_json("{\"directions\": [[2, 0, 0, 1]]}"), shp::ConfigError);
    CHECK_THROWS_AS(parse_orbit_json("{oops"), shp::ConfigError);
}
