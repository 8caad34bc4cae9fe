#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shp/hyperangular.hpp"
#include "shp/kinematics.hpp"

namespace shp::induced {

using kinematics::FourVector;
using complex = std::complex<double>;

// Lambda^mu_nu acting on contravariant components (x0, x1, x2, x3).
using LorentzMatrix = Eigen::Matrix4d;

const Eigen::Matrix4d& eta();

Eigen::Vector4d to_vector(const FourVector& x);
FourVector from_vector(const Eigen::Vector4d& v);
FourVector apply(const LorentzMatrix& L, const FourVector& x);

// eta L^T eta
LorentzMatrix inverse(const LorentzMatrix& L);

// max |L^T eta L - eta|
double pseudo_orthogonality_residual(const LorentzMatrix& L);

// det = +1 and L00 >= 1, up to tol.
bool is_proper_orthochronous(const LorentzMatrix& L, double tol = 1e-10);

// Pure boost with rapidity vector zeta (direction = boost axis, length = rapidity).
LorentzMatrix boost(const std::array<double, 3>& rapidity);

// Active rotation of the spatial part about `axis` (any nonzero length).
LorentzMatrix rotation(const std::array<double, 3>& axis, double angle);

// Infinitesimal generators are antisymmetric lambda_{mu nu} (indices down);
// the matrix acting on vectors is eta * lambda and exp(t eta lambda) is proper orthochronous.
using Generator4 = Eigen::Matrix4d;

Generator4 rotation_generator(int axis);  // exp(t eta J_i) = rotation(e_i, t)
Generator4 boost_generator(int axis);     // exp(t eta K_i) = boost(t e_i)
LorentzMatrix exp_generator(const Generator4& lambda, double t = 1.0);

// Unit spacelike vector, m.m = +1.
class SpacelikeDirection {
public:
    // Throws DomainError unless |m.m - 1| <= tol * max(1, |m|^2).
    explicit SpacelikeDirection(const FourVector& m, double tol = 1e-12);

    // m / sqrt(m.m) for any spacelike m.
    static SpacelikeDirection normalized(const FourVector& m);
    // (sinh eta, cosh eta sin t cos p, cosh eta sin t sin p, cosh eta cos t).
    static SpacelikeDirection from_angles(double eta, double theta, double phi);

    const FourVector& vec() const { return m_; }

private:
    FourVector m_;
};

// m0 = (0, 0, 0, 1).
const SpacelikeDirection& reference_direction();

// Standard: rotate the spatial part of m onto +z, then boost along z. Singular when the
// spatial part points along -z.
// Alternate: rotate onto -z, turn by pi about x, then boost. Singular along +z.
// Auto: Standard on the hemisphere m_z >= -|m_spatial|/2, Alternate below it.
enum class Chart { Standard, Alternate, Auto };

struct SectionOptions {
    Chart chart = Chart::Standard;
    // ChartSingular when the transverse part of the unit spatial direction is below this
    // and it points at the chart's antipode.
    double singular_tol = 1e-8;
};

// L(m) with L(m) m = m0.
LorentzMatrix canonical_section(const SpacelikeDirection& m, const SectionOptions& opts = {});

// D(Lambda, m) = L(m) Lambda L(Lambda^-1 m)^-1; fixes m0.
LorentzMatrix little_group_element(const LorentzMatrix& Lambda, const SpacelikeDirection& m,
                                   const SectionOptions& opts = {});

// psi_m(y) in the frame where m is m0; y is expected in the RMS of that frame.
using WaveFunction = std::function<complex(const FourVector& y)>;
// psi_m(y) for every direction m on the orbit.
using WaveFamily = std::function<complex(const SpacelikeDirection& m, const FourVector& y)>;

struct BundleMember {
    SpacelikeDirection m;
    WaveFunction psi;
    // Euclidean distance to the sample used as source when interpolation stepped in.
    double source_distance = 0.0;
};

class BundleFunction {
public:
    BundleFunction() = default;
    explicit BundleFunction(std::vector<BundleMember> members,
                            std::optional<WaveFamily> family = std::nullopt);

    const std::vector<BundleMember>& members() const { return members_; }
    const std::optional<WaveFamily>& family() const { return family_; }
    std::size_t size() const { return members_.size(); }
    const BundleMember& operator[](std::size_t i) const { return members_[i]; }

    // Index of the member within tol of m (Euclidean in components), if any.
    std::optional<std::size_t> find(const SpacelikeDirection& m, double tol) const;

private:
    std::vector<BundleMember> members_;
    std::optional<WaveFamily> family_;
};

// Builders.
// psi(y) = rho^{-1/2} R(rho) Theta(theta) chi(beta, phi) in RMS coordinates of y, zero outside.
WaveFunction product_wavefunction(std::function<double(double)> radial,
                                  const hyperangular::HyperangularState& state);

// Same psi_m for every m.
BundleFunction fiber_constant_bundle(const std::vector<SpacelikeDirection>& directions,
                                     const WaveFunction& psi);

// psi_m(y) = f(L(m)^-1 y): a scalar field f on Minkowski space seen from each frame.
BundleFunction scalar_field_bundle(const std::vector<SpacelikeDirection>& directions,
                                   const std::function<complex(const FourVector& x)>& f,
                                   const SectionOptions& opts = {});

enum class TransportMode {
    SameDirections,  // result lives on the input directions, sources at Lambda^-1 m
    Pushforward,     // result lives on Lambda m, sources are the input members
};

struct TransportOptions {
    TransportMode mode = TransportMode::SameDirections;
    double match_tol = 1e-9;
    bool interpolate = false;  // nearest sample when no member or family covers a source
    SectionOptions section{};
};

// psi'_m(y) = psi_{Lambda^-1 m}(D(Lambda, m)^-1 y). OrbitCoverage lists the first missing source.
BundleFunction transport_state(const LorentzMatrix& Lambda, const BundleFunction& b,
                               const TransportOptions& opts = {});

// Quadrature over the member's RMS: rho^3 sin^2(theta) cosh(beta).
struct OrbitQuadrature {
    int rho_nodes = 24;
    double rho_scale = 0.5;  // Gauss-Laguerre in rho / rho_scale
    int theta_nodes = 24;    // Gauss-Legendre in cos(theta)
    double beta_max = 14.0;
    double beta_step = 0.125;
    int phi_nodes = 64;
};

double member_norm(const WaveFunction& psi, const OrbitQuadrature& q = {});

std::vector<double> member_norms(const BundleFunction& b, const OrbitQuadrature& q = {});

struct InfinitesimalReport {
    double h = 0.0;
    // (d_m L) L^-1 + L (d_m L^-1) by central differences along exp(t lambda) m.
    double antisymmetry_residual = 0.0;
    double antisymmetry_residual_half = 0.0;  // same at h/2
    // |T(exp(h lambda)) psi - (psi - h (d_m(lambda) psi + (G y) . grad_y psi))|, max over samples.
    double transport_residual = 0.0;
    double transport_residual_half = 0.0;
    double antisymmetry_ratio() const;
    double transport_ratio() const;
};

struct InfinitesimalOptions {
    SectionOptions section{};
    // Sample points y in the member frames, as (rho, theta, beta, phi).
    std::vector<std::array<double, 4>> samples = {
        {1.0, 1.1, 0.3, 0.7}, {0.7, 0.6, -0.5, 2.1}, {1.6, 2.2, 0.9, 4.0}, {1.2, 1.5, -1.2, 5.3}};
};

// Needs the family unless lambda fixes every member direction.
InfinitesimalReport infinitesimal_check(const Generator4& lambda, const BundleFunction& b,
                                        double h = 1e-4, const InfinitesimalOptions& opts = {});

struct CasimirOptions {
    double h = 1e-3;
    double rho_ref = 1.0;
    int theta_nodes = 8;
    int beta_nodes = 9;
    double beta_max = 2.0;
    int phi_nodes = 8;
    SectionOptions section{};
};

struct CasimirEstimate {
    SpacelikeDirection m;
    complex c1;
    complex c2;
    double commutator_residual = 0.0;  // |[c1, X_J3] F| / |F|
};

struct CasimirReport {
    std::vector<CasimirEstimate> members;
    double c1_spread = 0.0;  // max |c1_i - c1_0|
};

// c1 = -sum X_J^2 + sum X_K^2 and c2 = -sum X_J X_K from central differences of
// transport_state over the family, as Rayleigh quotients on (theta, beta, phi) samples at
// rho_ref in each member frame.
CasimirReport bundle_casimirs(const BundleFunction& b, const CasimirOptions& opts = {});

// Orbit JSON: {"directions": [[m0, m1, m2, m3], ...]} or a bare array of 4-tuples.
// Each direction is rescaled to unit norm; ConfigError on malformed input.
std::vector<SpacelikeDirection> parse_orbit_json(const std::string& text);
std::string orbit_to_json(const std::vector<SpacelikeDirection>& directions);

}  // namespace shp::induced
