#include "shp/induced.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "shp/errors.hpp"
#include "shp/io.hpp"
#include "shp/specfun.hpp"

namespace shp::induced {

namespace {

constexpr double pi = std::numbers::pi;

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& v) {
    Eigen::Matrix3d k;
    k << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
    return k;
}

// Rotation carrying the unit vector a onto the unit vector b; fails as a -> -b.
Eigen::Matrix3d minimal_rotation(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const Eigen::Vector3d v = a.cross(b);
    const double c = a.dot(b);
    const Eigen::Matrix3d k = cross_matrix(v);
    return Eigen::Matrix3d::Identity() + k + k * k / (1.0 + c);
}

std::string describe(const FourVector& m) {
    return "(" + io::format_double(m.x0) + ", " + io::format_double(m.x1) + ", " +
           io::format_double(m.x2) + ", " + io::format_double(m.x3) + ")";
}

double euclid_distance(const FourVector& a, const FourVector& b) {
    return std::sqrt(kinematics::euclidean_norm2(a - b));
}

}  // namespace

const Eigen::Matrix4d& eta() {
    static const Eigen::Matrix4d e = Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal();
    return e;
}

Eigen::Vector4d to_vector(const FourVector& x) { return {x.x0, x.x1, x.x2, x.x3}; }

FourVector from_vector(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

FourVector apply(const LorentzMatrix& L, const FourVector& x) {
    return from_vector(L * to_vector(x));
}

LorentzMatrix inverse(const LorentzMatrix& L) { return eta() * L.transpose() * eta(); }

double pseudo_orthogonality_residual(const LorentzMatrix& L) {
    return (L.transpose() * eta() * L - eta()).cwiseAbs().maxCoeff();
}

bool is_proper_orthochronous(const LorentzMatrix& L, double tol) {
    return std::abs(L.determinant() - 1.0) <= tol && L(0, 0) >= 1.0 - tol;
}

LorentzMatrix boost(const std::array<double, 3>& rapidity) {
    for (double r : rapidity)
        if (!std::isfinite(r)) throw DomainError("boost rapidity must be finite");
    const Eigen::Vector3d z(rapidity[0], rapidity[1], rapidity[2]);
    const double zeta = z.norm();
    LorentzMatrix B = LorentzMatrix::Identity();
    if (zeta == 0.0) return B;
    const Eigen::Vector3d n = z / zeta;
    const double ch = std::cosh(zeta), sh = std::sinh(zeta);
    B(0, 0) = ch;
    B.block<1, 3>(0, 1) = sh * n.transpose();
    B.block<3, 1>(1, 0) = sh * n;
    B.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + (ch - 1.0) * n * n.transpose();
    return B;
}

LorentzMatrix rotation(const std::array<double, 3>& axis, double angle) {
    if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
    const Eigen::Vector3d a(axis[0], axis[1], axis[2]);
    const double len = a.norm();
    if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("rotation axis must be nonzero");
    LorentzMatrix R = LorentzMatrix::Identity();
    R.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, a / len).toRotationMatrix();
    return R;
}

Generator4 rotation_generator(int axis) {
    if (axis < 0 || axis > 2) throw IndexError("axis must be 0, 1 or 2");
    Generator4 g = Generator4::Zero();
    const int a = 1 + (axis + 1) % 3;
    const int b = 1 + (axis + 2) % 3;
    g(a, b) = -1.0;
    g(b, a) = 1.0;
    return g;
}

Generator4 boost_generator(int axis) {
    if (axis < 0 || axis > 2) throw IndexError("axis must be 0, 1 or 2");
    Generator4 g = Generator4::Zero();
    g(0, 1 + axis) = -1.0;
    g(1 + axis, 0) = 1.0;
    return g;
}

LorentzMatrix exp_generator(const Generator4& lambda, double t) {
    if ((lambda + lambda.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + lambda.cwiseAbs().maxCoeff()))
        throw DomainError("generator must be antisymmetric with lowered indices");
    const Eigen::Matrix4d G = t * eta() * lambda;
    return G.exp();
}

SpacelikeDirection::SpacelikeDirection(const FourVector& m, double tol) : m_(m) {
    const double mm = kinematics::minkowski_dot(m, m);
    const double scale = std::max(1.0, kinematics::euclidean_norm2(m));
    if (!std::isfinite(mm) || std::abs(mm - 1.0) > tol * scale)
        throw DomainError("direction " + describe(m) + " has m.m = " + io::format_double(mm) +
                          ", expected 1");
}

SpacelikeDirection SpacelikeDirection::normalized(const FourVector& m) {
    const double mm = kinematics::minkowski_dot(m, m);
    if (!(mm > 0.0)) throw DomainError("direction " + describe(m) + " is not spacelike");
    return SpacelikeDirection(m / std::sqrt(mm), 1e-10);
}

SpacelikeDirection SpacelikeDirection::from_angles(double eta_, double theta, double phi) {
    const double ch = std::cosh(eta_);
    return SpacelikeDirection(FourVector{std::sinh(eta_), ch * std::sin(theta) * std::cos(phi),
                                         ch * std::sin(theta) * std::sin(phi),
                                         ch * std::cos(theta)},
                              1e-10);
}

const SpacelikeDirection& reference_direction() {
    static const SpacelikeDirection m0(FourVector{0.0, 0.0, 0.0, 1.0});
    return m0;
}

LorentzMatrix canonical_section(const SpacelikeDirection& m, const SectionOptions& opts) {
    const FourVector& v = m.vec();
    const Eigen::Vector3d n(v.x1, v.x2, v.x3);
    const double r = n.norm();
    const Eigen::Vector3d nh = n / r;
    const double transverse = std::hypot(nh.x(), nh.y());

    Chart chart = opts.chart;
    if (chart == Chart::Auto) chart = nh.z() >= -0.5 ? Chart::Standard : Chart::Alternate;

    Eigen::Matrix3d R;
    if (chart == Chart::Standard) {
        if (nh.z() < 0.0 && transverse <= opts.singular_tol)
            throw ChartSingular("direction " + describe(v) +
                                " points along -z; use the alternate chart");
        R = minimal_rotation(nh, Eigen::Vector3d::UnitZ());
    } else {
        if (nh.z() > 0.0 && transverse <= opts.singular_tol)
            throw ChartSingular("direction " + describe(v) +
                                " points along +z; use the standard chart");
        const Eigen::Matrix3d flip = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
        R = flip * minimal_rotation(nh, -Eigen::Vector3d::UnitZ());
    }

    LorentzMatrix rot = LorentzMatrix::Identity();
    rot.block<3, 3>(1, 1) = R;
    // Boost along z with cosh = r, sinh = -m_t takes (m_t, 0, 0, r) to (0, 0, 0, 1).
    LorentzMatrix bz = LorentzMatrix::Identity();
    bz(0, 0) = r;
    bz(3, 3) = r;
    bz(0, 3) = -v.x0;
    bz(3, 0) = -v.x0;
    return bz * rot;
}

LorentzMatrix little_group_element(const LorentzMatrix& Lambda, const SpacelikeDirection& m,
                                   const SectionOptions& opts) {
    if (Lambda == LorentzMatrix::Identity()) return Lambda;
    const auto src = SpacelikeDirection::normalized(apply(inverse(Lambda), m.vec()));
    return canonical_section(m, opts) * Lambda * inverse(canonical_section(src, opts));
}

BundleFunction::BundleFunction(std::vector<BundleMember> members, std::optional<WaveFamily> family)
    : members_(std::move(members)), family_(std::move(family)) {}

std::optional<std::size_t> BundleFunction::find(const SpacelikeDirection& m, double tol) const {
    std::optional<std::size_t> best;
    double best_d = tol;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const double d = euclid_distance(members_[i].m.vec(), m.vec());
        if (d <= best_d) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

WaveFunction product_wavefunction(std::function<double(double)> radial,
                                  const hyperangular::HyperangularState& state) {
    return [radial = std::move(radial), state](const FourVector& y) -> complex {
        if (kinematics::classify_region(y) != kinematics::RegionTag::RMS) return 0.0;
        const auto p = kinematics::cartesian_to_rms(y);
        const double st = std::sin(p.theta());
        const double sech = 1.0 / std::cosh(p.beta());
        return radial(p.rho()) / std::sqrt(p.rho()) *
               hyperangular::theta_physical(state.ell(), state.n(), std::cos(p.theta()), st) *
               hyperangular::chi(state, std::tanh(p.beta()), sech, p.phi());
    };
}

BundleFunction fiber_constant_bundle(const std::vector<SpacelikeDirection>& directions,
                                     const WaveFunction& psi) {
    std::vector<BundleMember> members;
    for (const auto& m : directions) members.push_back({m, psi, 0.0});
    WaveFamily fam = [psi](const SpacelikeDirection&, const FourVector& y) { return psi(y); };
    return BundleFunction(std::move(members), fam);
}

BundleFunction scalar_field_bundle(const std::vector<SpacelikeDirection>& directions,
                                   const std::function<complex(const FourVector& x)>& f,
                                   const SectionOptions& opts) {
    std::vector<BundleMember> members;
    for (const auto& m : directions) {
        const LorentzMatrix Linv = inverse(canonical_section(m, opts));
        members.push_back({m, [f, Linv](const FourVector& y) { return f(apply(Linv, y)); }, 0.0});
    }
    WaveFamily fam = [f, opts](const SpacelikeDirection& m, const FourVector& y) {
        return f(apply(inverse(canonical_section(m, opts)), y));
    };
    return BundleFunction(std::move(members), fam);
}

BundleFunction transport_state(const LorentzMatrix& Lambda, const BundleFunction& b,
                               const TransportOptions& opts) {
    if (Lambda == LorentzMatrix::Identity()) return b;
    const LorentzMatrix Linv = inverse(Lambda);
    std::vector<BundleMember> out;
    out.reserve(b.size());

    for (std::size_t i = 0; i < b.size(); ++i) {
        const BundleMember& mem = b[i];
        if (opts.mode == TransportMode::Pushforward) {
            const auto target = SpacelikeDirection::normalized(apply(Lambda, mem.m.vec()));
            const LorentzMatrix D = canonical_section(target, opts.section) * Lambda *
                                    inverse(canonical_section(mem.m, opts.section));
            const LorentzMatrix Dinv = inverse(D);
            out.push_back({target,
                           [psi = mem.psi, Dinv](const FourVector& y) { return psi(apply(Dinv, y)); },
                           mem.source_distance});
            continue;
        }

        const auto src = SpacelikeDirection::normalized(apply(Linv, mem.m.vec()));
        const LorentzMatrix Dinv = inverse(canonical_section(mem.m, opts.section) * Lambda *
                                           inverse(canonical_section(src, opts.section)));
        WaveFunction source;
        double distance = 0.0;
        if (auto j = b.find(src, opts.match_tol)) {
            source = b[*j].psi;
            distance = euclid_distance(b[*j].m.vec(), src.vec());
        } else if (b.family()) {
            source = [fam = *b.family(), src](const FourVector& y) { return fam(src, y); };
        } else if (opts.interpolate && b.size() > 0) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const double d = euclid_distance(b[j].m.vec(), src.vec());
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            source = b[best].psi;
            distance = best_d;
        } else {
            throw OrbitCoverage("member " + std::to_string(i) + " at " + describe(mem.m.vec()) +
                                " needs the sample at Lambda^-1 m = " + describe(src.vec()) +
                                ", which is not in the bundle");
        }
        out.push_back({mem.m,
                       [source, Dinv](const FourVector& y) { return source(apply(Dinv, y)); },
                       distance});
    }

    std::optional<WaveFamily> fam;
    if (b.family()) {
        fam = [f = *b.family(), Lambda, Linv, sec = opts.section](const SpacelikeDirection& m,
                                                                  const FourVector& y) {
            const auto src = SpacelikeDirection::normalized(apply(Linv, m.vec()));
            const LorentzMatrix D =
                canonical_section(m, sec) * Lambda * inverse(canonical_section(src, sec));
            return f(src, apply(inverse(D), y));
        };
    }
    return BundleFunction(std::move(out), std::move(fam));
}

double member_norm(const WaveFunction& psi, const OrbitQuadrature& q) {
    if (q.rho_nodes < 1 || q.theta_nodes < 1 || q.phi_nodes < 1 || !(q.beta_step > 0.0) ||
        !(q.rho_scale > 0.0) || !(q.beta_max > 0.0))
        throw DomainError("invalid orbit quadrature parameters");
    const auto rho_rule = specfun::gauss_laguerre(q.rho_nodes, 2.0);
    const auto xi_rule = specfun::gauss_legendre(q.theta_nodes);
    const int nb = int(std::lround(q.beta_max / q.beta_step));
    const double hb = q.beta_max / nb;
    const double hp = 2.0 * pi / q.phi_nodes;
    const double s4 = std::pow(q.rho_scale, 4);

    double total = 0.0;
    for (std::size_t a = 0; a < rho_rule.nodes.size(); ++a) {
        const double x = rho_rule.nodes[a];
        const double rho = q.rho_scale * x;
        const double wr = s4 * rho_rule.weights[a] * x * std::exp(x);
        for (std::size_t t = 0; t < xi_rule.nodes.size(); ++t) {
            const double theta = std::acos(xi_rule.nodes[t]);
            const double wt = xi_rule.weights[t] * std::sin(theta);
            for (int j = -nb; j <= nb; ++j) {
                const double beta = j * hb;
                const double wb = hb * std::cosh(beta);
                double ring = 0.0;
                for (int k = 0; k < q.phi_nodes; ++k) {
                    const FourVector y =
                        kinematics::rms_to_cartesian(kinematics::RMSPoint(rho, theta, beta, k * hp));
                    ring += std::norm(psi(y));
                }
                total += wr * wt * wb * hp * ring;
            }
        }
    }
    return std::sqrt(total);
}

std::vector<double> member_norms(const BundleFunction& b, const OrbitQuadrature& q) {
    std::vector<double> out;
    out.reserve(b.size());
    for (const auto& mem : b.members()) out.push_back(member_norm(mem.psi, q));
    return out;
}

double InfinitesimalReport::antisymmetry_ratio() const {
    return antisymmetry_residual / antisymmetry_residual_half;
}

double InfinitesimalReport::transport_ratio() const {
    return transport_residual / transport_residual_half;
}

namespace {

// Five-point first derivative of f at 0.
template <class F>
auto d5(const F& f, double d) {
    return (f(-2.0 * d) - 8.0 * f(-d) + 8.0 * f(d) - f(2.0 * d)) / (12.0 * d);
}

}  // namespace

InfinitesimalReport infinitesimal_check(const Generator4& lambda, const BundleFunction& b,
                                        double h, const InfinitesimalOptions& opts) {
    if (!(h > 0.0)) throw DomainError("step h must be positive");
    const Eigen::Matrix4d G = eta() * lambda;
    const auto& sec = opts.section;
    InfinitesimalReport rep;
    rep.h = h;

    for (const auto& mem : b.members()) {
        const FourVector m = mem.m.vec();
        const LorentzMatrix Lm = canonical_section(mem.m, sec);
        const LorentzMatrix Lm_inv = inverse(Lm);
        auto along = [&](double t) {
            return SpacelikeDirection::normalized(apply(exp_generator(lambda, t), m));
        };
        auto section_at = [&](double t) { return canonical_section(along(t), sec); };

        for (int half = 0; half < 2; ++half) {
            const double hh = half ? 0.5 * h : h;
            const LorentzMatrix Lp = section_at(hh), Lmn = section_at(-hh);
            const LorentzMatrix dL = (Lp - Lmn) / (2.0 * hh);
            const LorentzMatrix dLinv = (inverse(Lp) - inverse(Lmn)) / (2.0 * hh);
            const double r = (dL * Lm_inv + Lm * dLinv).cwiseAbs().maxCoeff();
            (half ? rep.antisymmetry_residual_half : rep.antisymmetry_residual) =
                std::max(half ? rep.antisymmetry_residual_half : rep.antisymmetry_residual, r);
        }

        const double orbit_speed = std::sqrt(kinematics::euclidean_norm2(apply(G, m)));
        const bool moves = orbit_speed > 1e-14 * std::sqrt(kinematics::euclidean_norm2(m));
        if (moves && !b.family())
            throw OrbitCoverage("member at " + describe(m) +
                                " moves along the orbit; the infinitesimal check needs the family");

        const double dstep = 1e-3;
        LorentzMatrix dm_Linv = LorentzMatrix::Zero();
        if (moves) dm_Linv = d5([&](double t) -> LorentzMatrix { return inverse(section_at(t)); }, dstep);
        const LorentzMatrix Gt = Lm * G * Lm_inv - Lm * dm_Linv;

        auto source_at = [&](const SpacelikeDirection& s, const FourVector& y) -> complex {
            return moves ? (*b.family())(s, y) : mem.psi(y);
        };

        for (const auto& smp : opts.samples) {
            const FourVector y =
                kinematics::rms_to_cartesian(kinematics::RMSPoint(smp[0], smp[1], smp[2], smp[3]));
            const complex psi0 = mem.psi(y);
            complex dm_psi = 0.0;
            if (moves) dm_psi = d5([&](double t) { return (*b.family())(along(t), y); }, dstep);
            const FourVector gy = apply(Gt, y);
            const complex grad = d5([&](double t) { return mem.psi(y + t * gy); }, dstep);

            for (int half = 0; half < 2; ++half) {
                const double hh = half ? 0.5 * h : h;
                const LorentzMatrix Lam = exp_generator(lambda, hh);
                const auto src = SpacelikeDirection::normalized(apply(inverse(Lam), m));
                const LorentzMatrix D = Lm * Lam * inverse(canonical_section(src, sec));
                const complex transported = source_at(src, apply(inverse(D), y));
                const double r = std::abs(transported - (psi0 - hh * (dm_psi + grad)));
                double& slot = half ? rep.transport_residual_half : rep.transport_residual;
                slot = std::max(slot, r);
            }
        }
    }
    return rep;
}

namespace {

struct CasimirEngine {
    const WaveFamily& F;
    SectionOptions sec;
    double h;
    // Forward and backward finite transformations for the six generators:
    // 0..2 rotations, 3..5 boosts.
    std::array<std::array<LorentzMatrix, 2>, 6> step;
    std::array<std::array<LorentzMatrix, 2>, 6> step_inv;

    CasimirEngine(const WaveFamily& f, const SectionOptions& s, double h_) : F(f), sec(s), h(h_) {
        for (int a = 0; a < 6; ++a) {
            const Generator4 g = a < 3 ? rotation_generator(a) : boost_generator(a - 3);
            for (int sgn = 0; sgn < 2; ++sgn) {
                step[a][sgn] = exp_generator(g, sgn == 0 ? h : -h);
                step_inv[a][sgn] = inverse(step[a][sgn]);
            }
        }
    }

    // Applies X_{ops[0]} X_{ops[1]} ... to F at (m, y).
    complex eval(const int* ops, int count, const SpacelikeDirection& m, const FourVector& y) const {
        if (count == 0) return F(m, y);
        const int a = ops[0];
        const LorentzMatrix Lm = canonical_section(m, sec);
        complex acc = 0.0;
        for (int sgn = 0; sgn < 2; ++sgn) {
            const auto src = SpacelikeDirection::normalized(apply(step_inv[a][sgn], m.vec()));
            const LorentzMatrix D = Lm * step[a][sgn] * inverse(canonical_section(src, sec));
            const complex v = eval(ops + 1, count - 1, src, apply(inverse(D), y));
            acc += sgn == 0 ? v : -v;
        }
        return acc / (2.0 * h);
    }

    // sum_a (-/+) X_before X_a X_a X_after F
    complex c1(std::initializer_list<int> before, std::initializer_list<int> after,
               const SpacelikeDirection& m, const FourVector& y) const {
        complex acc = 0.0;
        for (int a = 0; a < 6; ++a) {
            std::vector<int> ops(before);
            ops.push_back(a);
            ops.push_back(a);
            ops.insert(ops.end(), after.begin(), after.end());
            const complex v = eval(ops.data(), int(ops.size()), m, y);
            acc += a < 3 ? -v : v;
        }
        return acc;
    }

    complex c2(const SpacelikeDirection& m, const FourVector& y) const {
        complex acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            const int ops[2] = {i, i + 3};
            acc -= eval(ops, 2, m, y);
        }
        return acc;
    }
};

}  // namespace

CasimirReport bundle_casimirs(const BundleFunction& b, const CasimirOptions& opts) {
    if (!b.family())
        throw OrbitCoverage("Casimir estimates differentiate along the orbit and need the family");
    if (!(opts.h > 0.0) || opts.theta_nodes < 1 || opts.beta_nodes < 1 || opts.phi_nodes < 1)
        throw DomainError("invalid Casimir sampling parameters");
    const CasimirEngine eng(*b.family(), opts.section, opts.h);

    CasimirReport rep;
    for (const auto& mem : b.members()) {
        complex num1 = 0.0, num2 = 0.0;
        double den = 0.0, comm = 0.0;
        for (int i = 0; i < opts.theta_nodes; ++i) {
            const double theta = (i + 0.5) * pi / opts.theta_nodes;
            for (int j = 0; j < opts.beta_nodes; ++j) {
                const double beta =
                    opts.beta_nodes == 1
                        ? 0.0
                        : -opts.beta_max + 2.0 * opts.beta_max * j / (opts.beta_nodes - 1);
                for (int k = 0; k < opts.phi_nodes; ++k) {
                    const double phi = (k + 0.5) * 2.0 * pi / opts.phi_nodes;
                    const double w = std::pow(std::sin(theta), 2) * std::cosh(beta);
                    const FourVector y = kinematics::rms_to_cartesian(
                        kinematics::RMSPoint(opts.rho_ref, theta, beta, phi));
                    const complex f = (*b.family())(mem.m, y);
                    num1 += w * std::conj(f) * eng.c1({}, {}, mem.m, y);
                    num2 += w * std::conj(f) * eng.c2(mem.m, y);
                    den += w * std::norm(f);

                    // [c1, X_J3] F = c1 (X_J3 F) - X_J3 (c1 F)
                    const complex d = eng.c1({}, {2}, mem.m, y) - eng.c1({2}, {}, mem.m, y);
                    comm += w * std::norm(d);
                }
            }
        }
        if (!(den > 0.0))
            throw DomainError("bundle function vanishes on every Casimir sample point");
        rep.members.push_back({mem.m, num1 / den, num2 / den, std::sqrt(comm / den)});
    }
    for (const auto& e : rep.members)
        rep.c1_spread = std::max(rep.c1_spread, std::abs(e.c1 - rep.members.front().c1));
    return rep;
}

std::vector<SpacelikeDirection> parse_orbit_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("orbit JSON: ") + e.what());
    }
    const nlohmann::json* list = &j;
    if (j.is_object()) {
        if (!j.contains("directions")) throw ConfigError("orbit JSON: missing \"directions\"");
        list = &j["directions"];
    }
    if (!list->is_array() || list->empty())
        throw ConfigError("orbit JSON: \"directions\" must be a nonempty array");
    std::vector<SpacelikeDirection> out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const auto& e = (*list)[i];
        const std::string where = "orbit JSON: directions[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 4) throw ConfigError(where + " must have 4 components");
        FourVector m;
        for (int mu = 0; mu < 4; ++mu) {
            if (!e[mu].is_number()) throw ConfigError(where + " has a non-numeric component");
            m[mu] = e[mu].get<double>();
        }
        if (!(kinematics::minkowski_dot(m, m) > 0.0))
            throw ConfigError(where + " = " + describe(m) + " is not spacelike");
        out.push_back(SpacelikeDirection::normalized(m));
    }
    return out;
}

std::string orbit_to_json(const std::vector<SpacelikeDirection>& directions) {
    nlohmann::json j;
    j["schema"] = "shp.orbit/1";
    j["directions"] = nlohmann::json::array();
    for (const auto& d : directions) {
        const auto& m = d.vec();
        j["directions"].push_back({m.x0, m.x1, m.x2, m.x3});
    }
    return j.dump(2) + "\n";
}

}  // namespace shp::induced
