#include "shp/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shp/errors.hpp"

namespace shp::kinematics {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double reduce_angle(double phi) {
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

}  // namespace

double& FourVector::operator[](int mu) {
    switch (mu) {
        case 0: return x0;
        case 1: return x1;
        case 2: return x2;
        case 3: return x3;
    }
    throw IndexError("four-vector index " + std::to_string(mu));
}

double FourVector::operator[](int mu) const {
    return const_cast<FourVector&>(*this)[mu];
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

double euclidean_norm2(const FourVector& a) {
    return a.x0 * a.x0 + a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3;
}

RMSPoint::RMSPoint(double rho, double theta, double beta, double phi)
    : rho_(rho), theta_(theta), beta_(beta), phi_(reduce_angle(phi)) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rho must be positive and finite");
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw DomainError("theta must lie strictly inside (0, pi)");
    if (!std::isfinite(beta)) throw DomainError("beta must be finite");
    if (!std::isfinite(phi)) throw DomainError("phi must be finite");
}

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::Timelike: return "Timelike";
        case RegionTag::SpacelikeOutsideRMS: return "SpacelikeOutsideRMS";
        case RegionTag::RMS: return "RMS";
        case RegionTag::LightlikeBoundary: return "LightlikeBoundary";
    }
    return "?";
}

RegionTag classify_region(const FourVector& x, double tol) {
    const double scale = euclidean_norm2(x);
    const double band = tol * scale;
    const double xx = minkowski_dot(x, x);
    if (std::abs(xx) <= band) return RegionTag::LightlikeBoundary;
    if (xx < 0.0) return RegionTag::Timelike;
    const double transverse = x.x1 * x.x1 + x.x2 * x.x2 - x.x0 * x.x0;
    if (std::abs(transverse) <= band) return RegionTag::LightlikeBoundary;
    return transverse > 0.0 ? RegionTag::RMS : RegionTag::SpacelikeOutsideRMS;
}

FourVector rms_to_cartesian(const RMSPoint& p) {
    const double st = std::sin(p.theta());
    const double r = p.rho() * st;
    return {r * std::sinh(p.beta()), r * std::cosh(p.beta()) * std::cos(p.phi()),
            r * std::cosh(p.beta()) * std::sin(p.phi()), p.rho() * std::cos(p.theta())};
}

RMSPoint cartesian_to_rms(const FourVector& x, double tol) {
    const RegionTag tag = classify_region(x, tol);
    if (tag != RegionTag::RMS)
        throw NotInRMS(std::string("point classified as ") + to_string(tag));
    // s = rho sin(theta); atan2 keeps theta accurate near the poles.
    const double s = std::sqrt(x.x1 * x.x1 + x.x2 * x.x2 - x.x0 * x.x0);
    const double rho = std::sqrt(minkowski_dot(x, x));
    const double theta = std::atan2(s, x.x3);
    const double beta = std::asinh(x.x0 / s);
    const double phi = std::atan2(x.x2, x.x1);
    return RMSPoint(rho, theta, beta, phi);
}

FourVector spacelike_to_cartesian(double rho, double beta, double theta, double phi) {
    if (!(rho > 0.0)) throw DomainError("rho must be positive");
    const double ch = rho * std::cosh(beta);
    return {rho * std::sinh(beta), ch * std::cos(phi) * std::sin(theta),
            ch * std::sin(phi) * std::sin(theta), ch * std::cos(theta)};
}

double measure_weight(const RMSPoint& p) {
    const double st = std::sin(p.theta());
    return p.rho() * p.rho() * p.rho() * st * st * std::cosh(p.beta());
}

TwoBodyMasses::TwoBodyMasses(double m1, double m2) : m1_(m1), m2_(m2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw DomainError("particle masses must be positive");
}

CMSplit cm_split(const FourVector& x1, const FourVector& x2, const FourVector& p1,
                 const FourVector& p2, const TwoBodyMasses& masses) {
    const double M = masses.total();
    return {(masses.m1() * x1 + masses.m2() * x2) / M, p1 + p2, x1 - x2,
            (masses.m2() * p1 - masses.m1() * p2) / M};
}

ParticlePair cm_join(const CMSplit& s, const TwoBodyMasses& masses) {
    const double M = masses.total();
    const double f1 = masses.m1() / M;
    const double f2 = masses.m2() / M;
    return {s.X + f2 * s.x, s.X - f1 * s.x, f1 * s.P + s.p, f2 * s.P - s.p};
}

double two_body_K(const FourVector& p1, const FourVector& p2, const TwoBodyMasses& masses) {
    return minkowski_dot(p1, p1) / (2.0 * masses.m1()) +
           minkowski_dot(p2, p2) / (2.0 * masses.m2());
}

double separated_K(const FourVector& P, const FourVector& p, const TwoBodyMasses& masses) {
    return minkowski_dot(P, P) / (2.0 * masses.total()) +
           minkowski_dot(p, p) / (2.0 * masses.reduced());
}

}  // namespace shp::kinematics
