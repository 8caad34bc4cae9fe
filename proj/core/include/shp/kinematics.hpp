#pragma once

// Four-vectors in signature (-,+,+,+), the RMS chart and the two-body split.

namespace shp::kinematics {

struct FourVector {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    double& operator[](int mu);
    double operator[](int mu) const;

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
    }
    friend FourVector operator*(const FourVector& a, double s) { return s * a; }
    friend FourVector operator/(const FourVector& a, double s) {
        return {a.x0 / s, a.x1 / s, a.x2 / s, a.x3 / s};
    }
    friend bool operator==(const FourVector&, const FourVector&) = default;
};

double minkowski_dot(const FourVector& a, const FourVector& b);

// Sum of squared components; the scale against which tolerances are measured.
double euclidean_norm2(const FourVector& a);

// Hyperbolic coordinates of a point in the reduced Minkowski space.
// theta is kept strictly inside (0, pi) and phi is reduced into [0, 2 pi).
class RMSPoint {
public:
    RMSPoint(double rho, double theta, double beta, double phi);

    double rho() const { return rho_; }
    double theta() const { return theta_; }
    double beta() const { return beta_; }
    double phi() const { return phi_; }

private:
    double rho_;
    double theta_;
    double beta_;
    double phi_;
};

enum class RegionTag { Timelike, SpacelikeOutsideRMS, RMS, LightlikeBoundary };

const char* to_string(RegionTag tag);

inline constexpr double default_region_tolerance = 1e-12;

// Boundary tests are |value| <= tol * euclidean_norm2(x).
RegionTag classify_region(const FourVector& x, double tol = default_region_tolerance);

FourVector rms_to_cartesian(const RMSPoint& p);

// Throws NotInRMS unless classify_region(x, tol) == RMS.
RMSPoint cartesian_to_rms(const FourVector& x, double tol = default_region_tolerance);

// Full spacelike chart: x0 = rho sinh b, x_spatial = rho cosh b * unit(theta, phi).
FourVector spacelike_to_cartesian(double rho, double beta, double theta, double phi);

// rho^3 sin^2(theta) cosh(beta).
double measure_weight(const RMSPoint& p);

class TwoBodyMasses {
public:
    TwoBodyMasses(double m1, double m2);

    double m1() const { return m1_; }
    double m2() const { return m2_; }
    double total() const { return m1_ + m2_; }
    double reduced() const { return m1_ * m2_ / (m1_ + m2_); }

private:
    double m1_;
    double m2_;
};

struct CMSplit {
    FourVector X;  // center of mass coordinate
    FourVector P;  // total momentum
    FourVector x;  // relative coordinate
    FourVector p;  // relative momentum
};

CMSplit cm_split(const FourVector& x1, const FourVector& x2, const FourVector& p1,
                 const FourVector& p2, const TwoBodyMasses& masses);

struct ParticlePair {
    FourVector x1, x2, p1, p2;
};

ParticlePair cm_join(const CMSplit& s, const TwoBodyMasses& masses);

// p1^2/2M1 + p2^2/2M2 (invariant squares).
double two_body_K(const FourVector& p1, const FourVector& p2, const TwoBodyMasses& masses);

// P^2/2M + p^2/2m.
double separated_K(const FourVector& P, const FourVector& p, const TwoBodyMasses& masses);

}  // namespace shp::kinematics
