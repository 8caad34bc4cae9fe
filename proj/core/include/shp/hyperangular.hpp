#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace shp::hyperangular {

using complex = std::complex<double>;

// Quantum numbers of one O(2,1) x O(3,1) eigenfunction. m = n + k.
// eps is the regularization parameter and is present exactly when n == 0.
class HyperangularState {
public:
    HyperangularState(int n, int k, int ell, bool conjugated = false,
                      std::optional<double> eps = std::nullopt);

    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return n_ + k_; }
    int ell() const { return ell_; }
    bool conjugated() const { return conjugated_; }
    std::optional<double> eps() const { return eps_; }

    // Expected eigenvalues on the exact functions.
    double l3_eigenvalue() const;
    double n2_eigenvalue() const;

private:
    int n_;
    int k_;
    int ell_;
    bool conjugated_;
    std::optional<double> eps_;
};

// e^{i(m+1/2)phi}/sqrt(2 pi); changes sign under phi -> phi + 2 pi.
complex phi_m(int m, double phi);

// b_norm_constant(m, n) * P_m^{-n}(zeta).
double b_hat(int m, int n, double zeta);
double b_hat(int m, int n, double zeta, double s);

// sqrt(eps) (1 - zeta^2)^{eps/2} P_m(zeta).
double b_hat_regularized(int m, double eps, double zeta);
double b_hat_regularized(int m, double eps, double zeta, double s);

// Unit-normalized N P_l^{-n}(xi) on [-1, 1].
double theta_fn(int l, int n, double xi);
double theta_fn(int l, int n, double xi, double s);

// (1 - xi^2)^{-1/4} theta_fn.
double theta_physical(int l, int n, double xi);
double theta_physical(int l, int n, double xi, double s);

// (1 - zeta^2)^{1/4} b_hat(m, n, zeta) phi_m(m, phi), conjugated when the state says so.
// n == 0 uses the regularized b_hat with the state's eps.
complex chi(const HyperangularState& state, double zeta, double phi);
complex chi(const HyperangularState& state, double zeta, double s, double phi);

// Inner products of the regularized ground family, evaluated exactly with a
// Gauss-Jacobi rule for the weight (1 - zeta^2)^{eps - 1}.
struct RegularizedMoments {
    double eps = 0.0;
    double norm2 = 0.0;    // eps * int (1 - zeta^2)^{eps-1} P_m^2
    double n2 = 0.0;       // <N^2>
    double tanh2 = 0.0;    // <tanh^2 beta>
    double l3 = 0.0;       // <L3>, exactly m + 1/2
};

RegularizedMoments regularized_moments(int m, double eps, int quadrature_nodes = 0);

inline const std::vector<double>& default_eps_sequence() {
    static const std::vector<double> seq = {0.2, 0.1, 0.05, 0.025};
    return seq;
}

struct EpsExtrapolation {
    std::vector<double> eps;
    std::vector<double> values;
    double limit = 0.0;          // polynomial extrapolation through every point
    double limit_without_first = 0.0;  // same, dropping the coarsest eps
    double drift = 0.0;          // |limit - limit_without_first| / |limit|
};

EpsExtrapolation extrapolate_in_eps(const std::vector<double>& eps,
                                    const std::vector<double>& values);

}  // namespace shp::hyperangular
