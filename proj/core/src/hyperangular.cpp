#include "shp/hyperangular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shp/errors.hpp"
#include "shp/numerics.hpp"
#include "shp/specfun.hpp"

namespace shp::hyperangular {

namespace sf = shp::specfun;

namespace {

double one_minus_sq_root(double zeta) {
    if (!(zeta > -1.0 && zeta < 1.0)) throw DomainError("argument must lie in (-1, 1)");
    return std::sqrt((1.0 - zeta) * (1.0 + zeta));
}

}  // namespace

HyperangularState::HyperangularState(int n, int k, int ell, bool conjugated,
                                     std::optional<double> eps)
    : n_(n), k_(k), ell_(ell), conjugated_(conjugated), eps_(eps) {
    if (n < 0) throw IndexError("n must be non-negative");
    if (k < 0) throw IndexError("k must be non-negative");
    if (ell < n) throw IndexError("ell must be at least n");
    if (n == 0 && !eps) throw DomainError("n = 0 states need a regularization parameter");
    if (n > 0 && eps) throw DomainError("only n = 0 states carry a regularization parameter");
    if (eps && !(*eps > 0.0)) throw DomainError("regularization parameter must be positive");
}

double HyperangularState::l3_eigenvalue() const {
    const double v = m() + 0.5;
    return conjugated_ ? -v : v;
}

double HyperangularState::n2_eigenvalue() const { return n_ * n_ - 0.25; }

complex phi_m(int m, double phi) {
    const double a = (m + 0.5) * phi;
    return complex(std::cos(a), std::sin(a)) / std::sqrt(2.0 * std::numbers::pi);
}

double b_hat(int m, int n, double zeta) { return b_hat(m, n, zeta, one_minus_sq_root(zeta)); }

double b_hat(int m, int n, double zeta, double s) {
    const double c = sf::b_norm_constant(m, n);
    return c * sf::assoc_legendre_p(sf::LegendreOrderDegree(m, n), zeta, s);
}

double b_hat_regularized(int m, double eps, double zeta) {
    return b_hat_regularized(m, eps, zeta, one_minus_sq_root(zeta));
}

double b_hat_regularized(int m, double eps, double zeta, double s) {
    if (!(eps > 0.0)) throw DomainError("regularization parameter must be positive");
    if (m < 0) throw IndexError("m must be non-negative");
    return std::sqrt(eps) * std::pow(s, eps) * sf::legendre_p(m, zeta);
}

double theta_fn(int l, int n, double xi) {
    if (n == 0) {
        if (!(xi >= -1.0 && xi <= 1.0)) throw DomainError("xi must lie in [-1, 1]");
        return sf::theta_norm_constant(l, 0) * sf::legendre_p(l, xi);
    }
    return theta_fn(l, n, xi, one_minus_sq_root(xi));
}

double theta_fn(int l, int n, double xi, double s) {
    if (l < n) throw IndexError("theta_fn needs l >= n");
    return sf::theta_norm_constant(l, n) * sf::assoc_legendre_p(sf::LegendreOrderDegree(l, n), xi, s);
}

double theta_physical(int l, int n, double xi) {
    return theta_physical(l, n, xi, one_minus_sq_root(xi));
}

double theta_physical(int l, int n, double xi, double s) {
    return theta_fn(l, n, xi, s) / std::sqrt(s);
}

complex chi(const HyperangularState& state, double zeta, double phi) {
    return chi(state, zeta, one_minus_sq_root(zeta), phi);
}

complex chi(const HyperangularState& state, double zeta, double s, double phi) {
    const int m = state.m();
    const double b = state.n() == 0 ? b_hat_regularized(m, *state.eps(), zeta, s)
                                    : b_hat(m, state.n(), zeta, s);
    const complex v = std::sqrt(s) * b * phi_m(m, phi);
    return state.conjugated() ? std::conj(v) : v;
}

RegularizedMoments regularized_moments(int m, double eps, int quadrature_nodes) {
    if (m < 0) throw IndexError("m must be non-negative");
    if (!(eps > 0.0)) throw DomainError("regularization parameter must be positive");
    // Every integrand below is a polynomial of degree <= 2m + 2 against the Jacobi weight.
    const int nq = quadrature_nodes > 0 ? quadrature_nodes : m + 4;
    const auto rule = sf::gauss_jacobi(nq, eps - 1.0, eps - 1.0);
    double norm = 0.0, kin = 0.0, pot = 0.0, t2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double z = rule.nodes[i];
        const double w = rule.weights[i];
        const double p = sf::legendre_p(m, z);
        const double dp = sf::legendre_p_derivative(m, z);
        const double g = (1.0 - z * z) * dp - (eps + 0.5) * z * p;
        norm += w * p * p;
        kin += w * g * g;
        pot += w * (1.0 - z * z) * p * p;
        t2 += w * z * z * p * p;
    }
    RegularizedMoments r;
    r.eps = eps;
    r.norm2 = eps * norm;
    r.n2 = (-kin + (m + 0.5) * (m + 0.5) * pot) / norm;
    r.tanh2 = t2 / norm;
    r.l3 = m + 0.5;
    return r;
}

EpsExtrapolation extrapolate_in_eps(const std::vector<double>& eps,
                                    const std::vector<double>& values) {
    if (eps.size() != values.size() || eps.size() < 3)
        throw DomainError("eps extrapolation needs at least three matching samples");
    EpsExtrapolation e;
    e.eps = eps;
    e.values = values;
    e.limit = numerics::neville_at_zero(eps, values);
    e.limit_without_first = numerics::neville_at_zero(
        std::vector<double>(eps.begin() + 1, eps.end()),
        std::vector<double>(values.begin() + 1, values.end()));
    const double scale = std::abs(e.limit) > 0.0 ? std::abs(e.limit) : 1.0;
    e.drift = std::abs(e.limit - e.limit_without_first) / scale;
    return e;
}

}  // namespace shp::hyperangular
