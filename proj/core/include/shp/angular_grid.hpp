#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shp/hyperangular.hpp"

namespace shp::hyperangular {

// Tensor grid in (theta, beta, phi).
//
// theta and beta are cell-centered in mapped variables v, u in (-pi/2, pi/2):
//   sin(theta) = cos^2 v,  cos(theta) = sin v sqrt(1 + cos^2 v)
//   sech(beta) = cos^2 u,  tanh(beta) = sin u sqrt(1 + cos^2 u)
// Bound-state factors become analytic in (u, v) and odd about the end points, so
// uniform central differences in (u, v) converge at second order all the way out.
// phi is uniform on [0, 2 pi) and differentiated spectrally.
class AngularGrid {
public:
    AngularGrid(int n_theta, int n_beta, int n_phi);

    int n_theta() const { return nt_; }
    int n_beta() const { return nb_; }
    int n_phi() const { return np_; }
    std::size_t size() const { return std::size_t(nt_) * nb_ * np_; }
    std::size_t index(int i, int j, int k) const {
        return (std::size_t(i) * nb_ + j) * np_ + k;
    }

    double h_v() const { return hv_; }
    double h_u() const { return hu_; }
    double h_phi() const { return hphi_; }

    // theta axis
    double v(int i) const { return v_[i]; }
    double theta(int i) const { return theta_[i]; }
    double xi(int i) const { return xi_[i]; }          // cos(theta)
    double sin_theta(int i) const { return sin_theta_[i]; }
    double dv_dtheta(int i) const { return kv_[i]; }
    double d2v(int i) const { return dkv_[i]; }         // d(dv/dtheta)/dv
    double weight_theta(int i) const { return wt_[i]; } // sin^2(theta) dtheta

    // beta axis
    double u(int j) const { return u_[j]; }
    double beta(int j) const { return beta_[j]; }
    double zeta(int j) const { return zeta_[j]; }        // tanh(beta)
    double sech(int j) const { return sech_[j]; }
    double du_dbeta(int j) const { return ju_[j]; }
    double d2u(int j) const { return dju_[j]; }          // d(du/dbeta)/du
    double weight_beta(int j) const { return wb_[j]; }   // cosh(beta) dbeta

    double phi(int k) const { return phi_[k]; }
    double weight_phi() const { return hphi_; }

    double weight(int i, int j) const { return wt_[i] * wb_[j] * hphi_; }

    bool same_shape(const AngularGrid& o) const {
        return nt_ == o.nt_ && nb_ == o.nb_ && np_ == o.np_;
    }

private:
    int nt_, nb_, np_;
    double hv_, hu_, hphi_;
    std::vector<double> v_, theta_, xi_, sin_theta_, kv_, dkv_, wt_;
    std::vector<double> u_, beta_, zeta_, sech_, ju_, dju_, wb_;
    std::vector<double> phi_;
};

using GridPtr = std::shared_ptr<const AngularGrid>;

GridPtr make_grid(int n_theta, int n_beta, int n_phi);
inline GridPtr make_grid(int n) { return make_grid(n, n, n); }

// Behaviour under phi -> phi + 2 pi.
enum class Monodromy { Periodic, Antiperiodic };

class AngularGridFunction {
public:
    AngularGridFunction(GridPtr grid, Monodromy mono);

    const AngularGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    Monodromy monodromy() const { return mono_; }

    complex& operator()(int i, int j, int k) { return data_[grid_->index(i, j, k)]; }
    complex operator()(int i, int j, int k) const { return data_[grid_->index(i, j, k)]; }
    std::vector<complex>& data() { return data_; }
    const std::vector<complex>& data() const { return data_; }

    AngularGridFunction& operator+=(const AngularGridFunction& o);
    AngularGridFunction& operator-=(const AngularGridFunction& o);
    AngularGridFunction& operator*=(complex s);

    friend AngularGridFunction operator+(AngularGridFunction a, const AngularGridFunction& b) {
        return a += b;
    }
    friend AngularGridFunction operator-(AngularGridFunction a, const AngularGridFunction& b) {
        return a -= b;
    }
    friend AngularGridFunction operator*(complex s, AngularGridFunction a) { return a *= s; }

private:
    GridPtr grid_;
    Monodromy mono_;
    std::vector<complex> data_;
};

// Throws GridMismatch unless both live on equal grids with equal monodromy.
void require_compatible(const AngularGridFunction& a, const AngularGridFunction& b);

AngularGridFunction sample(GridPtr grid, Monodromy mono,
                           const std::function<complex(double theta, double beta, double phi)>& fn);

// f(theta_i) g(beta_j) h(phi_k) from per-axis samples.
AngularGridFunction sample_separable(GridPtr grid, Monodromy mono,
                                     const std::vector<complex>& theta_part,
                                     const std::vector<complex>& beta_part,
                                     const std::vector<complex>& phi_part);

// theta_physical(l, n) * chi(state) on the grid.
AngularGridFunction product_state(GridPtr grid, const HyperangularState& state);

// chi(state) with a theta factor that is identically one.
AngularGridFunction chi_state(GridPtr grid, const HyperangularState& state);

enum class Generator { L3, Hplus, Hminus, A3, Lplus, Lminus };

const char* to_string(Generator g);

// How the (theta, beta) stencils close at the ends of the mapped axes.
// Reflection: ghost nodes mirror the interior with a sign flip, valid for functions
// vanishing at the ends like the bound-state family. OneSided: second-order
// one-sided stencils, valid for any smooth samples.
enum class Closure { Reflection, OneSided };

struct OperatorOptions {
    int stride = 1;  // stencil spacing in nodes; stride 2 gives the 2h operator
    Closure closure = Closure::Reflection;
    // When set, the relative truncation error is estimated from the stride and
    // doubled-stride operators and GridTooCoarse is thrown above this value.
    std::optional<double> tolerance;
};

AngularGridFunction apply_generator(Generator g, const AngularGridFunction& f,
                                    const OperatorOptions& opts = {});

// O(2,1) Casimir: d^2/dbeta^2 + tanh(beta) d/dbeta - sech^2(beta) d^2/dphi^2.
AngularGridFunction apply_N2(const AngularGridFunction& f, const OperatorOptions& opts = {});

// -d^2/dtheta^2 - 2 cot(theta) d/dtheta + N^2 / sin^2(theta), evaluated in the
// conjugated form sin^{-1/2} [ -g'' - cot g' - 3/4 g + (N^2 + 1/4) g / sin^2 ]
// with g = sin^{1/2}(theta) f, which stays regular at the poles for every n.
AngularGridFunction apply_Lambda(const AngularGridFunction& f, const OperatorOptions& opts = {});

// L^2 - A^2 built from the six first-order generators.
AngularGridFunction apply_Lambda_composed(const AngularGridFunction& f,
                                          const OperatorOptions& opts = {});

// L3^2 - (H+H- + H-H+)/2.
AngularGridFunction apply_N2_composed(const AngularGridFunction& f,
                                      const OperatorOptions& opts = {});

// Estimated relative truncation error of an operator, |A_h f - A_2h f| / (3 |A_h f|).
double truncation_estimate(
    const std::function<AngularGridFunction(const AngularGridFunction&, const OperatorOptions&)>& op,
    const AngularGridFunction& f, const OperatorOptions& opts = {});

// Same-grid Richardson: a quantity measured with the stride-s and stride-2s operators,
// combined as (4 fine - coarse) / 3.
struct RichardsonEstimate {
    complex fine;
    complex coarse;
    complex value;
};

RichardsonEstimate make_richardson(complex fine, complex coarse);

using GridOperator =
    std::function<AngularGridFunction(const AngularGridFunction&, const OperatorOptions&)>;

// Rayleigh quotient of op on f at strides s and 2s.
RichardsonEstimate rayleigh_richardson(const GridOperator& op, const AngularGridFunction& f,
                                       const OperatorOptions& opts = {});

// Quadrature of conj(f) g sin^2(theta) cosh(beta).
complex angular_inner_product(const AngularGridFunction& f, const AngularGridFunction& g);
double angular_norm(const AngularGridFunction& f);

// <f, Af> / <f, f>
complex rayleigh_quotient(const AngularGridFunction& f, const AngularGridFunction& Af);

// |Af - lambda f| / |f|
double residual_norm(const AngularGridFunction& f, const AngularGridFunction& Af, complex lambda);

// c with H+ chi(n, k) = c chi(n, k+1), measured by projection on the grid.
complex ladder_coefficient(int n, int k, const GridPtr& grid, const OperatorOptions& opts = {});

// c' with H- chi(n, k+1) = c' chi(n, k).
complex lowering_coefficient(int n, int k, const GridPtr& grid, const OperatorOptions& opts = {});

RichardsonEstimate ladder_richardson(int n, int k, const GridPtr& grid, bool raising = true,
                                     const OperatorOptions& opts = {});

// i sqrt((k+1)(2n+k+1))
complex ladder_coefficient_exact(int n, int k);

// -i sqrt((k+1)(2n+k+1))
complex lowering_coefficient_exact(int n, int k);

// Rows theta,beta,phi,weight,re,im with '#' metadata lines first.
void export_csv(const AngularGridFunction& f, std::ostream& out,
                const std::vector<std::string>& metadata = {});

}  // namespace shp::hyperangular
