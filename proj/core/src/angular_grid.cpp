#include "shp/angular_grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

#include "shp/errors.hpp"
#include "shp/io.hpp"

namespace shp::hyperangular {

namespace {

constexpr double pi = std::numbers::pi;
const complex I(0.0, 1.0);

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

AngularGrid::AngularGrid(int n_theta, int n_beta, int n_phi)
    : nt_(n_theta), nb_(n_beta), np_(n_phi) {
    if (nt_ < 4 || nb_ < 4 || np_ < 4) throw GridTooCoarse("every axis needs at least 4 nodes");
    hv_ = pi / nt_;
    hu_ = pi / nb_;
    hphi_ = 2.0 * pi / np_;

    v_.resize(nt_); theta_.resize(nt_); xi_.resize(nt_); sin_theta_.resize(nt_);
    kv_.resize(nt_); dkv_.resize(nt_); wt_.resize(nt_);
    for (int i = 0; i < nt_; ++i) {
        const double v = -0.5 * pi + (i + 0.5) * hv_;
        const double c = std::cos(v), s = std::sin(v);
        const double r = std::sqrt(1.0 + c * c);
        v_[i] = v;
        sin_theta_[i] = c * c;
        xi_[i] = s * r;
        theta_[i] = std::atan2(c * c, s * r);
        kv_[i] = -r / (2.0 * c);
        dkv_[i] = -s / (2.0 * c * c * r);
        wt_[i] = c * c * c * c * (2.0 * c / r) * hv_;
    }

    u_.resize(nb_); beta_.resize(nb_); zeta_.resize(nb_); sech_.resize(nb_);
    ju_.resize(nb_); dju_.resize(nb_); wb_.resize(nb_);
    for (int j = 0; j < nb_; ++j) {
        const double u = -0.5 * pi + (j + 0.5) * hu_;
        const double c = std::cos(u), s = std::sin(u);
        const double r = std::sqrt(1.0 + c * c);
        u_[j] = u;
        sech_[j] = c * c;
        zeta_[j] = s * r;
        beta_[j] = std::asinh(s * r / (c * c));
        ju_[j] = 0.5 * c * r;
        dju_[j] = -s * (1.0 + 2.0 * c * c) / (2.0 * r);
        wb_[j] = (2.0 / (c * c * c * r)) * hu_;
    }

    phi_.resize(np_);
    for (int k = 0; k < np_; ++k) phi_[k] = k * hphi_;
}

GridPtr make_grid(int n_theta, int n_beta, int n_phi) {
    return std::make_shared<const AngularGrid>(n_theta, n_beta, n_phi);
}

AngularGridFunction::AngularGridFunction(GridPtr grid, Monodromy mono)
    : grid_(std::move(grid)), mono_(mono) {
    if (!grid_) throw GridMismatch("grid function needs a grid");
    data_.assign(grid_->size(), complex(0.0, 0.0));
}

void require_compatible(const AngularGridFunction& a, const AngularGridFunction& b) {
    if (!a.grid().same_shape(b.grid())) throw GridMismatch("grid shapes differ");
    if (a.monodromy() != b.monodromy()) throw GridMismatch("monodromy differs");
}

AngularGridFunction& AngularGridFunction::operator+=(const AngularGridFunction& o) {
    require_compatible(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

AngularGridFunction& AngularGridFunction::operator-=(const AngularGridFunction& o) {
    require_compatible(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

AngularGridFunction& AngularGridFunction::operator*=(complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

AngularGridFunction sample(GridPtr grid, Monodromy mono,
                           const std::function<complex(double, double, double)>& fn) {
    AngularGridFunction f(grid, mono);
    const auto& g = *grid;
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j)
            for (int k = 0; k < g.n_phi(); ++k) f(i, j, k) = fn(g.theta(i), g.beta(j), g.phi(k));
    return f;
}

AngularGridFunction sample_separable(GridPtr grid, Monodromy mono,
                                     const std::vector<complex>& theta_part,
                                     const std::vector<complex>& beta_part,
                                     const std::vector<complex>& phi_part) {
    const auto& g = *grid;
    if (int(theta_part.size()) != g.n_theta() || int(beta_part.size()) != g.n_beta() ||
        int(phi_part.size()) != g.n_phi())
        throw GridMismatch("axis samples do not match the grid");
    AngularGridFunction f(grid, mono);
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j) {
            const complex tb = theta_part[i] * beta_part[j];
            for (int k = 0; k < g.n_phi(); ++k) f(i, j, k) = tb * phi_part[k];
        }
    return f;
}

namespace {

AngularGridFunction sample_chi(GridPtr grid, const HyperangularState& state,
                               std::vector<complex> theta_part) {
    const auto& g = *grid;
    // chi factors as (beta part) x (phi part); evaluate each once.
    const HyperangularState plain(state.n(), state.k(), state.ell(), false, state.eps());
    std::vector<complex> beta_part(g.n_beta()), phi_part(g.n_phi());
    for (int j = 0; j < g.n_beta(); ++j)
        beta_part[j] = chi(plain, g.zeta(j), g.sech(j), 0.0) * std::sqrt(2.0 * pi);
    for (int k = 0; k < g.n_phi(); ++k) phi_part[k] = phi_m(state.m(), g.phi(k));
    if (state.conjugated()) {
        for (auto& z : beta_part) z = std::conj(z);
        for (auto& z : phi_part) z = std::conj(z);
        for (auto& z : theta_part) z = std::conj(z);
    }
    return sample_separable(std::move(grid), Monodromy::Antiperiodic, theta_part, beta_part,
                            phi_part);
}

}  // namespace

AngularGridFunction product_state(GridPtr grid, const HyperangularState& state) {
    const auto& g = *grid;
    std::vector<complex> theta_part(g.n_theta());
    for (int i = 0; i < g.n_theta(); ++i)
        theta_part[i] = theta_physical(state.ell(), state.n(), g.xi(i), g.sin_theta(i));
    return sample_chi(std::move(grid), state, std::move(theta_part));
}

AngularGridFunction chi_state(GridPtr grid, const HyperangularState& state) {
    std::vector<complex> theta_part(grid->n_theta(), complex(1.0, 0.0));
    return sample_chi(std::move(grid), state, std::move(theta_part));
}

const char* to_string(Generator g) {
    switch (g) {
        case Generator::L3: return "L3";
        case Generator::Hplus: return "H+";
        case Generator::Hminus: return "H-";
        case Generator::A3: return "A3";
        case Generator::Lplus: return "L+";
        case Generator::Lminus: return "L-";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Stencils

namespace {

enum class Axis { Theta, Beta };

// First or second derivative with respect to the mapped coordinate along one axis.
// parity is the sign used by reflection ghosts.
AngularGridFunction mapped_derivative(const AngularGridFunction& f, Axis axis, int order,
                                      const OperatorOptions& opts, int parity) {
    const auto& g = f.grid();
    const int N = axis == Axis::Theta ? g.n_theta() : g.n_beta();
    const int st = opts.stride;
    if (st < 1) throw GridTooCoarse("stride must be positive");
    if (opts.closure == Closure::OneSided ? N < 4 * st : N < st)
        throw GridTooCoarse("axis has " + std::to_string(N) + " nodes, too few for stride " +
                            std::to_string(st));
    const double H = (axis == Axis::Theta ? g.h_v() : g.h_u()) * st;
    const std::size_t step = axis == Axis::Theta ? std::size_t(g.n_beta()) * g.n_phi()
                                                 : std::size_t(g.n_phi());
    const int other = axis == Axis::Theta ? g.n_beta() : g.n_theta();

    AngularGridFunction out(f.grid_ptr(), f.monodromy());
    const complex* in = f.data().data();
    complex* res = out.data().data();

    for (int a = 0; a < other; ++a)
        for (int k = 0; k < g.n_phi(); ++k) {
            const std::size_t base = axis == Axis::Theta
                                         ? std::size_t(a) * g.n_phi() + k
                                         : std::size_t(a) * g.n_beta() * g.n_phi() + k;
            auto at = [&](int i) -> complex {
                if (i < 0) return double(parity) * in[base + std::size_t(-1 - i) * step];
                if (i >= N) return double(parity) * in[base + std::size_t(2 * N - 1 - i) * step];
                return in[base + std::size_t(i) * step];
            };
            for (int i = 0; i < N; ++i) {
                const bool interior = i - st >= 0 && i + st < N;
                complex d;
                if (interior || opts.closure == Closure::Reflection) {
                    d = order == 1 ? (at(i + st) - at(i - st)) / (2.0 * H)
                                   : (at(i + st) - 2.0 * at(i) + at(i - st)) / (H * H);
                } else {
                    const int dir = i - st < 0 ? 1 : -1;
                    const complex f0 = at(i), f1 = at(i + dir * st), f2 = at(i + 2 * dir * st);
                    if (order == 1) {
                        d = double(dir) * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * H);
                    } else {
                        const complex f3 = at(i + 3 * dir * st);
                        d = (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (H * H);
                    }
                }
                res[base + std::size_t(i) * step] = d;
            }
        }
    return out;
}

// d/dtheta = (dv/dtheta) d/dv
AngularGridFunction d_theta(const AngularGridFunction& f, const OperatorOptions& o, int parity) {
    auto d = mapped_derivative(f, Axis::Theta, 1, o, parity);
    const auto& g = f.grid();
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j)
            for (int k = 0; k < g.n_phi(); ++k) d(i, j, k) *= g.dv_dtheta(i);
    return d;
}

AngularGridFunction d_beta(const AngularGridFunction& f, const OperatorOptions& o, int parity) {
    auto d = mapped_derivative(f, Axis::Beta, 1, o, parity);
    const auto& g = f.grid();
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j)
            for (int k = 0; k < g.n_phi(); ++k) d(i, j, k) *= g.du_dbeta(j);
    return d;
}

// d^2/dtheta^2 = K (K d^2/dv^2 + K' d/dv)
AngularGridFunction d2_theta(const AngularGridFunction& f, const OperatorOptions& o, int parity) {
    auto d1 = mapped_derivative(f, Axis::Theta, 1, o, parity);
    auto d2 = mapped_derivative(f, Axis::Theta, 2, o, parity);
    const auto& g = f.grid();
    for (int i = 0; i < g.n_theta(); ++i) {
        const double K = g.dv_dtheta(i), dK = g.d2v(i);
        for (int j = 0; j < g.n_beta(); ++j)
            for (int k = 0; k < g.n_phi(); ++k) d2(i, j, k) = K * (K * d2(i, j, k) + dK * d1(i, j, k));
    }
    return d2;
}

AngularGridFunction d2_beta(const AngularGridFunction& f, const OperatorOptions& o, int parity) {
    auto d1 = mapped_derivative(f, Axis::Beta, 1, o, parity);
    auto d2 = mapped_derivative(f, Axis::Beta, 2, o, parity);
    const auto& g = f.grid();
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j) {
            const double J = g.du_dbeta(j), dJ = g.d2u(j);
            for (int k = 0; k < g.n_phi(); ++k) d2(i, j, k) = J * (J * d2(i, j, k) + dJ * d1(i, j, k));
        }
    return d2;
}

// Spectral d^order/dphi^order. Antiperiodic data is shifted by e^{-i phi/2} first,
// so the represented frequencies are the symmetric half-integers.
AngularGridFunction d_phi(const AngularGridFunction& f, int order) {
    const auto& g = f.grid();
    const int n = g.n_phi();
    const int howmany = g.n_theta() * g.n_beta();
    const bool anti = f.monodromy() == Monodromy::Antiperiodic;
    const std::size_t total = g.size();

    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    if (!buf) throw std::bad_alloc();
    auto* z = reinterpret_cast<complex*>(buf);

    std::vector<complex> shift(n, complex(1.0, 0.0));
    if (anti)
        for (int k = 0; k < n; ++k) shift[k] = std::polar(1.0, -0.5 * g.phi(k));

    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fwd = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, 1, n, buf, nullptr, 1, n,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, 1, n, buf, nullptr, 1, n,
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    const auto& src = f.data();
    for (std::size_t line = 0; line < std::size_t(howmany); ++line)
        for (int k = 0; k < n; ++k) z[line * n + k] = src[line * n + k] * shift[k];

    fftw_execute(fwd);

    std::vector<complex> mult(n);
    for (int q = 0; q < n; ++q) {
        const int kappa = q < (n + 1) / 2 ? q : q - n;
        double w = kappa + (anti ? 0.5 : 0.0);
        if (!anti && n % 2 == 0 && q == n / 2) w = order % 2 == 1 ? 0.0 : double(n / 2);
        mult[q] = std::pow(I * w, order) / double(n);
    }
    for (std::size_t line = 0; line < std::size_t(howmany); ++line)
        for (int q = 0; q < n; ++q) z[line * n + q] *= mult[q];

    fftw_execute(bwd);

    AngularGridFunction out(f.grid_ptr(), f.monodromy());
    auto& dst = out.data();
    for (std::size_t line = 0; line < std::size_t(howmany); ++line)
        for (int k = 0; k < n; ++k) dst[line * n + k] = z[line * n + k] * std::conj(shift[k]);

    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    fftw_free(buf);
    return out;
}

// Pointwise multiply by a(theta_i) b(beta_j) e^{i s phi_k}.
template <class TF, class BF>
AngularGridFunction scaled(AngularGridFunction f, TF a, BF b, int phase_sign, complex c = 1.0) {
    const auto& g = f.grid();
    std::vector<complex> ph(g.n_phi(), complex(1.0, 0.0));
    if (phase_sign != 0)
        for (int k = 0; k < g.n_phi(); ++k) ph[k] = std::polar(1.0, phase_sign * g.phi(k));
    for (int i = 0; i < g.n_theta(); ++i) {
        const double ai = a(i);
        for (int j = 0; j < g.n_beta(); ++j) {
            const complex ab = c * ai * b(j);
            for (int k = 0; k < g.n_phi(); ++k) f(i, j, k) *= ab * ph[k];
        }
    }
    return f;
}

constexpr auto one = [](int) { return 1.0; };

// Bound-state functions are odd about both ends of the mapped axes.
constexpr int odd = -1;

// half_density: act on sin^{1/2}(theta) f instead of f, i.e. the generator conjugated by
// sin^{1/2}(theta). Only d/dtheta changes, to d/dtheta - cot/2, and the theta ghosts become even.
AngularGridFunction generator_raw(Generator gen, const AngularGridFunction& f,
                                  const OperatorOptions& o, bool half_density = false) {
    const auto& g = f.grid();
    auto cot = [&](int i) { return g.xi(i) / g.sin_theta(i); };
    auto d_th = [&](const AngularGridFunction& x) {
        if (!half_density) return d_theta(x, o, odd);
        auto d = d_theta(x, o, 1);
        d -= scaled(x, cot, one, 0, 0.5);
        return d;
    };
    auto cosh_b = [&](int j) { return 1.0 / g.sech(j); };
    auto sinh_b = [&](int j) { return g.zeta(j) / g.sech(j); };
    auto tanh_b = [&](int j) { return g.zeta(j); };
    auto sech_b = [&](int j) { return g.sech(j); };

    switch (gen) {
        case Generator::L3:
            return scaled(d_phi(f, 1), one, one, 0, -I);
        case Generator::Hplus:
        case Generator::Hminus: {
            const int s = gen == Generator::Hplus ? 1 : -1;
            auto r = scaled(d_beta(f, o, odd), one, one, 0, -I);
            r += scaled(d_phi(f, 1), one, tanh_b, 0, double(s));
            return scaled(std::move(r), one, one, s);
        }
        case Generator::A3: {
            auto r = scaled(d_beta(f, o, odd), cot, cosh_b, 0);
            r -= scaled(d_th(f), one, sinh_b, 0);
            return scaled(std::move(r), one, one, 0, -I);
        }
        case Generator::Lplus:
        case Generator::Lminus: {
            const int s = gen == Generator::Lplus ? 1 : -1;
            auto r = scaled(d_th(f), one, cosh_b, 0, double(s));
            r -= scaled(d_beta(f, o, odd), cot, sinh_b, 0, double(s));
            r += scaled(d_phi(f, 1), cot, sech_b, 0, I);
            return scaled(std::move(r), one, one, s);
        }
    }
    throw DomainError("unknown generator");
}

AngularGridFunction n2_raw(const AngularGridFunction& f, const OperatorOptions& o) {
    const auto& g = f.grid();
    auto r = d2_beta(f, o, odd);
    r += scaled(d_beta(f, o, odd), one, [&](int j) { return g.zeta(j); }, 0);
    r -= scaled(d_phi(f, 2), one, [&](int j) { return g.sech(j) * g.sech(j); }, 0);
    return r;
}

AngularGridFunction lambda_raw(const AngularGridFunction& f, const OperatorOptions& o) {
    const auto& g = f.grid();
    // sin^{1/2}(theta) = cos v on the mapped grid; g inherits the opposite theta parity.
    auto sqrt_sin = [&](int i) { return std::cos(g.v(i)); };
    const auto h = scaled(f, sqrt_sin, one, 0);
    constexpr int even = 1;
    auto r = scaled(d2_theta(h, o, even), one, one, 0, -1.0);
    r -= scaled(d_theta(h, o, even), [&](int i) { return g.xi(i) / g.sin_theta(i); }, one, 0);
    r -= scaled(h, one, one, 0, 0.75);
    auto n2h = n2_raw(h, o);
    n2h += scaled(h, one, one, 0, 0.25);
    r += scaled(std::move(n2h), [&](int i) { return 1.0 / (g.sin_theta(i) * g.sin_theta(i)); }, one, 0);
    return scaled(std::move(r), [&](int i) { return 1.0 / std::cos(g.v(i)); }, one, 0);
}

// Built on h = sin^{1/2}(theta) f like the direct form: the generators applied to f itself
// pass through intermediates that grow like sin^{-1/2}(theta) at the poles.
AngularGridFunction lambda_composed_raw(const AngularGridFunction& in, const OperatorOptions& o) {
    const auto& g = in.grid();
    const auto f = scaled(in, [&](int i) { return std::cos(g.v(i)); }, one, 0);
    auto G = [&](Generator gen, const AngularGridFunction& x) { return generator_raw(gen, x, o, true); };
    const auto lp = G(Generator::Lplus, f);
    const auto lm = G(Generator::Lminus, f);
    const auto hp = G(Generator::Hplus, f);
    const auto hm = G(Generator::Hminus, f);
    auto r = G(Generator::L3, G(Generator::L3, f));
    auto lsum = G(Generator::Lplus, lm);
    lsum += G(Generator::Lminus, lp);
    r += 0.5 * lsum;
    r -= G(Generator::A3, G(Generator::A3, f));
    auto hsum = G(Generator::Hplus, hm);
    hsum += G(Generator::Hminus, hp);
    r -= 0.5 * hsum;
    return scaled(std::move(r), [&](int i) { return 1.0 / std::cos(g.v(i)); }, one, 0);
}

AngularGridFunction n2_composed_raw(const AngularGridFunction& f, const OperatorOptions& o) {
    auto G = [&](Generator gen, const AngularGridFunction& x) { return generator_raw(gen, x, o); };
    auto r = G(Generator::L3, G(Generator::L3, f));
    auto hsum = G(Generator::Hplus, G(Generator::Hminus, f));
    hsum += G(Generator::Hminus, G(Generator::Hplus, f));
    r -= 0.5 * hsum;
    return r;
}

using RawOp = std::function<AngularGridFunction(const AngularGridFunction&, const OperatorOptions&)>;

AngularGridFunction checked(const RawOp& op, const AngularGridFunction& f,
                            const OperatorOptions& opts, const char* name) {
    OperatorOptions base = opts;
    base.tolerance.reset();
    auto r = op(f, base);
    if (opts.tolerance) {
        OperatorOptions coarse = base;
        coarse.stride *= 2;
        const auto r2 = op(f, coarse);
        auto diff = r;
        diff -= r2;
        double scale = angular_norm(r);
        if (!(scale > 0.0)) scale = angular_norm(f);
        const double est = scale > 0.0 ? angular_norm(diff) / (3.0 * scale) : 0.0;
        if (!(est <= *opts.tolerance))
            throw GridTooCoarse(std::string(name) + ": estimated relative truncation error " +
                                std::to_string(est) + " exceeds " + std::to_string(*opts.tolerance));
    }
    return r;
}

}  // namespace

AngularGridFunction apply_generator(Generator g, const AngularGridFunction& f,
                                    const OperatorOptions& opts) {
    return checked([g](const AngularGridFunction& x, const OperatorOptions& o) {
        return generator_raw(g, x, o);
    }, f, opts, to_string(g));
}

AngularGridFunction apply_N2(const AngularGridFunction& f, const OperatorOptions& opts) {
    return checked(n2_raw, f, opts, "N2");
}

AngularGridFunction apply_Lambda(const AngularGridFunction& f, const OperatorOptions& opts) {
    return checked(lambda_raw, f, opts, "Lambda");
}

AngularGridFunction apply_Lambda_composed(const AngularGridFunction& f,
                                          const OperatorOptions& opts) {
    return checked(lambda_composed_raw, f, opts, "Lambda (composed)");
}

AngularGridFunction apply_N2_composed(const AngularGridFunction& f, const OperatorOptions& opts) {
    return checked(n2_composed_raw, f, opts, "N2 (composed)");
}

double truncation_estimate(const RawOp& op, const AngularGridFunction& f,
                           const OperatorOptions& opts) {
    OperatorOptions base = opts;
    base.tolerance.reset();
    auto r = op(f, base);
    OperatorOptions coarse = base;
    coarse.stride *= 2;
    auto diff = r;
    diff -= op(f, coarse);
    const double scale = angular_norm(r);
    return scale > 0.0 ? angular_norm(diff) / (3.0 * scale) : 0.0;
}

complex angular_inner_product(const AngularGridFunction& f, const AngularGridFunction& g) {
    require_compatible(f, g);
    const auto& gr = f.grid();
    complex sum(0.0, 0.0);
    for (int i = 0; i < gr.n_theta(); ++i)
        for (int j = 0; j < gr.n_beta(); ++j) {
            complex line(0.0, 0.0);
            for (int k = 0; k < gr.n_phi(); ++k) line += std::conj(f(i, j, k)) * g(i, j, k);
            sum += gr.weight(i, j) * line;
        }
    return sum;
}

double angular_norm(const AngularGridFunction& f) {
    return std::sqrt(std::max(0.0, angular_inner_product(f, f).real()));
}

complex rayleigh_quotient(const AngularGridFunction& f, const AngularGridFunction& Af) {
    return angular_inner_product(f, Af) / angular_inner_product(f, f);
}

double residual_norm(const AngularGridFunction& f, const AngularGridFunction& Af, complex lambda) {
    auto r = Af;
    r -= lambda * f;
    return angular_norm(r) / angular_norm(f);
}

complex ladder_coefficient(int n, int k, const GridPtr& grid, const OperatorOptions& opts) {
    if (n < 1) throw IndexError("ladder coefficients need n >= 1");
    if (k < 0) throw IndexError("k must be non-negative");
    const auto lo = chi_state(grid, HyperangularState(n, k, n));
    const auto hi = chi_state(grid, HyperangularState(n, k + 1, n));
    const auto raised = apply_generator(Generator::Hplus, lo, opts);
    return angular_inner_product(hi, raised) / (angular_norm(hi) * angular_norm(lo));
}

complex lowering_coefficient(int n, int k, const GridPtr& grid, const OperatorOptions& opts) {
    if (n < 1) throw IndexError("ladder coefficients need n >= 1");
    if (k < 0) throw IndexError("k must be non-negative");
    const auto lo = chi_state(grid, HyperangularState(n, k, n));
    const auto hi = chi_state(grid, HyperangularState(n, k + 1, n));
    const auto lowered = apply_generator(Generator::Hminus, hi, opts);
    return angular_inner_product(lo, lowered) / (angular_norm(hi) * angular_norm(lo));
}

RichardsonEstimate make_richardson(complex fine, complex coarse) {
    return {fine, coarse, (4.0 * fine - coarse) / 3.0};
}

RichardsonEstimate rayleigh_richardson(const GridOperator& op, const AngularGridFunction& f,
                                       const OperatorOptions& opts) {
    OperatorOptions coarse = opts;
    coarse.stride = 2 * opts.stride;
    coarse.tolerance.reset();
    return make_richardson(rayleigh_quotient(f, op(f, opts)), rayleigh_quotient(f, op(f, coarse)));
}

RichardsonEstimate ladder_richardson(int n, int k, const GridPtr& grid, bool raising,
                                     const OperatorOptions& opts) {
    OperatorOptions coarse = opts;
    coarse.stride = 2 * opts.stride;
    coarse.tolerance.reset();
    if (raising)
        return make_richardson(ladder_coefficient(n, k, grid, opts),
                               ladder_coefficient(n, k, grid, coarse));
    return make_richardson(lowering_coefficient(n, k, grid, opts),
                           lowering_coefficient(n, k, grid, coarse));
}

complex ladder_coefficient_exact(int n, int k) {
    return I * std::sqrt(double(k + 1) * double(2 * n + k + 1));
}

complex lowering_coefficient_exact(int n, int k) { return -ladder_coefficient_exact(n, k); }

void export_csv(const AngularGridFunction& f, std::ostream& out,
                const std::vector<std::string>& metadata) {
    const auto& g = f.grid();
    for (const auto& line : metadata) out << "# " << line << '\n';
    out << "# grid " << g.n_theta() << 'x' << g.n_beta() << 'x' << g.n_phi() << ", monodromy "
        << (f.monodromy() == Monodromy::Antiperiodic ? "antiperiodic" : "periodic") << '\n';
    out << "theta,beta,phi,weight,re,im\n";
    for (int i = 0; i < g.n_theta(); ++i)
        for (int j = 0; j < g.n_beta(); ++j)
            for (int k = 0; k < g.n_phi(); ++k) {
                const complex z = f(i, j, k);
                out << io::format_double(g.theta(i)) << ',' << io::format_double(g.beta(j)) << ','
                    << io::format_double(g.phi(k)) << ',' << io::format_double(g.weight(i, j))
                    << ',' << io::format_double(z.real()) << ',' << io::format_double(z.imag())
                    << '\n';
            }
}

}  // namespace shp::hyperangular
