#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include "shp/angular_grid.hpp"
#include "shp/induced.hpp"
#include "shp/radial.hpp"
#include "shp/specfun.hpp"

namespace ha = shp::hyperangular;
namespace ind = shp::induced;
namespace rd = shp::radial;

static void BM_radial_coulomb(benchmark::State& state) {
    const auto u = rd::UnitSystem::atomic();
    rd::RadialGridParams grid;
    grid.points = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rd::solve_radial_numeric(rd::Coulomb{1, 1.0}, 0, 5, 1.0, u, grid));
}
BENCHMARK(BM_radial_coulomb)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_apply_N2(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto f = ha::chi_state(ha::make_grid(n), ha::HyperangularState(2, 1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(ha::apply_N2(f));
    state.SetItemsProcessed(state.iterations() * std::int64_t(n) * n * n);
}
BENCHMARK(BM_apply_N2)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_apply_Lambda(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto f = ha::product_state(ha::make_grid(n), ha::HyperangularState(1, 0, 2));
    for (auto _ : state) benchmark::DoNotOptimize(ha::apply_Lambda(f));
}
BENCHMARK(BM_apply_Lambda)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ladder_richardson(benchmark::State& state) {
    const auto grid = ha::make_grid(128, 128, 16);
    for (auto _ : state) benchmark::DoNotOptimize(ha::ladder_richardson(2, 1, grid));
}
BENCHMARK(BM_ladder_richardson)->Unit(benchmark::kMillisecond);

static void BM_assoc_legendre(benchmark::State& state) {
    const shp::specfun::LegendreOrderDegree idx(int(state.range(0)), 3);
    double z = 0.0;
    for (auto _ : state) {
        z = z > 0.5 ? 0.0 : z + 1e-7;
        benchmark::DoNotOptimize(shp::specfun::assoc_legendre_p(idx, 0.3 + z));
    }
}
BENCHMARK(BM_assoc_legendre)->Arg(4)->Arg(40);

static void BM_gauss_jacobi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(shp::specfun::gauss_jacobi(int(state.range(0)), -0.9, -0.9));
}
BENCHMARK(BM_gauss_jacobi)->Arg(32)->Arg(128);

static void BM_little_group(benchmark::State& state) {
    const auto L = ind::boost({0.3, -0.2, 0.5}) * ind::rotation({1.0, 2.0, 0.5}, 0.7);
    const auto m = ind::SpacelikeDirection::from_angles(0.4, 1.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(ind::little_group_element(L, m));
}
BENCHMARK(BM_little_group);

static void BM_member_norm(benchmark::State& state) {
    const auto psi = ind::product_wavefunction([](double r) { return 2.0 * std::exp(-r); },
                                               ha::HyperangularState(1, 1, 1));
    ind::OrbitQuadrature q;
    q.rho_nodes = 12;
    q.theta_nodes = 12;
    q.beta_step = 0.25;
    q.phi_nodes = 32;
    for (auto _ : state) benchmark::DoNotOptimize(ind::member_norm(psi, q));
}
BENCHMARK(BM_member_norm)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
