// Serial reference loops vs the OpenMP kernels, plus end-to-end spectral operations.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "scalelab/evolver.hpp"
#include "scalelab/fluid.hpp"
#include "scalelab/heat_filter.hpp"
#include "scalelab/kernels.hpp"

namespace k = scalelab::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <bool Parallel>
void BM_axpy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_vec(n, 1);
  auto y = random_vec(n, 2);
  for (auto _ : state) {
    if constexpr (Parallel) k::axpy(1e-9, x, y);
    else k::serial::axpy(1e-9, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * n * 3 * sizeof(double)));
}

template <bool Parallel>
void BM_sum_squares(benchmark::State& state) {
  const auto x = random_vec(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::sum_squares(x) : k::serial::sum_squares(x));
  }
}

template <bool Parallel>
void BM_scale_modes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<k::cplx> c(n, k::cplx(1.0, 0.5));
  const std::vector<double> m(n, 1.0);
  for (auto _ : state) {
    if constexpr (Parallel) k::scale_modes(c, m);
    else k::serial::scale_modes(c, m);
    benchmark::DoNotOptimize(c.data());
  }
}

void BM_heat_propagate(benchmark::State& state) {
  const scalelab::Grid g = scalelab::make_grid(2, static_cast<int>(state.range(0)));
  const scalelab::Field f = scalelab::sample(g, [](double x, double y) { return std::sin(x) * std::cos(3 * y); });
  for (auto _ : state) benchmark::DoNotOptimize(scalelab::heat_propagate(f, 0.01));
}

void BM_rk4_step(benchmark::State& state) {
  scalelab::RunConfig c;
  c.grid = static_cast<int>(state.range(0));
  c.initial.name = "random";
  const scalelab::Field v = scalelab::initial_velocity(c);
  const scalelab::EvolutionState s{0.0, v, scalelab::Field(v.grid(), 2), c.eta, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalelab::step_rk4(s, 1e-3, {scalelab::Closure::helmholtz, true, nullptr}));
  }
}

}  // namespace

BENCHMARK(BM_axpy<false>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_axpy<true>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_sum_squares<false>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_sum_squares<true>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_scale_modes<false>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_scale_modes<true>)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_heat_propagate)->Arg(64)->Arg(256);
BENCHMARK(BM_rk4_step)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
