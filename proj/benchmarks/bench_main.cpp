#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "loewner/catalog.hpp"
#include "loewner/energy.hpp"
#include "loewner/maps.hpp"
#include "loewner/tracer.hpp"
#include "loewner/zipper.hpp"

using namespace loewner;

static void BM_SlitMapOut(benchmark::State& state) {
  const TiltedSlit slit(0.7, 0.01);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> z(1024);
  for (auto& p : z) p = Complex(u(rng), std::abs(u(rng)) + 0.1);
  for (auto _ : state) {
    for (const Complex& p : z) benchmark::DoNotOptimize(slit.map_out(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(z.size()));
}
BENCHMARK(BM_SlitMapOut);

static void BM_TraceCurve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto W = DrivingFunction::sample([](double t) { return std::sin(3 * t); }, 1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(trace_curve(W, static_cast<int>(4 * n)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceCurve)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_ComputeDriving(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CurveSamples eta = attach_and_lift(catalog::tangential_circle_arc(1.0, 1.0, n));
  for (auto _ : state) benchmark::DoNotOptimize(compute_driving(eta));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeDriving)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_LoopEnergyCircle(benchmark::State& state) {
  const CurveSamples loop = catalog::circle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(loop_energy(loop, 0));
}
BENCHMARK(BM_LoopEnergyCircle)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
