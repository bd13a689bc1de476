#include <benchmark/benchmark.h>

#include "dkg/coulomb.hpp"
#include "dkg/oracle.hpp"
#include "dkg/oscillator.hpp"
#include "dkg/scattering.hpp"
#include "dkg/specfun.hpp"

using namespace dkg;

static void BM_LogGamma(benchmark::State& state) {
  specfun::Complex z{0.5, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::log_gamma(z));
    z += specfun::Complex{0.0, 1e-3};
  }
}
BENCHMARK(BM_LogGamma);

static void BM_KummerPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double z = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::kummer_m(-n, 6.7, z));
    z += 1e-6;
  }
}
BENCHMARK(BM_KummerPolynomial)->Arg(2)->Arg(10)->Arg(40);

static void BM_KummerSeries(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_m(0.7, 2.3, z));
}
BENCHMARK(BM_KummerSeries)->Arg(1)->Arg(20)->Arg(60);

static void BM_OscillatorEigensolve(benchmark::State& state) {
  const oscillator::OscillatorSpec spec{DunklConfig::uniform(3, 0.4), AngularState::uniform(3, 1), 1.0, 1.0};
  const auto problem = oscillator::radial_problem(spec, {12.0, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::eigensolve(problem, 3));
}
BENCHMARK(BM_OscillatorEigensolve)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_CoulombLevel(benchmark::State& state) {
  const coulomb::CoulombSpec spec{DunklConfig::uniform(3, 0.4), AngularState::uniform(3, 1), 1.0, 1.0};
  const auto problem = coulomb::oracle_problem(spec);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::coulomb_level(problem, 1));
}
BENCHMARK(BM_CoulombLevel)->Unit(benchmark::kMillisecond);

static void BM_PairProbability(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scattering::pair_probability(1.3, x));
    x += 1e-6;
  }
}
BENCHMARK(BM_PairProbability);

static void BM_Bogoliubov(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scattering::bogoliubov(2.0, 1.3));
}
BENCHMARK(BM_Bogoliubov);

BENCHMARK_MAIN();
