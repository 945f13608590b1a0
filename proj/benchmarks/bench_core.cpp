#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "swlw/entropy_pairs.hpp"
#include "swlw/euler_limit.hpp"
#include "swlw/galerkin.hpp"
#include "swlw/spectral.hpp"

using namespace swlw;

namespace {

SolverConfig smooth(int n) {
  SolverConfig c;
  c.n = n;
  c.initial.profile = "smooth-periodic";
  return c;
}

void BM_AssembleRhs(benchmark::State& st) {
  const GalerkinSolver solver(smooth(static_cast<int>(st.range(0))));
  const GalerkinState s = solver.initial_state();
  for (auto _ : st) benchmark::DoNotOptimize(solver.assemble_rhs(s));
}
BENCHMARK(BM_AssembleRhs)->Arg(16)->Arg(64)->Arg(128);

void BM_Step(benchmark::State& st) {
  const GalerkinSolver solver(smooth(static_cast<int>(st.range(0))));
  const GalerkinState s = solver.initial_state();
  for (auto _ : st) benchmark::DoNotOptimize(solver.step(s));
}
BENCHMARK(BM_Step)->Arg(64);

void BM_CosineTransform(benchmark::State& st) {
  const SpectralGrid g(static_cast<int>(st.range(0)), 1.0);
  std::vector<double> f(g.M() + 1);
  for (int j = 0; j <= g.M(); ++j) f[j] = std::exp(-g.nodes()[j]);
  for (auto _ : st) benchmark::DoNotOptimize(g.cosine_transform(f));
}
BENCHMARK(BM_CosineTransform)->Arg(192)->Arg(384);

void BM_SineSynthesis(benchmark::State& st) {
  const SpectralGrid g(static_cast<int>(st.range(0)), 1.0);
  const std::vector<double> c(g.M() / 3, 0.01);
  for (auto _ : st) benchmark::DoNotOptimize(g.synth_sine(c));
}
BENCHMARK(BM_SineSynthesis)->Arg(192)->Arg(384);

void BM_EntropyPairPolynomial(benchmark::State& st) {
  const auto spec = EntropyPairSpec::make(Zeta::builtin("s2"), GasParams{});
  double rho = 0.5;
  for (auto _ : st) {
    benchmark::DoNotOptimize(entropy_pair(rho, 0.3 * rho, spec));
    rho = rho < 3 ? rho + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_EntropyPairPolynomial);

void BM_EntropyPairBump(benchmark::State& st) {
  const auto spec = EntropyPairSpec::make(Zeta::bump(-1, 1), GasParams{});
  double rho = 0.5;
  for (auto _ : st) {
    benchmark::DoNotOptimize(entropy_pair(rho, 0.3 * rho, spec));
    rho = rho < 3 ? rho + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_EntropyPairBump);

void BM_EulerStep(benchmark::State& st) {
  const EulerParams p;
  const EulerState s = dam_break(static_cast<int>(st.range(0)), 2.0, 1.0, 0.0);
  const double dt = 0.9 * stable_dt(s, p);
  for (auto _ : st) benchmark::DoNotOptimize(euler_step(s, dt, p));
}
BENCHMARK(BM_EulerStep)->Arg(400)->Arg(2048);

void BM_NlsStep(benchmark::State& st) {
  NlsState s;
  const int n = static_cast<int>(st.range(0));
  s.psi.resize(n + 1);
  for (int j = 0; j < n; ++j) s.psi[j] = 0.5 * std::sin(std::numbers::pi * j / n);
  for (auto _ : st) benchmark::DoNotOptimize(nls_step(s, 1e-4));
}
BENCHMARK(BM_NlsStep)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
