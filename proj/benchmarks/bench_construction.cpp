#include <benchmark/benchmark.h>

#include <random>

#include "hyperu/applications.hpp"
#include "hyperu/essential.hpp"

namespace {

using namespace hyperu;

void BM_BuildSpecial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto p = sample_essential(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_special(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildSpecial)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_BuildNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto p = sample_naive(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_su(naive_to_ck(p)));
}
BENCHMARK(BM_BuildNaive)->RangeMultiplier(2)->Range(2, 32);

void BM_UnitarityResidual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto u = build_special(sample_essential(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(unitarity_residual(u));
}
BENCHMARK(BM_UnitarityResidual)->RangeMultiplier(2)->Range(2, 32);

void BM_CompleteBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  ComplexVector v(n);
  std::normal_distribution<double> g;
  for (auto& z : v) z = {g(rng), g(rng)};
  const auto psi = PureState::normalized(v);
  const auto free = FreeParams::sample(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(complete_basis(psi, free));
}
BENCHMARK(BM_CompleteBasis)->RangeMultiplier(2)->Range(2, 32);

void BM_EpBuildQubits(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<EssentialParams> parties;
  for (int m = 0; m < state.range(0); ++m) parties.push_back(sample_essential(2, rng));
  const EPSpec spec(parties, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(ep_build(spec));
}
BENCHMARK(BM_EpBuildQubits)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
