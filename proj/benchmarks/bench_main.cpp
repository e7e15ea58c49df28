#include <benchmark/benchmark.h>

#include "tsallis/harness.hpp"
#include "tsallis/instance_gen.hpp"

namespace {

using namespace tsallis;

OperatorPair pair_of(Index dim) {
  return random_certified_pair(GenSpec{.dim = dim, .window = SpectralWindow(0.5, 4.0), .seed = 1,
                                       .tag = "bench", .constraint = Constraint::kCertifiedWindow});
}

void BM_SpectralDecompose(benchmark::State& state) {
  const SpdMatrix a = random_spd(GenSpec{.dim = state.range(0), .seed = 1, .tag = "bench"});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpectralDecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(32);

void BM_TsallisEntropy(benchmark::State& state) {
  const OperatorPair p = pair_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tsallis_entropy(p, 0.5));
}
BENCHMARK(BM_TsallisEntropy)->Arg(2)->Arg(4)->Arg(8)->Arg(32);

void BM_IntegralMiddleTerm(benchmark::State& state) {
  const Index dim = state.range(0);
  const OperatorPair p = pair_of(dim);
  const PositiveMapSpec phi = random_map(dim, MapKind::kUnitaryMixture, 1);
  const int nodes = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(integral_middle_term(p, 0.5, phi, nodes));
}
BENCHMARK(BM_IntegralMiddleTerm)->Args({4, 32})->Args({8, 32})->Args({8, 64});

void BM_CheckCase(benchmark::State& state) {
  const auto id = static_cast<InequalityId>(state.range(0));
  const InequalityCase c = generate_case(CaseRequest{
      .id = id, .dim = 4, .v = info(id).schema.v ? std::optional(0.5) : std::nullopt, .seed = 1});
  state.SetLabel(std::string(to_string(id)));
  for (auto _ : state) benchmark::DoNotOptimize(check_case(c));
}
BENCHMARK(BM_CheckCase)
    ->Arg(static_cast<int>(InequalityId::kKnownBoundsT))
    ->Arg(static_cast<int>(InequalityId::kXiPsiSandwich))
    ->Arg(static_cast<int>(InequalityId::kMonoRefined))
    ->Arg(static_cast<int>(InequalityId::kRatioK));

}  // namespace

BENCHMARK_MAIN();
