#include <benchmark/benchmark.h>

#include "mukai/mukai.hpp"

using namespace mukai;

namespace {

void BM_Factor(benchmark::State& state) {
  Int const m = state.range(0);
  VPerpModel const model(m);
  GeneratorFamily const family(m);
  Rng rng(17);
  std::vector<Isometry> inputs;
  for (int i = 0; i < 16; ++i) inputs.emplace_back(mukai_lattice(), family.sample_word(rng, 6).product());
  FactorOptions options;
  options.normalize = state.range(1) != 0;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(model, inputs[i++ % inputs.size()], options));
}
BENCHMARK(BM_Factor)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_SmithVPerp(benchmark::State& state) {
  IntMatrix const gram = VPerpModel(state.range(0)).lattice()->gram();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(gram));
}
BENCHMARK(BM_SmithVPerp)->Arg(1)->Arg(6)->Arg(210)->Unit(benchmark::kMicrosecond);

void BM_OrientationChar(benchmark::State& state) {
  auto const L = mukai_lattice();
  Rng rng(5);
  Isometry g = Isometry::identity(L);
  for (int i = 0; i < 4; ++i) g = g * reflection(L, random_vector_with_norm(*L, rng.coin() ? 2 : -2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(covariance(g));
}
BENCHMARK(BM_OrientationChar)->Unit(benchmark::kMicrosecond);

void BM_DiscGroupOrder(benchmark::State& state) {
  std::int64_t const m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(disc_group_order(m));
}
BENCHMARK(BM_DiscGroupOrder)->Arg(30)->Arg(4620)->Arg(30030);

}  // namespace

BENCHMARK_MAIN();
