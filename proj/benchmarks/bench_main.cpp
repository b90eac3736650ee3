#include "ddlab/pipeline.hpp"
#include "ddlab/random_complex.hpp"

#include <benchmark/benchmark.h>

using namespace ddlab;

namespace {

DoubleComplex load(const char* file) { return load_input(std::filesystem::path(DDLAB_BENCH_CORPUS) / file).complex; }

void BM_Table(benchmark::State& state, const char* file) {
  const DoubleComplex dc = load(file);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_table(dc));
}
BENCHMARK_CAPTURE(BM_Table, iwasawa, "iwasawa.se")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Table, sl2c, "sl2c.se")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Table, torus3, "torus3.se")->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const LoadedInput in = load_input(std::filesystem::path(DDLAB_BENCH_CORPUS) / "iwasawa.se");
  for (auto _ : state) benchmark::DoNotOptimize(analyze(in));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_FuzzInstance(benchmark::State& state) {
  const auto budget = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const DoubleComplex dc = random_complex(++seed, budget);
    benchmark::DoNotOptimize(fuzz_instance(dc, seed));
  }
}
BENCHMARK(BM_FuzzInstance)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SubspaceOps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ScalarRng rng(42);
  Matrix a(n, n / 2), b(n, n / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n / 2; ++j) {
      a(i, j) = rng.any();
      b(i, j) = rng.any();
    }
  const Subspace sa = image(a), sb = image(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subspace_sum(sa, sb));
    benchmark::DoNotOptimize(subspace_intersect(sa, sb));
  }
}
BENCHMARK(BM_SubspaceOps)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
