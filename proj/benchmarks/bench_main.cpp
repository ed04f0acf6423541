#include <benchmark/benchmark.h>

#include <string>

#include "khtight/classical.hpp"
#include "khtight/homology.hpp"
#include "khtight/khovanov.hpp"
#include "khtight/lattice.hpp"
#include "khtight/verdict.hpp"

namespace {

using namespace khtight;

BraidWord e125(int r) {
  std::string s;
  for (int k = 0; k < r; ++k) s += "-1,";
  return parse_braid(s + "2,1,1,1,2");
}

void BM_BuildReducedComplex(benchmark::State& state) {
  auto d = closure_diagram(e125(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto c = build_complex(d, Flavor::khovanov, Reduction::reduced);
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_BuildReducedComplex)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ScanReduce(benchmark::State& state) {
  auto d = closure_diagram(e125(static_cast<int>(state.range(0))));
  auto c = build_complex(d, Flavor::khovanov, Reduction::reduced);
  for (auto _ : state) {
    auto r = scan_reduce(c.complex);
    benchmark::DoNotOptimize(r.reduced.size());
  }
}
BENCHMARK(BM_ScanReduce)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SparseHomology(benchmark::State& state) {
  auto d = closure_diagram(e125(static_cast<int>(state.range(0))));
  auto c = build_complex(d, Flavor::khovanov, Reduction::reduced);
  for (auto _ : state) benchmark::DoNotOptimize(homology(c.complex).total_rank());
}
BENCHMARK(BM_SparseHomology)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SInvariant(benchmark::State& state) {
  auto w = e125(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_invariant(w));
}
BENCHMARK(BM_SInvariant)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Verdict(benchmark::State& state) {
  auto w = e125(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tightness_verdict(w).verdict);
}
BENCHMARK(BM_Verdict)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  auto d = closure_diagram(e125(8));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(d));
}
BENCHMARK(BM_Determinant);

void BM_LatticeEnumeration(benchmark::State& state) {
  auto g = plumbing_e141();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(g, 10).size());
}
BENCHMARK(BM_LatticeEnumeration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
