// Serial reference versus OpenMP kernels: recursion verification (parallel
// over expansion terms) and the Jones state sum (parallel over states).

#include <benchmark/benchmark.h>

#include "oracle.hpp"
#include "skeinrec/functors.hpp"
#include "skeinrec/io.hpp"

using namespace skeinrec;

namespace {

const char* const kLinks[] = {"hopf", "trefoil", "figure8"};

void BM_Verify(benchmark::State& state, Execution exec) {
  const FunctorSpec& spec = FunctorSpec::get(static_cast<FunctorId>(state.range(0)));
  const LinkEntry& link = *find_link(kLinks[state.range(1)]);
  for (auto _ : state) {
    const RecursionReport r = verify_recursion(spec, link.primary(), exec, link.name);
    if (!r.equal) state.SkipWithError("recursion identity failed");
    benchmark::DoNotOptimize(r.term_count);
  }
  state.SetLabel(spec.name() + "/" + link.name);
}

void BM_VerifySerial(benchmark::State& state) { BM_Verify(state, Execution::serial); }
void BM_VerifyParallel(benchmark::State& state) { BM_Verify(state, Execution::parallel); }

void verify_args(benchmark::internal::Benchmark* b) {
  for (int f = 0; f < 4; ++f)
    for (int l = 0; l < 3; ++l) b->Args({f, l});
  b->Unit(benchmark::kMillisecond);
}

// Closure of (s1 s2^-1)^k on 3 strands: 2k crossings.
MorseWord alternating_braid(int k) {
  BraidWord b{3, {}};
  for (int i = 0; i < k; ++i) {
    b.generators.push_back(1);
    b.generators.push_back(-2);
  }
  return braid_to_morse(b);
}

void BM_Oracle(benchmark::State& state, bool parallel) {
  const MorseWord w = alternating_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::state_counts(w, parallel));
  state.SetComplexityN(state.range(0));
}

void BM_OracleSerial(benchmark::State& state) { BM_Oracle(state, false); }
void BM_OracleParallel(benchmark::State& state) { BM_Oracle(state, true); }

}  // namespace

BENCHMARK(BM_VerifySerial)->Apply(verify_args);
BENCHMARK(BM_VerifyParallel)->Apply(verify_args);
BENCHMARK(BM_OracleSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
