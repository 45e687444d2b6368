#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "dmt/cancel.hpp"
#include "dmt/corpus.hpp"
#include "dmt/morse.hpp"

namespace {

struct Workload {
  dmt::SimplicialComplex complex;
  dmt::DiscreteVectorField field;
};

// Matching complex of K_n with a greedy gradient field: many critical cells and
// branching trajectories.
const Workload& matching_workload(int n) {
  static std::map<int, Workload> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Workload w{dmt::matching_complex(n), {}};
    std::mt19937_64 rng(2024);
    w.field = dmt::greedy_gradient_field(w.complex, rng, 70);
    it = cache.emplace(n, std::move(w)).first;
  }
  return it->second;
}

void BM_MorseAssembly(benchmark::State& state, dmt::Execution exec) {
  const auto& w = matching_workload(static_cast<int>(state.range(0)));
  const dmt::Matching m(w.complex, w.field);
  for (auto _ : state) benchmark::DoNotOptimize(dmt::morse_complex(m, exec));
  state.counters["cells"] = static_cast<double>(w.complex.size());
}

void BM_MorseSerial(benchmark::State& state) { BM_MorseAssembly(state, dmt::Execution::serial); }
void BM_MorseParallel(benchmark::State& state) { BM_MorseAssembly(state, dmt::Execution::parallel); }

struct CancelCase {
  dmt::MorseComplexData data;
  dmt::CancellablePair pair;
};

CancelCase first_cancellation(const Workload& w) {
  const dmt::Matching m(w.complex, w.field);
  for (int k = 1; k <= w.complex.dim(); ++k) {
    auto pairs = dmt::find_cancellable_pairs(m, k);
    if (!pairs.empty()) return {dmt::morse_complex(m), pairs.front()};
  }
  return {dmt::morse_complex(m), {}};
}

void BM_CancelFastUpdate(benchmark::State& state) {
  const auto& w = matching_workload(static_cast<int>(state.range(0)));
  const auto c = first_cancellation(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmt::fast_cancel(c.data, c.pair.sigma0.label(), c.pair.tau0.label(), c.pair.k()));
  }
}

void BM_CancelReenumerate(benchmark::State& state) {
  const auto& w = matching_workload(static_cast<int>(state.range(0)));
  const auto c = first_cancellation(w);
  const dmt::Matching v(w.complex, w.field);
  const auto field = dmt::cancel_pair(v, c.pair);
  for (auto _ : state) {
    const dmt::Matching m(w.complex, field);
    benchmark::DoNotOptimize(dmt::morse_complex(m, dmt::Execution::serial));
  }
}

}  // namespace

BENCHMARK(BM_MorseSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MorseParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CancelFastUpdate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CancelReenumerate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
