#include <benchmark/benchmark.h>

#include <numbers>

#include "dtqw/kernels.hpp"
#include "dtqw/sequences.hpp"

namespace {

const dtqw::EvolutionSequence& sequence(int which) {
  static const dtqw::EvolutionSequence seqs[] = {dtqw::parse_sequence("4: H"), dtqw::parse_sequence("8: H H X"),
                                                 dtqw::parse_sequence("5: C")};
  return seqs[which];
}

void BM_ThetaAverageSerial(benchmark::State& state) {
  const auto& seq = sequence(static_cast<int>(state.range(0)));
  const int t_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtqw::kernels::theta_average_series_serial(seq, std::numbers::pi / 2, t_max));
  }
  state.SetItemsProcessed(state.iterations() * t_max);
}

void BM_ThetaAverageOmp(benchmark::State& state) {
  const auto& seq = sequence(static_cast<int>(state.range(0)));
  const int t_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtqw::kernels::theta_average_series_omp(seq, std::numbers::pi / 2, t_max));
  }
  state.SetItemsProcessed(state.iterations() * t_max);
}

void BM_ReturnProbability(benchmark::State& state) {
  const auto& seq = sequence(static_cast<int>(state.range(0)));
  const int t_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtqw::kernels::return_probability_series(seq, {0.0, 0.0}, t_max));
  }
  state.SetItemsProcessed(state.iterations() * t_max);
}

void args(benchmark::internal::Benchmark* b) {
  for (int s : {0, 1, 2}) {
    for (int t : {30, 200, 1000}) b->Args({s, t});
  }
}

}  // namespace

BENCHMARK(BM_ThetaAverageSerial)->Apply(args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ThetaAverageOmp)->Apply(args)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_ReturnProbability)->Apply(args)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
