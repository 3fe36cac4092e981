// Serial reference kernels against their OpenMP counterparts.

#include "parinv/kernels.hpp"
#include "parinv/verification.hpp"

#include <benchmark/benchmark.h>

using namespace parinv;

namespace {

FlagShape shape_for(int64_t id) {
  switch (id) {
    case 0: return make_shape(GroupKind::GL, 5, {1, 2, 2});
    case 1: return make_shape(GroupKind::O, 6, {2, 2, 2});
    default: return make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1});
  }
}

template <bool Parallel>
void BM_Invariance(benchmark::State& state) {
  const FlagShape s = shape_for(state.range(0));
  const auto descs = invariant_family(s);
  for (auto _ : state) {
    auto out = Parallel ? invariance_trials_parallel(s, descs, Seed{1, 0}, 32, kDefaultBound)
                        : invariance_trials_serial(s, descs, Seed{1, 0}, 32, kDefaultBound);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(to_string(s.kind()) + std::to_string(s.n()));
}

template <bool Parallel>
void BM_Jacobian(benchmark::State& state) {
  const FlagShape s = shape_for(state.range(0));
  CounterRng rng(Seed{2, 0});
  const RationalMatrix x = sample_generic_point(s, rng, kDefaultBound).matrix();
  const auto descs = invariant_family(s);
  const auto dirs = tangent_basis(s, x);
  for (auto _ : state) {
    auto jac = Parallel ? jacobian_parallel(descs, x, dirs) : jacobian_serial(descs, x, dirs);
    benchmark::DoNotOptimize(jac);
  }
  state.SetLabel(to_string(s.kind()) + std::to_string(s.n()));
}

}  // namespace

BENCHMARK(BM_Invariance<false>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Invariance<true>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Jacobian<false>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Jacobian<true>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
