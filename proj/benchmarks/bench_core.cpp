#include <benchmark/benchmark.h>

#include "cg/codes.hpp"
#include "cg/groupoid.hpp"

using namespace cg;

namespace {

void BM_HoleStabilizerP3(benchmark::State& state) {
  const Design d = build_p3();
  const PairIndex index(d);
  for (auto _ : state) benchmark::DoNotOptimize(hole_stabilizer(index, 0).order());
}
BENCHMARK(BM_HoleStabilizerP3)->Unit(benchmark::kMillisecond);

void BM_MoveGroupSp(benchmark::State& state) {
  const Design d = build_sp_design(3, state.range(0) != 0);
  const PairIndex index(d);
  for (auto _ : state) benchmark::DoNotOptimize(move_group(index).order());
}
BENCHMARK(BM_MoveGroupSp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IncidenceRank(benchmark::State& state) {
  const Design d = state.range(0) == 0 ? build_affine_design(3) : build_sp_design(4, true);
  for (auto _ : state) benchmark::DoNotOptimize(incidence_code(d).dimension());
}
BENCHMARK(BM_IncidenceRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CosetAnalysis(benchmark::State& state) {
  const LinearCode c = incidence_code(state.range(0) == 0 ? build_affine_design(3) : build_sp_design(4, true));
  for (auto _ : state) benchmark::DoNotOptimize(coset_analysis(c).covering_radius());
}
BENCHMARK(BM_CosetAnalysis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
