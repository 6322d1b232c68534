// Microbenchmarks for the exact engines: policy decoding, identity sweeps,
// exact averages, and the realizability searches.  Everything here is small
// enough to run in milliseconds; the point is tracking relative regressions,
// not absolute speed.

#include <benchmark/benchmark.h>

#include <nfl/algorithms.hpp>
#include <nfl/counterexamples.hpp>
#include <nfl/enumeration.hpp>
#include <nfl/metrics.hpp>
#include <nfl/verifier.hpp>

#include <vector>

namespace {

using nfl::AlgKind;
using nfl::BigInt;
using nfl::Measure;
using nfl::MeasureKind;
using nfl::Orientation;
using nfl::Rat;
using nfl::SearchSpace;
using nfl::Tour;
using nfl::TspConstraint;
using nfl::TspInstance;
using nfl::ValueTable;

TspInstance ring_instance() {
  const std::vector<Rat> by_gap{0, 1, 2, 9, 2, 1};
  std::vector<std::vector<Rat>> m(6, std::vector<Rat>(6, Rat(0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m[i][j] = by_gap[static_cast<std::size_t>((j - i + 6) % 6)];
  return TspInstance(6, m);
}

void BM_PolicyDecode(benchmark::State& state) {
  nfl::PolicyEnumeration policies(SearchSpace::plain(4),
                                  {Rat(0), Rat(1), Rat(2)});
  BigInt index(12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(policies.at(index));
  }
}
BENCHMARK(BM_PolicyDecode);

void BM_NflSweepCube(benchmark::State& state) {
  const SearchSpace space = SearchSpace::plain(3);
  const std::vector<Rat> codomain{0, 1};
  const Measure best2(MeasureKind::best_so_far, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nfl::verify_nfl(space, codomain, Orientation::maximize, best2));
  }
}
BENCHMARK(BM_NflSweepCube);

void BM_SnflSweepClass(benchmark::State& state) {
  const nfl::FunctionSet cls =
      nfl::cup_class(ValueTable({0, 1, 2}, Orientation::maximize));
  const Measure best2(MeasureKind::best_so_far, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfl::verify_snfl(cls, best2));
  }
}
BENCHMARK(BM_SnflSweepClass);

void BM_ExactClimbAverage(benchmark::State& state) {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  const Measure best4(MeasureKind::best_so_far, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nfl::exact_local_search_average(AlgKind::best_first, space, f, best4, 4));
  }
}
BENCHMARK(BM_ExactClimbAverage);

void BM_ExactRandomSearchAverage(benchmark::State& state) {
  const SearchSpace space = SearchSpace::bitstrings(4);
  const ValueTable f = nfl::onemax_table(4);
  const Measure best8(MeasureKind::best_so_far, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nfl::exact_random_search_average(space, f, best8, 8));
  }
}
BENCHMARK(BM_ExactRandomSearchAverage);

void BM_Max2SatSearch(benchmark::State& state) {
  const ValueTable permuted({0, 1, 1, 0, 1, 1, 1, 1}, Orientation::maximize);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfl::max2sat_realizable(permuted, 3));
  }
}
BENCHMARK(BM_Max2SatSearch);

void BM_TourTableElimination(benchmark::State& state) {
  const TspInstance inst = ring_instance();
  const auto tours = nfl::all_canonical_tours(6);
  std::vector<TspConstraint> constraints;
  for (const Tour& t : tours)
    constraints.push_back({t, nfl::tour_length(inst, t)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfl::tsp_realizable(constraints, 6));
  }
}
BENCHMARK(BM_TourTableElimination);

void BM_StructureReport(benchmark::State& state) {
  const SearchSpace space = SearchSpace::bitstrings(4);
  const ValueTable f = nfl::onemax_table(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfl::structure_report(space, f));
  }
}
BENCHMARK(BM_StructureReport);

}  // namespace

BENCHMARK_MAIN();
