#include <doctest.h>

#include <nfl/algorithms.hpp>
#include <nfl/errors.hpp>
#include <nfl/measure.hpp>

#include <algorithm>
#include <set>
#include <vector>

using nfl::AlgKind;
using nfl::Lcg64;
using nfl::Measure;
using nfl::MeasureKind;
using nfl::Orientation;
using nfl::Rat;
using nfl::SearchSpace;
using nfl::SeededAlgorithm;
using nfl::TraceRecord;
using nfl::ValueTable;

TEST_CASE("the generator is pinned to its reference sequence") {
  Lcg64 a(42);
  CHECK(a.next() == 1220265334u);
  CHECK(a.next() == 484179026u);
  CHECK(a.next() == 886563538u);
  CHECK(a.next() == 1353769503u);
  Lcg64 b(0);
  CHECK(b.next() == 167951807u);

  Lcg64 c(7);
  for (int i = 0; i < 100; ++i) {
    const int v = c.below(5);
    CHECK(v >= 0);
    CHECK(v < 5);
  }
  CHECK_THROWS_AS(c.below(0), nfl::Error);
}

TEST_CASE("seeded runs are deterministic non-repeating visits") {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  for (const AlgKind kind :
       {AlgKind::random_search, AlgKind::best_first, AlgKind::worst_first}) {
    const SeededAlgorithm alg{kind, 99};
    const TraceRecord first = nfl::run_algorithm(alg, space, f, 8);
    const TraceRecord again = nfl::run_algorithm(alg, space, f, 8);
    REQUIRE(first.length() == 8);
    std::set<int> visited;
    for (std::size_t i = 0; i < first.steps.size(); ++i) {
      CHECK(first.steps[i].point == again.steps[i].point);
      visited.insert(first.steps[i].point);
      CHECK(f.at(first.steps[i].point) == first.steps[i].value);
    }
    CHECK(visited.size() == 8); // a full-budget run is a permutation
  }
}

TEST_CASE("local search needs a neighborhood, random search does not") {
  const ValueTable f({Rat(0), Rat(1), Rat(2)}, Orientation::maximize);
  const SearchSpace bare = SearchSpace::plain(3);
  CHECK_NOTHROW(nfl::run_algorithm({AlgKind::random_search, 1}, bare, f, 3));
  CHECK_THROWS_AS(nfl::run_algorithm({AlgKind::best_first, 1}, bare, f, 3),
                  nfl::Error);
}

TEST_CASE("exact random-search averages match hand-built subset sums") {
  const SearchSpace space = SearchSpace::plain(8);
  const ValueTable f = nfl::onemax_table(3);
  // best value among 2 of 8 draws, averaged over all 28 unordered pairs
  CHECK(nfl::exact_random_search_average(
            space, f, Measure(MeasureKind::best_so_far, 2), 8) == Rat(57, 28));
  // mean of 2 draws: every point appears equally often, so it is the table mean
  CHECK(nfl::exact_random_search_average(
            space, f, Measure(MeasureKind::mean_of_trace, 2), 8) == Rat(3, 2));
  // horizons past the budget clamp to u = m, here the whole space
  CHECK(nfl::exact_random_search_average(
            space, f, Measure(MeasureKind::best_so_far, 100), 8) == Rat(3));
  // the subset count guard refuses astronomically many combinations
  const ValueTable flat(std::vector<Rat>(40, Rat(0)), Orientation::maximize);
  CHECK_THROWS_WITH_AS(
      nfl::exact_random_search_average(SearchSpace::plain(40), flat,
                                       Measure(MeasureKind::best_so_far, 20), 40),
      doctest::Contains("subsets"), nfl::Error);
}

TEST_CASE("exact local-search average reproduces the frozen hill-climb value") {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  CHECK(nfl::exact_local_search_average(AlgKind::best_first, space, f,
                                        Measure(MeasureKind::best_so_far, 4),
                                        4) == Rat(5, 2));
  CHECK_THROWS_AS(nfl::exact_local_search_average(
                      AlgKind::random_search, space, f,
                      Measure(MeasureKind::best_so_far, 4), 4),
                  nfl::Error);
}

TEST_CASE("seed averaging matches the exact engines and plain means") {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  const Measure best4(MeasureKind::best_so_far, 4);

  CHECK(nfl::seed_average(AlgKind::best_first, space, f, best4,
                          nfl::ExhaustiveSeeds{}, 4) == Rat(5, 2));
  CHECK(nfl::seed_average(AlgKind::random_search, space, f, best4,
                          nfl::ExhaustiveSeeds{}, 4) ==
        nfl::exact_random_search_average(space, f, best4, 4));

  const std::vector<std::uint64_t> seeds{1, 2, 3};
  Rat total(0);
  for (const std::uint64_t s : seeds) {
    const TraceRecord trace =
        nfl::run_algorithm({AlgKind::random_search, s}, space, f, 4);
    total += nfl::apply_measure(best4, trace, f.orientation);
  }
  CHECK(nfl::seed_average(AlgKind::random_search, space, f, best4, seeds, 4) ==
        total / 3);

  CHECK_THROWS_AS(nfl::seed_average(AlgKind::random_search, space, f, best4,
                                    std::vector<std::uint64_t>{}, 4),
                  nfl::Error);
}

TEST_CASE("budget bounds are enforced") {
  const SearchSpace space = SearchSpace::bitstrings(2);
  const ValueTable f = nfl::onemax_table(2);
  CHECK_THROWS_AS(nfl::run_algorithm({AlgKind::random_search, 1}, space, f, 0),
                  nfl::Error);
  CHECK_THROWS_AS(nfl::run_algorithm({AlgKind::random_search, 1}, space, f, 5),
                  nfl::Error);
}
