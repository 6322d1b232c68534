#pragma once

#include "nfl/errors.hpp"
#include "nfl/measure.hpp"
#include "nfl/search_space.hpp"
#include "nfl/trace.hpp"
#include "nfl/value_table.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nfl {

// Fixed 64-bit linear congruential generator (Knuth's MMIX multiplier and
// increment), so seeded runs replay bit-for-bit anywhere:
//   state <- state * 6364136223846793005 + 1442695040888963407
//   draw below n = (state >> 33) % n, taken after stepping.
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }

  std::uint64_t below(std::uint64_t n) {
    if (n == 0)
      throw Error(ErrorKind::precondition, "cannot draw below zero");
    return next() % n;
  }

private:
  std::uint64_t state_;
};

enum class AlgKind { random_search, best_first, worst_first };

const char* alg_kind_name(AlgKind kind);

// A stochastic algorithm pinned to one deterministic member of its family.
//
// random-search: each step evaluates a uniformly random unvisited point.
//
// best-first: evaluate a uniformly random start, then repeat: probe the
// current point's neighbors in ascending index order and move to the FIRST
// strictly improving one (known values are consulted for free — memoisation —
// and moving to a known improving neighbor costs nothing); when no neighbor
// improves, the point is a local optimum and the walk restarts at a uniformly
// random unvisited point. Every evaluation of a new point, neighbor probes
// included, consumes one unit of budget and appends to the trace.
//
// worst-first: best-first on the negated objective.
struct SeededAlgorithm {
  AlgKind kind = AlgKind::random_search;
  std::uint64_t seed = 0;
};

TraceRecord run_algorithm(const SeededAlgorithm& alg, const SearchSpace& space,
                          const ValueTable& f, int m);

// Seed sets for averaging. ExhaustiveSeeds means the exact expectation over
// the algorithm's randomness itself: uniformly random orderings for random
// search, uniform starts and uniform restart targets for local search. That is
// the ideal an unbounded LCG seed average approximates, computed exactly.
struct ExhaustiveSeeds {};
using SeedSpec = std::variant<ExhaustiveSeeds, std::vector<std::uint64_t>>;

Rat seed_average(AlgKind kind, const SearchSpace& space, const ValueTable& f,
                 const Measure& measure, const SeedSpec& seeds, int m);

// The two exact engines behind ExhaustiveSeeds. Budget m is the trace length;
// the measure's horizon truncates on top of it.
Rat exact_random_search_average(const SearchSpace& space, const ValueTable& f,
                                const Measure& measure, int m);
Rat exact_local_search_average(AlgKind kind, const SearchSpace& space,
                               const ValueTable& f, const Measure& measure, int m);

} // namespace nfl
