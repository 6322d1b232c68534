#include "nfl/algorithms.hpp"

#include "nfl/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace nfl {

const char* alg_kind_name(AlgKind kind) {
  switch (kind) {
    case AlgKind::random_search: return "random-search";
    case AlgKind::best_first: return "best-first";
    case AlgKind::worst_first: return "worst-first";
  }
  return "unknown";
}

namespace {

void check_budget(const SearchSpace& space, int m) {
  if (m < 1) throw Error(ErrorKind::budget, "budget must be >= 1");
  if (m > space.size())
    throw Error(ErrorKind::budget, "budget " + std::to_string(m) +
                                       " exceeds space size " +
                                       std::to_string(space.size()));
}

// First-improvement local search with memoisation, factored so the seeded run
// and the exact expectation share one stepper. The walk advances
// deterministically between random draws; a draw is needed for the start and
// for every restart, and the caller supplies the chosen point.
struct LocalWalk {
  const SearchSpace* space = nullptr;
  const ValueTable* f = nullptr;
  Orientation climb; // best-first climbs f's orientation, worst-first the flip
  int m = 0;

  std::vector<char> known;
  std::vector<TraceStep> steps;
  int current = -1; // -1: a draw is pending

  LocalWalk(const SearchSpace& s, const ValueTable& table, AlgKind kind, int budget)
      : space(&s), f(&table), m(budget) {
    climb = table.orientation;
    if (kind == AlgKind::worst_first)
      climb = climb == Orientation::maximize ? Orientation::minimize
                                             : Orientation::maximize;
    known.assign(static_cast<std::size_t>(s.size()), 0);
  }

  int evals() const { return static_cast<int>(steps.size()); }

  std::vector<int> unvisited() const {
    std::vector<int> out;
    for (int p = 0; p < space->size(); ++p)
      if (!known[static_cast<std::size_t>(p)]) out.push_back(p);
    return out;
  }

  void evaluate(int point) {
    known[static_cast<std::size_t>(point)] = 1;
    steps.push_back(TraceStep{point, f->at(point)});
  }

  void apply_draw(int point) {
    evaluate(point);
    current = point;
  }

  // Returns true when a draw is required, false when the run is over. Probing
  // a known point is free; evaluating a new one consumes budget. Moves are
  // strictly improving, so the climb cannot cycle.
  bool advance() {
    while (true) {
      if (current < 0) return evals() < m && evals() < space->size();
      bool moved = false;
      for (int nb : space->neighbors(current)) {
        const bool improves =
            known[static_cast<std::size_t>(nb)]
                ? value_improves(f->at(nb), f->at(current), climb)
                : false;
        if (known[static_cast<std::size_t>(nb)]) {
          if (improves) {
            current = nb;
            moved = true;
            break;
          }
          continue;
        }
        if (evals() == m) return false; // budget spent mid-probe
        evaluate(nb);
        if (value_improves(f->at(nb), f->at(current), climb)) {
          current = nb;
          moved = true;
          break;
        }
      }
      if (!moved && current >= 0) current = -1; // local optimum: restart
    }
  }

  TraceRecord finish() const {
    TraceRecord trace;
    trace.budget = m;
    trace.steps = steps;
    trace.validate();
    return trace;
  }
};

} // namespace

TraceRecord run_algorithm(const SeededAlgorithm& alg, const SearchSpace& space,
                          const ValueTable& f, int m) {
  if (f.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
  check_budget(space, m);
  Lcg64 rng(alg.seed);

  if (alg.kind == AlgKind::random_search) {
    TraceRecord trace;
    trace.budget = m;
    std::vector<int> unvisited(static_cast<std::size_t>(space.size()));
    std::iota(unvisited.begin(), unvisited.end(), 0);
    for (int step = 0; step < m; ++step) {
      const std::size_t pick =
          static_cast<std::size_t>(rng.below(unvisited.size()));
      const int point = unvisited[pick];
      unvisited.erase(unvisited.begin() + static_cast<std::ptrdiff_t>(pick));
      trace.steps.push_back(TraceStep{point, f.at(point)});
    }
    trace.validate();
    return trace;
  }

  if (!space.has_neighborhood())
    throw Error(ErrorKind::precondition, "local search requires a neighborhood");
  LocalWalk walk(space, f, alg.kind, m);
  while (walk.advance()) {
    const std::vector<int> candidates = walk.unvisited();
    walk.apply_draw(candidates[static_cast<std::size_t>(
        rng.below(candidates.size()))]);
  }
  return walk.finish();
}

Rat exact_random_search_average(const SearchSpace& space, const ValueTable& f,
                                const Measure& measure, int m) {
  if (f.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
  check_budget(space, m);
  // Both measures are symmetric in the evaluated points, and sampling without
  // replacement makes every u-subset equally likely regardless of order, so
  // the expectation over random orderings is the mean over u-subsets.
  const int size = space.size();
  const int u = std::min(measure.horizon, m);
  BigInt subsets = 1;
  for (int i = 0; i < u; ++i) subsets = subsets * (size - i) / (i + 1);
  if (subsets > BigInt(10000000))
    throw Error(ErrorKind::cap_exceeded,
                "exact random-search average over " + subsets.str() + " subsets");

  std::vector<int> idx(static_cast<std::size_t>(u));
  std::iota(idx.begin(), idx.end(), 0);
  Rat total = 0;
  while (true) {
    if (measure.kind == MeasureKind::best_so_far) {
      Rat best = f.at(idx[0]);
      for (int i = 1; i < u; ++i)
        if (value_improves(f.at(idx[static_cast<std::size_t>(i)]), best, f.orientation))
          best = f.at(idx[static_cast<std::size_t>(i)]);
      total += best;
    } else {
      Rat sum = 0;
      for (int i = 0; i < u; ++i) sum += f.at(idx[static_cast<std::size_t>(i)]);
      total += sum / u;
    }
    // next combination in lexicographic order
    int pos = u - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == size - u + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < u; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return total / Rat(subsets);
}

Rat exact_local_search_average(AlgKind kind, const SearchSpace& space,
                               const ValueTable& f, const Measure& measure, int m) {
  if (kind == AlgKind::random_search)
    throw Error(ErrorKind::precondition, "use exact_random_search_average");
  if (f.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
  check_budget(space, m);
  if (!space.has_neighborhood())
    throw Error(ErrorKind::precondition, "local search requires a neighborhood");

  // Branch uniformly wherever the seeded algorithm would draw: the start point
  // and every restart target. The walk between draws is deterministic.
  std::function<Rat(LocalWalk)> expect = [&](LocalWalk walk) -> Rat {
    if (!walk.advance())
      return apply_measure(measure, walk.finish(), f.orientation);
    const std::vector<int> candidates = walk.unvisited();
    Rat sum = 0;
    for (int choice : candidates) {
      LocalWalk branch = walk;
      branch.apply_draw(choice);
      sum += expect(std::move(branch));
    }
    return sum / static_cast<int>(candidates.size());
  };
  return expect(LocalWalk(space, f, kind, m));
}

Rat seed_average(AlgKind kind, const SearchSpace& space, const ValueTable& f,
                 const Measure& measure, const SeedSpec& seeds, int m) {
  if (std::holds_alternative<ExhaustiveSeeds>(seeds)) {
    if (kind == AlgKind::random_search)
      return exact_random_search_average(space, f, measure, m);
    return exact_local_search_average(kind, space, f, measure, m);
  }
  const auto& list = std::get<std::vector<std::uint64_t>>(seeds);
  if (list.empty()) throw Error(ErrorKind::precondition, "empty seed set");
  Rat total = 0;
  for (std::uint64_t seed : list) {
    const TraceRecord trace = run_algorithm(SeededAlgorithm{kind, seed}, space, f, m);
    total += apply_measure(measure, trace, f.orientation);
  }
  return total / static_cast<int>(list.size());
}

} // namespace nfl
