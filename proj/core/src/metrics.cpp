#include "nfl/metrics.hpp"

#include "nfl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace nfl {

namespace {

Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

void check_table(const SearchSpace& space, const ValueTable& f) {
  if (f.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
}

void need_neighborhood(const SearchSpace& space) {
  if (!space.has_neighborhood())
    throw Error(ErrorKind::precondition, "space has no neighborhood");
}

// E|f(x)-f(y)| over ordered pairs x != y. Including x = y would add zero terms
// and shrink the baseline, which on tiny spaces flips verdicts.
Rat pairwise_baseline(const ValueTable& f) {
  const int s = f.size();
  if (s < 2)
    throw Error(ErrorKind::precondition, "baseline needs at least two points");
  Rat sum = 0;
  for (int x = 0; x < s; ++x)
    for (int y = x + 1; y < s; ++y) sum += rat_abs(f.at(x) - f.at(y));
  return (2 * sum) / (Rat(s) * (s - 1));
}

} // namespace

CrossoverOperator CrossoverOperator::from_table(std::vector<std::vector<int>> table) {
  const int s = static_cast<int>(table.size());
  if (s == 0)
    throw Error(ErrorKind::precondition, "crossover table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != s)
      throw Error(ErrorKind::precondition, "crossover table is not square");
    for (int off : row)
      if (off < 0 || off >= s)
        throw Error(ErrorKind::precondition, "crossover offspring out of range");
  }
  CrossoverOperator cx;
  cx.table_ = std::move(table);
  return cx;
}

CrossoverOperator CrossoverOperator::first_parent(int size) {
  if (size < 1)
    throw Error(ErrorKind::precondition, "crossover table is empty");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(size),
                                      std::vector<int>(static_cast<std::size_t>(size)));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = x;
  return from_table(std::move(table));
}

CrossoverOperator CrossoverOperator::uniform_mask(const SearchSpace& space,
                                                  std::uint64_t mask) {
  if (!space.has_bits())
    throw Error(ErrorKind::precondition, "uniform-mask crossover needs bitstrings");
  const int s = space.size();
  if (mask >= static_cast<std::uint64_t>(s))
    throw Error(ErrorKind::precondition, "mask has bits outside the space");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(s),
                                      std::vector<int>(static_cast<std::size_t>(s)));
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          static_cast<int>((static_cast<std::uint64_t>(x) & ~mask) |
                           (static_cast<std::uint64_t>(y) & mask));
  return from_table(std::move(table));
}

int CrossoverOperator::apply(int x, int y) const {
  const int s = size();
  if (x < 0 || x >= s || y < 0 || y >= s)
    throw Error(ErrorKind::precondition, "crossover parent out of range");
  return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

MetricPair locality(const SearchSpace& space, const ValueTable& f) {
  check_table(space, f);
  need_neighborhood(space);
  Rat sum = 0;
  long pairs = 0;
  for (int x = 0; x < space.size(); ++x) {
    for (int nb : space.neighbors(x)) {
      sum += rat_abs(f.at(x) - f.at(nb));
      ++pairs;
    }
  }
  if (pairs == 0)
    throw Error(ErrorKind::precondition, "neighborhood has no edges");
  MetricPair out;
  out.left = sum / pairs;
  out.right = pairwise_baseline(f);
  out.holds = out.left < out.right;
  return out;
}

MetricPair crossover_locality(const SearchSpace& space, const ValueTable& f,
                              const CrossoverOperator& cx) {
  check_table(space, f);
  if (cx.size() != space.size())
    throw Error(ErrorKind::precondition, "crossover table does not match the space");
  const int s = space.size();
  Rat sum = 0;
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) sum += rat_abs(f.at(x) - f.at(cx.apply(x, y)));
  MetricPair out;
  out.left = sum / (Rat(s) * s);
  out.right = pairwise_baseline(f);
  out.holds = out.left < out.right;
  return out;
}

MetricPair mask_averaged_crossover_locality(const SearchSpace& space,
                                            const ValueTable& f) {
  check_table(space, f);
  if (!space.has_bits())
    throw Error(ErrorKind::precondition, "mask averaging needs bitstrings");
  const int s = space.size();
  Rat sum = 0;
  for (std::uint64_t mask = 0; mask < static_cast<std::uint64_t>(s); ++mask) {
    for (int x = 0; x < s; ++x) {
      for (int y = 0; y < s; ++y) {
        const int off = static_cast<int>((static_cast<std::uint64_t>(x) & ~mask) |
                                         (static_cast<std::uint64_t>(y) & mask));
        sum += rat_abs(f.at(x) - f.at(off));
      }
    }
  }
  MetricPair out;
  out.left = sum / (Rat(s) * s * s); // 2^bits masks times s^2 pairs
  out.right = pairwise_baseline(f);
  out.holds = out.left < out.right;
  return out;
}

MetricPair k_step_locality(const SearchSpace& space, const ValueTable& f, int k) {
  check_table(space, f);
  need_neighborhood(space);
  if (k < 1) throw Error(ErrorKind::precondition, "walk length must be >= 1");
  // Every k-step walk is equally likely; walks may revisit points, so we count
  // them exactly with a per-start DP over walk endpoints.
  BigInt total_walks = 0;
  Rat weighted = 0;
  const int s = space.size();
  for (int start = 0; start < s; ++start) {
    std::vector<BigInt> ways(static_cast<std::size_t>(s), BigInt(0));
    ways[static_cast<std::size_t>(start)] = 1;
    for (int step = 0; step < k; ++step) {
      std::vector<BigInt> next(static_cast<std::size_t>(s), BigInt(0));
      for (int p = 0; p < s; ++p) {
        if (ways[static_cast<std::size_t>(p)] == 0) continue;
        for (int nb : space.neighbors(p))
          next[static_cast<std::size_t>(nb)] += ways[static_cast<std::size_t>(p)];
      }
      ways = std::move(next);
    }
    for (int end = 0; end < s; ++end) {
      const BigInt& w = ways[static_cast<std::size_t>(end)];
      if (w == 0) continue;
      total_walks += w;
      weighted += Rat(w) * rat_abs(f.at(start) - f.at(end));
    }
  }
  if (total_walks == 0)
    throw Error(ErrorKind::precondition, "no walks of the requested length");
  MetricPair out;
  out.left = weighted / Rat(total_walks);
  out.right = pairwise_baseline(f);
  out.holds = out.left < out.right;
  return out;
}

MetricPair steepness(const SearchSpace& space, const ValueTable& f) {
  check_table(space, f);
  need_neighborhood(space);
  const int s = space.size();
  if (s < 2)
    throw Error(ErrorKind::precondition, "baseline needs at least two points");
  Rat local = 0;
  long pairs = 0;
  for (int x = 0; x < s; ++x) {
    for (int nb : space.neighbors(x)) {
      local = std::max(local, rat_abs(f.at(x) - f.at(nb)));
      ++pairs;
    }
  }
  if (pairs == 0)
    throw Error(ErrorKind::precondition, "neighborhood has no edges");
  Rat global = 0;
  for (int x = 0; x < s; ++x)
    for (int y = x + 1; y < s; ++y)
      global = std::max(global, rat_abs(f.at(x) - f.at(y)));
  MetricPair out;
  out.left = local;
  out.right = global;
  out.holds = out.left < out.right;
  return out;
}

double fdc(const SearchSpace& space, const ValueTable& f, bool closest_on_ties) {
  check_table(space, f);
  if (!space.has_distance())
    throw Error(ErrorKind::precondition, "space has no distance");
  const int s = space.size();
  if (s < 2)
    throw Error(ErrorKind::precondition, "correlation needs at least two points");

  std::vector<int> optima;
  Rat best = f.at(0);
  for (int x = 0; x < s; ++x) {
    if (value_improves(f.at(x), best, f.orientation)) best = f.at(x);
  }
  for (int x = 0; x < s; ++x)
    if (f.at(x) == best) optima.push_back(x);
  if (optima.size() > 1 && !closest_on_ties)
    throw Error(ErrorKind::precondition,
                "optimum is tied between " + std::to_string(optima.size()) +
                    " points; pass closest_on_ties to use nearest-optimum distance");

  std::vector<double> ds(static_cast<std::size_t>(s));
  std::vector<double> vs(static_cast<std::size_t>(s));
  for (int x = 0; x < s; ++x) {
    Rat d = space.distance(x, optima[0]);
    for (std::size_t i = 1; i < optima.size(); ++i)
      d = std::min(d, space.distance(x, optima[i]));
    ds[static_cast<std::size_t>(x)] = rational_to_double(d);
    vs[static_cast<std::size_t>(x)] = rational_to_double(f.at(x));
  }
  double mean_d = 0;
  double mean_v = 0;
  for (int x = 0; x < s; ++x) {
    mean_d += ds[static_cast<std::size_t>(x)];
    mean_v += vs[static_cast<std::size_t>(x)];
  }
  mean_d /= s;
  mean_v /= s;
  double cov = 0;
  double var_d = 0;
  double var_v = 0;
  for (int x = 0; x < s; ++x) {
    const double dd = ds[static_cast<std::size_t>(x)] - mean_d;
    const double dv = vs[static_cast<std::size_t>(x)] - mean_v;
    cov += dd * dv;
    var_d += dd * dd;
    var_v += dv * dv;
  }
  if (var_d == 0.0 || var_v == 0.0)
    throw Error(ErrorKind::precondition,
                "correlation undefined: zero variance in distance or value");
  return cov / std::sqrt(var_d * var_v);
}

int count_local_optima(const SearchSpace& space, const ValueTable& f) {
  check_table(space, f);
  need_neighborhood(space);
  int count = 0;
  for (int x = 0; x < space.size(); ++x) {
    bool improvable = false;
    for (int nb : space.neighbors(x)) {
      if (value_improves(f.at(nb), f.at(x), f.orientation)) {
        improvable = true;
        break;
      }
    }
    if (!improvable) ++count;
  }
  return count;
}

std::set<int> local_optima_counts(const SearchSpace& space, const FunctionSet& fs) {
  std::set<int> counts;
  for (const auto& f : fs.members) counts.insert(count_local_optima(space, f));
  return counts;
}

Rat modularity_score(const SearchSpace& space, const ValueTable& f) {
  check_table(space, f);
  if (!space.has_bits())
    throw Error(ErrorKind::precondition, "modularity needs bitstrings");
  const int bits = space.bits();
  int consistent = 0;
  for (int var = 0; var < bits; ++var) {
    const int mask = 1 << (bits - 1 - var); // variable 0 is the high bit
    bool saw_up = false;
    bool saw_down = false;
    for (int x = 0; x < space.size(); ++x) {
      if ((x & mask) != 0) continue;
      const Rat delta = f.at(x | mask) - f.at(x);
      if (delta > 0) saw_up = true;
      if (delta < 0) saw_down = true;
    }
    // Zero deltas are compatible with either sign, so a constant toggle column
    // counts as consistent.
    if (!(saw_up && saw_down)) ++consistent;
  }
  return Rat(consistent) / bits;
}

ValueTable trap_transform(const ValueTable& f) {
  const int opt = f.unique_optimum();
  const int pes = f.unique_pessimum();
  ValueTable out = f;
  std::swap(out.values[static_cast<std::size_t>(opt)],
            out.values[static_cast<std::size_t>(pes)]);
  return out;
}

ValueTable penalty_composite(const ValueTable& f, const ValueTable& g,
                             const Rat& lambda) {
  if (f.size() != g.size())
    throw Error(ErrorKind::precondition, "objective and penalty sizes differ");
  bool constant = true;
  for (int x = 1; x < g.size(); ++x)
    if (g.at(x) != g.at(0)) {
      constant = false;
      break;
    }
  if (constant)
    throw Error(ErrorKind::precondition, "penalty term is constant");
  ValueTable out;
  out.orientation = f.orientation;
  out.values.reserve(static_cast<std::size_t>(f.size()));
  for (int x = 0; x < f.size(); ++x) out.values.push_back(f.at(x) - lambda * g.at(x));
  return out;
}

StructureReport structure_report(const SearchSpace& space, const ValueTable& f,
                                 const std::optional<CrossoverOperator>& cx) {
  StructureReport report;
  try {
    report.locality = locality(space, f);
    report.steepness = steepness(space, f);
    report.local_optima = count_local_optima(space, f);
  } catch (const Error& e) {
    report.skipped = e.what();
  }
  try {
    report.fdc = fdc(space, f);
  } catch (const Error& e) {
    report.fdc_skipped = e.what();
  }
  if (space.has_bits()) report.modularity = modularity_score(space, f);
  if (cx) report.crossover = crossover_locality(space, f, *cx);
  return report;
}

} // namespace nfl
