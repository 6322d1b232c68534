#pragma once

#include "nfl/function_set.hpp"
#include "nfl/rational.hpp"
#include "nfl/search_space.hpp"
#include "nfl/value_table.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nfl {

// Deterministic one-offspring recombination, stored as a full (x, y) table.
class CrossoverOperator {
public:
  static CrossoverOperator from_table(std::vector<std::vector<int>> table);
  // C(x, y) = x.
  static CrossoverOperator first_parent(int size);
  // Offspring takes mask bits from y, the rest from x (bitstring spaces).
  static CrossoverOperator uniform_mask(const SearchSpace& space, std::uint64_t mask);

  int apply(int x, int y) const;
  int size() const { return static_cast<int>(table_.size()); }

private:
  std::vector<std::vector<int>> table_;
};

// A left/right expectation (or max) pair with the strict-inequality verdict
// left < right. "holds" means the structure property is present.
struct MetricPair {
  Rat left;
  Rat right;
  bool holds = false;
};

// E|f(x)-f(n)| over ordered (point, neighbor) pairs, against E|f(x)-f(y)| over
// ordered pairs x != y (the baseline excludes x = y; including it deflates the
// baseline on tiny spaces).
MetricPair locality(const SearchSpace& space, const ValueTable& f);

// E|f(x)-f(C(x,y))| over ALL ordered pairs (x, y), same baseline as locality.
MetricPair crossover_locality(const SearchSpace& space, const ValueTable& f,
                              const CrossoverOperator& cx);

// Left side averaged over the uniform-mask operator for every mask.
MetricPair mask_averaged_crossover_locality(const SearchSpace& space, const ValueTable& f);

// Exact mean of |f(start)-f(end)| over all k-step neighborhood walks (walks
// may revisit points), uniform per walk; k=1 is locality's left side.
MetricPair k_step_locality(const SearchSpace& space, const ValueTable& f, int k);

// max |f(x)-f(n)| over neighbor pairs vs max |f(x)-f(y)| globally; the strict
// inequality is the discrete-Lipschitz ("no maximal steepness") property.
MetricPair steepness(const SearchSpace& space, const ValueTable& f);

// Pearson correlation between distance-to-optimum and objective value, over
// all points including the optimum itself. The only floating-point quantity
// in the library; callers compare with tolerance 1e-9. Requires a distance
// and a unique optimum; `closest_on_ties` switches tied optima from an error
// to distance-to-nearest-optimum.
double fdc(const SearchSpace& space, const ValueTable& f, bool closest_on_ties = false);

// Points with no strictly better neighbor (orientation-aware).
int count_local_optima(const SearchSpace& space, const ValueTable& f);

// Set-level view: the set of local-optima counts achieved across members.
std::set<int> local_optima_counts(const SearchSpace& space, const FunctionSet& fs);

// Modularity (simplified): the fraction of bit positions whose toggle effect
// on f has a consistent sign across all contexts. Zero deltas are compatible
// with either sign; 1 means fully separable-monotone. This deliberately
// replaces the literature's program-modularity metric with a separability
// census — reports label it "modularity (simplified)".
Rat modularity_score(const SearchSpace& space, const ValueTable& f);

// Swap the values of the unique optimum and unique pessimum; preserves the
// signature and is an involution. Precondition error on ties.
ValueTable trap_transform(const ValueTable& f);

// Pointwise f - lambda*g. Precondition error if g is constant (the penalty
// argument needs at least one feasible and one infeasible point).
ValueTable penalty_composite(const ValueTable& f, const ValueTable& g, const Rat& lambda);

// Everything above for one function, with per-property verdicts; properties
// whose prerequisites are missing (no neighborhood, no distance, tied optimum,
// non-bitstring encoding) are reported absent with the reason.
struct StructureReport {
  std::optional<MetricPair> locality;
  std::optional<MetricPair> crossover; // present when an operator was supplied
  std::optional<MetricPair> steepness;
  std::optional<double> fdc;
  std::optional<std::string> fdc_skipped; // reason when absent
  std::optional<int> local_optima;
  std::optional<Rat> modularity; // "modularity (simplified)"
  std::optional<std::string> skipped; // reason locality/steepness/optima absent
};

StructureReport structure_report(const SearchSpace& space, const ValueTable& f,
                                 const std::optional<CrossoverOperator>& cx = std::nullopt);

} // namespace nfl
