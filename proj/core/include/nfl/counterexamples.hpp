#pragma once

#include "nfl/rational.hpp"
#include "nfl/search_space.hpp"
#include "nfl/value_table.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfl {

// ---------------------------------------------------------------------------
// MAX-2-SAT
// ---------------------------------------------------------------------------

struct Literal {
  int var = 0;          // 0-based variable index
  bool positive = true; // false = negated
};

struct Clause {
  Literal a;
  Literal b; // distinct variables enforced on construction
};

struct Max2SatInstance {
  int n = 0; // variable count
  std::vector<Clause> clauses;

  Max2SatInstance() = default;
  Max2SatInstance(int vars, std::vector<Clause> cs); // validates

  bool clause_satisfied(int clause_index, int assignment) const;
};

// Value at assignment x = number of satisfied clauses, multiplicity counted.
// Assignments are indexed by reading (x_0 ... x_{n-1}) as binary, x_0 most
// significant — the natural order of the objective-value table.
ValueTable max2sat_table(const Max2SatInstance& inst,
                         std::uint64_t cap = 1000000);

struct Max2SatSearch {
  std::optional<Max2SatInstance> instance; // a realizing formula, if any
  // Exhaustion certificate when none: the searched space of clause-multiset
  // candidates, (max_value + 1)^(distinct 2-clause count), and how many DFS
  // nodes the pruned search actually touched.
  BigInt candidates_total;
  std::uint64_t nodes_explored = 0;
  int clause_types = 0;
  BigInt max_multiplicity;
};

// Does any formula over n variables produce this table? Every 2-clause is
// satisfied somewhere, so its multiplicity in a realizing formula is bounded
// by the table maximum; the search walks the 4*C(n,2) distinct clause types
// depth-first with per-point running-sum pruning.
Max2SatSearch max2sat_realizable(const ValueTable& table, int n);

// ---------------------------------------------------------------------------
// TSP
// ---------------------------------------------------------------------------

struct TspInstance {
  int cities = 0;
  std::vector<std::vector<Rat>> cost; // symmetric, zero diagonal

  TspInstance() = default;
  TspInstance(int n, std::vector<std::vector<Rat>> matrix); // validates
};

// Tours are 1-based city sequences, e.g. {1,2,3,4,5,6}. Canonical form fixes
// city 1 first and takes the lexicographically smaller direction, quotienting
// out rotation and reflection.
using Tour = std::vector<int>;

void validate_tour(const Tour& tour, int cities);
Tour canonical_tour(const Tour& tour);

Rat tour_length(const TspInstance& inst, const Tour& tour);

// All canonical tours on n cities ((n-1)!/2 of them), lexicographic order.
std::vector<Tour> all_canonical_tours(int cities, std::uint64_t cap = 1000000);

// Contiguous-segment-reversal neighbors, canonicalized and deduplicated.
// The default (segment length 2 only) is the adjacent-exchange level at which
// a 6-city tour has exactly 6 neighbors; full=true adds every segment length.
std::vector<Tour> two_opt_neighbors(const Tour& tour, bool full = false);

struct TspConstraint {
  Tour tour;
  Rat length;
};

// Proof objects for tsp_realizable. The linear certificate is a row vector y
// with y*A = 0 but y*b != 0 (no solution at all); the Farkas certificate is a
// y with y*A >= 0 componentwise but y*b < 0 (no nonnegative solution).
struct TspLinearCertificate {
  std::vector<Rat> multipliers;
  Rat combined_rhs; // y*b, nonzero
};

struct TspFarkasCertificate {
  std::vector<Rat> multipliers;
  std::vector<Rat> combined_row; // y*A, all >= 0
  Rat combined_rhs;              // y*b, < 0
};

enum class TspFeasibility { consistent, inconsistent, infeasible_nonnegative };

struct TspRealizability {
  TspFeasibility status = TspFeasibility::consistent;
  std::optional<TspInstance> witness; // a cost matrix satisfying everything
  std::optional<TspLinearCertificate> linear_certificate;
  std::optional<TspFarkasCertificate> farkas_certificate;
  // Edge order of the unknowns, (i,j) with i < j, for certificate checking.
  std::vector<std::pair<int, int>> edge_order;
};

// Is there a symmetric zero-diagonal cost matrix giving every tour its target
// length? Decided by exact rational elimination over the edge unknowns;
// require_nonnegative additionally demands cost >= 0 (exact phase-1 simplex,
// Bland's rule) and returns a Farkas certificate when that fails.
TspRealizability tsp_realizable(const std::vector<TspConstraint>& constraints, int cities,
                                bool require_nonnegative = false);

// The search space of canonical tours with 2-opt adjacency and tour-length
// values — lets the structure metrics run on a TSP instance. Returns the
// space, the table (orientation minimize), and the point order.
struct TspLandscape {
  SearchSpace space;
  ValueTable table;
  std::vector<Tour> tours;
};

TspLandscape tsp_landscape(const TspInstance& inst, bool full_two_opt = false,
                           std::uint64_t cap = 1000000);

// ---------------------------------------------------------------------------
// Boolean GP / symbolic regression semantics
// ---------------------------------------------------------------------------

// A program's output vector over the objective's test cases.
using BitSemantics = std::vector<std::uint8_t>; // entries 0/1
using RatSemantics = std::vector<Rat>;

// Per program, the number of cases agreeing with target t.
std::vector<int> boolgp_objective(const std::vector<BitSemantics>& programs,
                                  const BitSemantics& t);

struct BoolGpSearch {
  std::optional<BitSemantics> target; // realizing t, if any
  BigInt candidates_total;            // 2^cases, the exhaustion certificate
};

// Is there a target semantics giving these programs these objective values?
// Exhausts all 2^cases candidates in lexicographic order.
BoolGpSearch boolgp_realizable(const std::vector<BitSemantics>& programs,
                               const std::vector<int>& targets,
                               std::uint64_t cap = 1000000);

struct SpheresResult {
  bool intersects = false;
  // A rational common point when one exists (always found when the minimum
  // residual is exactly zero; otherwise probed for).
  std::optional<RatSemantics> witness;
  // Existence certificate: the exact minimum of |t-p_1|^2 - r_1^2 over the
  // affine set satisfying the pairwise-difference equations. When that set has
  // positive dimension the residual grows without bound going outward, so an
  // intersection exists iff the minimum is <= 0; when the set is a single
  // point the residual must be exactly 0 there.
  std::optional<Rat> min_residual;
  // When the linear stage already fails, the inconsistent combination's rhs.
  std::optional<Rat> linear_inconsistency;
};

// Does any point t satisfy |t - p_i|^2 = r2_i for all i? Works entirely in
// squared distances so the decision is exact: pairwise subtraction gives a
// linear system; on its solution set the residual is a convex quadratic whose
// exact minimum settles existence.
SpheresResult spheres_intersect(const std::vector<RatSemantics>& centers,
                                const std::vector<Rat>& radii_squared);

struct DuplicatedSemanticsResult {
  bool consistent = true;
  // When inconsistent: group index and the two offending points.
  std::optional<std::array<int, 3>> offender;
};

// Semantically identical programs must score identically under any semantics-
// distance objective; a violating pair certifies "not a regression objective".
DuplicatedSemanticsResult duplicated_semantics_check(
    const std::vector<std::vector<int>>& equivalence_groups, const ValueTable& table);

} // namespace nfl
