#pragma once

#include "nfl/algorithms.hpp"
#include "nfl/enumeration.hpp"
#include "nfl/function_set.hpp"
#include "nfl/measure.hpp"
#include "nfl/policy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nfl {

struct WeightedTable {
  ValueTable table;
  Rat weight;
};

// A probability distribution over objective functions with explicit support.
// Functions outside the support carry weight zero.
struct ProblemDistribution {
  std::vector<WeightedTable> support;

  // Sorts by table, merges duplicates, validates weights >= 0 and sum == 1.
  explicit ProblemDistribution(std::vector<WeightedTable> entries);

  int space_size() const;
  Orientation orientation() const;
};

struct PolicyAverage {
  BigInt policy_index;
  Rat average;
};

struct PolicyPairWitness {
  BigInt policy_a;
  BigInt policy_b;
  Rat average_a;
  Rat average_b;
};

enum class Verdict { verified, refuted };

struct VerificationReport {
  std::string claim;
  std::vector<PolicyAverage> per_policy;
  Verdict verdict = Verdict::verified;
  std::optional<PolicyPairWitness> witness; // present iff refuted
  std::optional<Rat> common_average;        // present when all averages agree
  // NUNFL only: whether the distribution is constant on every CUP class it
  // touches, plus the offending class signature when it is not.
  std::optional<bool> block_uniform;
  std::optional<CupSignature> non_uniform_signature;

  void validate() const; // refuted iff witness present
};

Rat average_performance(const FunctionSet& fs, const PolicyTree& policy,
                        const Measure& measure);
Rat average_performance(const ProblemDistribution& dist, const PolicyTree& policy,
                        const Measure& measure);

// Averages every enumerated policy over ALL functions space -> codomain;
// verified iff the averages are exactly equal (they always are: the original
// NFL identity; a refutation would be a bug with a reproducible witness).
VerificationReport verify_nfl(const SearchSpace& space, const std::vector<Rat>& codomain,
                              Orientation orientation, const Measure& measure,
                              std::uint64_t cap = kDefaultEnumerationCap,
                              int threads = 1);

// The sharpened statement over one closed-under-permutation set. Precondition
// error (naming a witness) if the input is not CUP.
VerificationReport verify_snfl(const FunctionSet& cup, const Measure& measure,
                               std::uint64_t cap = kDefaultEnumerationCap,
                               int threads = 1);

// Non-uniform case: weighted averages are policy-independent iff the
// distribution is block-uniform (constant on each CUP class). Block-uniform
// distributions are verified; otherwise we search for a differing policy pair
// and report it as the witness (consistency evidence for the only-if
// direction under this particular measure).
VerificationReport verify_nunfl(const ProblemDistribution& dist, const Measure& measure,
                                std::uint64_t cap = kDefaultEnumerationCap,
                                int threads = 1);

struct TraceMultisetReport {
  bool equal = false;
  // Sorted multiset of full-length value sequences shared by the first policy.
  std::vector<std::vector<Rat>> multiset;
  // When not equal: a policy whose multiset differs, with its multiset.
  std::optional<BigInt> differing_policy;
  std::optional<std::vector<std::vector<Rat>>> differing_multiset;
};

// The counting argument: over a CUP class every policy produces the same
// multiset of traces. Checks all enumerated policies against the first.
TraceMultisetReport trace_multiset_equal(const FunctionSet& cup,
                                         std::uint64_t cap = kDefaultEnumerationCap,
                                         int threads = 1);

struct FocusPairResult {
  ValueTable f2;
  std::vector<Rat> trace_values; // T, the shared value sequence
  bool replay_ok = false;        // run_policy(a2, f2) reproduced T exactly
};

// The pairwise focus construction: run a1 on f1 to get trace T, then assign
// T's values to whatever points a2 visits, in order. For m < |X| the uncovered
// points receive f1's unused values, ascending value to ascending point index,
// which keeps f2's signature equal to f1's.
FocusPairResult focus_pair(const SearchSpace& space, const PolicyTree& a1,
                           const PolicyTree& a2, const ValueTable& f1, int m = -1);

// A contestant in a gap demonstration: a fixed policy, or a seeded-algorithm
// family averaged over its seed spec.
struct AlgorithmContestant {
  AlgKind kind;
  SeedSpec seeds;
};
using Contestant = std::variant<PolicyTree, AlgorithmContestant>;

std::string contestant_label(const Contestant& c);

struct GapReport {
  Rat average_a;
  Rat average_b;
  Rat difference; // average_a - average_b
  std::string label_a;
  std::string label_b;
};

// On a non-CUP set two algorithms are free to differ; report both exact
// averages and the difference. A zero gap is a valid outcome (non-CUP permits
// a gap, it does not force one). Precondition error if the set is CUP.
GapReport demonstrate_gap(const SearchSpace& space, const FunctionSet& fs,
                          const Contestant& a, const Contestant& b,
                          const Measure& measure);

// Average of one contestant over the set (uniform over members).
Rat contestant_average(const SearchSpace& space, const FunctionSet& fs,
                       const Contestant& c, const Measure& measure);

} // namespace nfl
