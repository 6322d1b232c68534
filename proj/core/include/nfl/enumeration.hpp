#pragma once

#include "nfl/function_set.hpp"
#include "nfl/policy.hpp"
#include "nfl/search_space.hpp"
#include "nfl/value_table.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nfl {

// Exhaustive enumerations refuse to run past this many objects by default;
// verification must be exhaustive or refused, never sampled.
constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// Multinomial coefficient |X|! / (prod of value multiplicities!) — the size of
// the CUP class named by a signature.
BigInt cup_class_size(const CupSignature& signature);

// All |codomain|^|X| tables in lexicographic order.
FunctionSet enumerate_functions(const SearchSpace& space, const std::vector<Rat>& codomain,
                                Orientation orientation,
                                std::uint64_t cap = kDefaultEnumerationCap);

// All distinct value-permutations of f, lexicographic order.
FunctionSet cup_class(const ValueTable& f, std::uint64_t cap = kDefaultEnumerationCap);

// Group by signature; parts are disjoint, their union is the input, and each
// part is ordered canonically. Parts appear in ascending signature order.
std::vector<FunctionSet> partition_cup(const FunctionSet& fs);

struct CupCheck {
  bool cup = false;
  // When not CUP: a member together with a value-permutation of it that is
  // missing from the set (the lexicographically smallest absent one).
  std::optional<std::pair<ValueTable, ValueTable>> witness;
};

// Signature-completeness criterion: CUP iff every signature present appears
// with its full class.
CupCheck is_cup(const FunctionSet& fs);

// Lazy family of all exhaustive deterministic non-repeating policies, in
// canonical index order. Materialize one with at(), or all with to_vector()
// on small spaces.
class PolicyEnumeration {
public:
  PolicyEnumeration(const SearchSpace& space, std::vector<Rat> codomain,
                    std::uint64_t cap = kDefaultEnumerationCap);

  const BigInt& count() const { return count_; }
  int space_size() const { return space_size_; }
  const std::vector<Rat>& codomain() const { return codomain_; }

  PolicyTree at(const BigInt& index) const;
  std::vector<PolicyTree> to_vector() const;

private:
  int space_size_;
  std::vector<Rat> codomain_;
  BigInt count_;
};

} // namespace nfl
