#pragma once

#include "nfl/rational.hpp"
#include "nfl/search_space.hpp"
#include "nfl/trace.hpp"
#include "nfl/value_table.hpp"

#include <vector>

namespace nfl {

// One decision node: visit `point`, then branch on the observed value's index
// in the codomain. Leaves have no children.
struct PolicyNode {
  int point = -1;
  std::vector<int> children; // size == codomain size, or empty at maximal depth
};

// A deterministic non-repeating black-box search algorithm in extensive form:
// a decision tree over traces. Exhaustive policies (depth == space size) are
// what the enumeration produces; traces are truncated by the budget m instead
// of by early-stopping nodes.
class PolicyTree {
public:
  PolicyTree() = default;
  PolicyTree(std::vector<Rat> codomain, std::vector<PolicyNode> nodes, int root);

  // Number of exhaustive deterministic non-repeating policies on s points with
  // a k-value codomain: C(s) = s * C(s-1)^k, C(0) = C(1) = 1.
  static BigInt count(int space_size, int codomain_size);

  // Canonical bijection index -> policy, the enumeration order. Index runs in
  // [0, count(s, k)).
  static PolicyTree from_index(int space_size, std::vector<Rat> codomain,
                               const BigInt& index);

  // The oblivious policy visiting `order` regardless of observed values.
  static PolicyTree fixed_order(std::vector<Rat> codomain, std::vector<int> order);

  const std::vector<Rat>& codomain() const { return codomain_; }
  int root() const { return root_; }
  const PolicyNode& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  // Index of `value` in the codomain; codomain-mismatch error if absent.
  int branch_for(const Rat& value) const;

  // Walks every root-to-leaf path checking the distinct-points, branching
  // factor, and exhaustive-depth invariants against `space_size`.
  void validate(int space_size) const;

private:
  std::vector<Rat> codomain_; // sorted, distinct
  std::vector<PolicyNode> nodes_;
  int root_ = -1;
};

// Descend the tree for m steps, observing f along the way. Deterministic.
TraceRecord run_policy(const SearchSpace& space, const ValueTable& f,
                       const PolicyTree& policy, int m);

} // namespace nfl
