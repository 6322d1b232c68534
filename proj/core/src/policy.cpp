#include "nfl/policy.hpp"

#include "nfl/errors.hpp"
#include "nfl/rational.hpp"

#include <algorithm>
#include <string>

namespace nfl {

namespace {

void check_codomain(const std::vector<Rat>& codomain) {
  if (codomain.empty())
    throw Error(ErrorKind::invariant, "policy codomain must be nonempty");
  for (std::size_t i = 1; i < codomain.size(); ++i)
    if (!(codomain[i - 1] < codomain[i]))
      throw Error(ErrorKind::invariant, "policy codomain must be sorted and distinct");
}

} // namespace

PolicyTree::PolicyTree(std::vector<Rat> codomain, std::vector<PolicyNode> nodes, int root)
    : codomain_(std::move(codomain)), nodes_(std::move(nodes)), root_(root) {
  check_codomain(codomain_);
  if (root_ < 0 || root_ >= static_cast<int>(nodes_.size()))
    throw Error(ErrorKind::invariant, "policy root out of range");
}

BigInt PolicyTree::count(int space_size, int codomain_size) {
  if (space_size < 0) throw Error(ErrorKind::invariant, "negative space size");
  if (codomain_size < 1) throw Error(ErrorKind::invariant, "codomain must be nonempty");
  BigInt c = 1; // C(0) = C(1) = 1
  for (int s = 2; s <= space_size; ++s) {
    BigInt power = 1;
    for (int j = 0; j < codomain_size; ++j) power *= c;
    c = s * power;
  }
  return space_size == 0 ? BigInt(1) : c;
}

namespace {

// Decode the canonical mixed-radix index: the leading digit (base s) picks the
// root among the available points in ascending order; the remainder splits
// into k digits (base C(s-1)) read most-significant-first, one subtree per
// codomain value in ascending value order.
int decode_subtree(const std::vector<int>& available, const BigInt& index, int k,
                   std::vector<PolicyNode>& nodes) {
  const int s = static_cast<int>(available.size());
  if (s == 0) throw Error(ErrorKind::invariant, "decode on empty point set");
  const BigInt child_count = PolicyTree::count(s - 1, k);
  BigInt subtree_power = 1;
  for (int j = 0; j < k; ++j) subtree_power *= child_count;
  const BigInt digit = index / subtree_power;
  BigInt rest = index % subtree_power;

  const int root_point = available[static_cast<int>(digit)];
  std::vector<int> remaining;
  remaining.reserve(available.size() - 1);
  for (int p : available)
    if (p != root_point) remaining.push_back(p);

  const int self = static_cast<int>(nodes.size());
  nodes.push_back(PolicyNode{root_point, {}});
  if (s > 1) {
    std::vector<BigInt> child_digits(static_cast<std::size_t>(k));
    for (int j = k - 1; j >= 0; --j) {
      child_digits[static_cast<std::size_t>(j)] = rest % child_count;
      rest /= child_count;
    }
    std::vector<int> children(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
      children[static_cast<std::size_t>(j)] =
          decode_subtree(remaining, child_digits[static_cast<std::size_t>(j)], k, nodes);
    nodes[static_cast<std::size_t>(self)].children = std::move(children);
  }
  return self;
}

} // namespace

PolicyTree PolicyTree::from_index(int space_size, std::vector<Rat> codomain,
                                  const BigInt& index) {
  check_codomain(codomain);
  if (space_size < 1) throw Error(ErrorKind::invariant, "space size must be >= 1");
  const int k = static_cast<int>(codomain.size());
  const BigInt total = count(space_size, k);
  if (index < 0 || index >= total)
    throw Error(ErrorKind::invariant, "policy index out of range");

  std::vector<int> available(static_cast<std::size_t>(space_size));
  for (int p = 0; p < space_size; ++p) available[static_cast<std::size_t>(p)] = p;
  std::vector<PolicyNode> nodes;
  const int root = decode_subtree(available, index, k, nodes);
  return PolicyTree(std::move(codomain), std::move(nodes), root);
}

PolicyTree PolicyTree::fixed_order(std::vector<Rat> codomain, std::vector<int> order) {
  check_codomain(codomain);
  if (order.empty()) throw Error(ErrorKind::invariant, "empty visit order");
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw Error(ErrorKind::invariant, "visit order must be a permutation of all points");
  }
  const int k = static_cast<int>(codomain.size());
  std::vector<PolicyNode> nodes;
  // One node per depth; all branches converge on the next point in the order.
  for (std::size_t d = 0; d < order.size(); ++d) {
    PolicyNode node{order[d], {}};
    if (d + 1 < order.size())
      node.children.assign(static_cast<std::size_t>(k), static_cast<int>(d) + 1);
    nodes.push_back(std::move(node));
  }
  return PolicyTree(std::move(codomain), std::move(nodes), 0);
}

int PolicyTree::branch_for(const Rat& value) const {
  const auto it = std::lower_bound(codomain_.begin(), codomain_.end(), value);
  if (it == codomain_.end() || *it != value)
    throw Error(ErrorKind::codomain_mismatch,
                "observed value " + rational_to_string(value) +
                    " outside the policy codomain");
  return static_cast<int>(it - codomain_.begin());
}

namespace {

void validate_walk(const PolicyTree& tree, int node_id, std::vector<bool>& on_path,
                   int depth, int space_size, int k) {
  const PolicyNode& node = tree.node(node_id);
  if (node.point < 0 || node.point >= space_size)
    throw Error(ErrorKind::invariant, "policy visits a point outside the space");
  if (on_path[static_cast<std::size_t>(node.point)])
    throw Error(ErrorKind::invariant, "policy path repeats a point");
  on_path[static_cast<std::size_t>(node.point)] = true;
  if (node.children.empty()) {
    if (depth + 1 != space_size)
      throw Error(ErrorKind::invariant, "policy is not exhaustive");
  } else {
    if (static_cast<int>(node.children.size()) != k)
      throw Error(ErrorKind::invariant, "policy branching factor mismatch");
    for (int child : node.children)
      validate_walk(tree, child, on_path, depth + 1, space_size, k);
  }
  on_path[static_cast<std::size_t>(node.point)] = false;
}

} // namespace

void PolicyTree::validate(int space_size) const {
  std::vector<bool> on_path(static_cast<std::size_t>(space_size), false);
  validate_walk(*this, root_, on_path, 0, space_size,
                static_cast<int>(codomain_.size()));
}

TraceRecord run_policy(const SearchSpace& space, const ValueTable& f,
                       const PolicyTree& policy, int m) {
  if (f.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
  if (m < 1) throw Error(ErrorKind::budget, "budget must be >= 1");
  if (m > space.size())
    throw Error(ErrorKind::budget, "budget " + std::to_string(m) +
                                       " exceeds space size " +
                                       std::to_string(space.size()));
  TraceRecord trace;
  trace.budget = m;
  int node_id = policy.root();
  for (int step = 0; step < m; ++step) {
    const PolicyNode& node = policy.node(node_id);
    const Rat& value = f.at(node.point);
    trace.steps.push_back(TraceStep{node.point, value});
    if (step + 1 == m) break;
    if (node.children.empty())
      throw Error(ErrorKind::budget, "policy tree ends before the budget");
    node_id = node.children[static_cast<std::size_t>(policy.branch_for(value))];
  }
  trace.validate();
  return trace;
}

} // namespace nfl
