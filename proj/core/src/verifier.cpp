#include "nfl/verifier.hpp"

#include "nfl/errors.hpp"
#include "nfl/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace nfl {

ProblemDistribution::ProblemDistribution(std::vector<WeightedTable> entries) {
  if (entries.empty())
    throw Error(ErrorKind::precondition, "distribution needs at least one table");
  for (const auto& e : entries) {
    if (e.weight < 0)
      throw Error(ErrorKind::precondition, "distribution weights must be >= 0");
  }
  // Zero-weight entries contribute nothing to any average and are not part of
  // the support, so they are dropped up front; duplicates are merged.
  std::map<ValueTable, Rat, bool (*)(const ValueTable&, const ValueTable&)>
      merged(&table_less);
  for (auto& e : entries) {
    if (e.weight == 0) continue;
    merged[e.table] += e.weight;
  }
  if (merged.empty())
    throw Error(ErrorKind::precondition, "distribution has empty support");
  Rat total = 0;
  const int size = merged.begin()->first.size();
  const Orientation orient = merged.begin()->first.orientation;
  for (auto& [table, weight] : merged) {
    if (table.size() != size)
      throw Error(ErrorKind::precondition, "distribution mixes table lengths");
    if (table.orientation != orient)
      throw Error(ErrorKind::precondition, "distribution mixes orientations");
    total += weight;
    support.push_back(WeightedTable{table, weight});
  }
  if (total != 1)
    throw Error(ErrorKind::precondition,
                "distribution weights sum to " + rational_to_string(total) +
                    ", expected 1");
}

int ProblemDistribution::space_size() const { return support.front().table.size(); }

Orientation ProblemDistribution::orientation() const {
  return support.front().table.orientation;
}

void VerificationReport::validate() const {
  if (verdict == Verdict::refuted && !witness)
    throw Error(ErrorKind::invariant, "refuted report lacks a witness");
  if (verdict == Verdict::verified && witness)
    throw Error(ErrorKind::invariant, "verified report carries a witness");
}

namespace {

// The policy only ever branches on values the run reveals, so codomain
// coverage is what matters: every value any candidate table can produce must
// have a branch.
std::vector<Rat> union_codomain(const std::vector<ValueTable>& tables) {
  std::set<Rat> values;
  for (const auto& t : tables)
    for (const auto& v : t.values) values.insert(v);
  return std::vector<Rat>(values.begin(), values.end());
}

int clamped_budget(const Measure& measure, int size) {
  return std::min(measure.horizon, size);
}

// Shared sweep: average every enumerable policy via the evaluation callback,
// then compare. Policies are materialised independently per index, so the
// sweep parallelises without shared state.
template <typename Eval>
VerificationReport sweep_policies(const std::string& claim, int space_size,
                                  const std::vector<Rat>& codomain,
                                  std::uint64_t cap, int threads, Eval&& eval) {
  PolicyEnumeration policies(SearchSpace::plain(space_size), codomain, cap);
  const std::size_t n = static_cast<std::size_t>(policies.count());

  VerificationReport report;
  report.claim = claim;
  report.per_policy.resize(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const PolicyTree policy = policies.at(BigInt(i));
    report.per_policy[i] = PolicyAverage{BigInt(i), eval(policy)};
  });

  report.verdict = Verdict::verified;
  for (std::size_t i = 1; i < n; ++i) {
    if (report.per_policy[i].average != report.per_policy[0].average) {
      report.verdict = Verdict::refuted;
      report.witness = PolicyPairWitness{BigInt(0), BigInt(i),
                                         report.per_policy[0].average,
                                         report.per_policy[i].average};
      break;
    }
  }
  if (report.verdict == Verdict::verified && !report.per_policy.empty())
    report.common_average = report.per_policy[0].average;
  report.validate();
  return report;
}

} // namespace

Rat average_performance(const FunctionSet& fs, const PolicyTree& policy,
                        const Measure& measure) {
  const SearchSpace space = SearchSpace::plain(fs.space_size());
  const int m = clamped_budget(measure, space.size());
  Rat total = 0;
  for (const auto& f : fs.members)
    total += apply_measure(measure, run_policy(space, f, policy, m),
                           fs.orientation());
  return total / static_cast<int>(fs.size());
}

Rat average_performance(const ProblemDistribution& dist, const PolicyTree& policy,
                        const Measure& measure) {
  const SearchSpace space = SearchSpace::plain(dist.space_size());
  const int m = clamped_budget(measure, space.size());
  Rat total = 0;
  for (const auto& entry : dist.support)
    total += entry.weight * apply_measure(measure,
                                          run_policy(space, entry.table, policy, m),
                                          dist.orientation());
  return total;
}

VerificationReport verify_nfl(const SearchSpace& space,
                              const std::vector<Rat>& codomain,
                              Orientation orientation, const Measure& measure,
                              std::uint64_t cap, int threads) {
  const FunctionSet fs = enumerate_functions(space, codomain, orientation, cap);
  return sweep_policies("nfl", space.size(), codomain, cap, threads,
                        [&](const PolicyTree& policy) {
                          return average_performance(fs, policy, measure);
                        });
}

VerificationReport verify_snfl(const FunctionSet& cup, const Measure& measure,
                               std::uint64_t cap, int threads) {
  const CupCheck check = is_cup(cup);
  if (!check.cup)
    throw Error(ErrorKind::precondition,
                "function set is not closed under permutation");
  const std::vector<Rat> codomain = union_codomain(cup.members);
  return sweep_policies("snfl", cup.space_size(), codomain, cap, threads,
                        [&](const PolicyTree& policy) {
                          return average_performance(cup, policy, measure);
                        });
}

VerificationReport verify_nunfl(const ProblemDistribution& dist,
                                const Measure& measure, std::uint64_t cap,
                                int threads) {
  std::vector<ValueTable> tables;
  for (const auto& e : dist.support) tables.push_back(e.table);
  const std::vector<Rat> codomain = union_codomain(tables);

  // Block uniformity is judged against the ambient space of all tables: the
  // distribution must put one common weight on every member of each
  // permutation class it touches. A class covered only partially (missing
  // members implicitly carry weight zero) is not block-uniform.
  bool block_uniform = true;
  std::optional<CupSignature> offending;
  std::map<CupSignature, std::pair<Rat, BigInt>> classes; // weight, seen count
  for (const auto& e : dist.support) {
    const CupSignature sig = cup_signature(e.table);
    auto [it, fresh] =
        classes.try_emplace(sig, std::make_pair(e.weight, BigInt(0)));
    if (!fresh && it->second.first != e.weight) {
      block_uniform = false;
      if (!offending) offending = sig;
    }
    it->second.second += 1;
  }
  for (const auto& [sig, info] : classes) {
    if (info.second != cup_class_size(sig)) {
      block_uniform = false;
      if (!offending) offending = sig;
    }
  }

  VerificationReport report = sweep_policies(
      "nunfl", dist.space_size(), codomain, cap, threads,
      [&](const PolicyTree& policy) {
        return average_performance(dist, policy, measure);
      });
  report.block_uniform = block_uniform;
  if (offending) report.non_uniform_signature = *offending;
  return report;
}

TraceMultisetReport trace_multiset_equal(const FunctionSet& cup,
                                         std::uint64_t cap, int threads) {
  const CupCheck check = is_cup(cup);
  if (!check.cup)
    throw Error(ErrorKind::precondition,
                "function set is not closed under permutation");
  const SearchSpace space = SearchSpace::plain(cup.space_size());
  const std::vector<Rat> codomain = union_codomain(cup.members);
  PolicyEnumeration policies(space, codomain, cap);
  const std::size_t n = static_cast<std::size_t>(policies.count());
  const int m = space.size();

  std::vector<std::vector<std::vector<Rat>>> multisets(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const PolicyTree policy = policies.at(BigInt(i));
    std::vector<std::vector<Rat>> sequences;
    for (const auto& f : cup.members)
      sequences.push_back(run_policy(space, f, policy, m).value_sequence());
    std::sort(sequences.begin(), sequences.end());
    multisets[i] = std::move(sequences);
  });

  TraceMultisetReport report;
  report.equal = true;
  if (!multisets.empty()) report.multiset = multisets[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (multisets[i] != multisets[0]) {
      report.equal = false;
      report.differing_policy = BigInt(i);
      report.differing_multiset = multisets[i];
      break;
    }
  }
  return report;
}

FocusPairResult focus_pair(const SearchSpace& space, const PolicyTree& a1,
                           const PolicyTree& a2, const ValueTable& f1, int m) {
  if (f1.size() != space.size())
    throw Error(ErrorKind::invariant, "table length does not match the space");
  if (m < 0) m = space.size();
  if (m < 1 || m > space.size())
    throw Error(ErrorKind::budget, "focus length must be in [1, space size]");

  const TraceRecord trace = run_policy(space, f1, a1, m);
  const std::vector<Rat> values = trace.value_sequence();

  // Walk a2's decision tree feeding it a1's value sequence; each node names
  // the point that must carry the next value of the shared trace.
  std::vector<char> assigned(static_cast<std::size_t>(space.size()), 0);
  std::vector<Rat> f2_values(static_cast<std::size_t>(space.size()), Rat(0));
  int node = a2.root();
  for (int i = 0; i < m; ++i) {
    const int point = a2.node(node).point;
    if (assigned[static_cast<std::size_t>(point)])
      throw Error(ErrorKind::invariant, "policy revisited a point");
    assigned[static_cast<std::size_t>(point)] = 1;
    f2_values[static_cast<std::size_t>(point)] = values[static_cast<std::size_t>(i)];
    if (i + 1 < m)
      node = a2.node(node).children[static_cast<std::size_t>(
          a2.branch_for(values[static_cast<std::size_t>(i)]))];
  }

  // Points a2 never reaches get f1's unused values, ascending value to
  // ascending point index — a fixed completion that keeps f2's signature equal
  // to f1's.
  std::vector<Rat> leftover = f1.values;
  std::sort(leftover.begin(), leftover.end());
  for (const Rat& used : values) {
    auto it = std::lower_bound(leftover.begin(), leftover.end(), used);
    leftover.erase(it);
  }
  std::size_t next = 0;
  for (int p = 0; p < space.size(); ++p) {
    if (!assigned[static_cast<std::size_t>(p)])
      f2_values[static_cast<std::size_t>(p)] = leftover[next++];
  }

  FocusPairResult result;
  result.f2 = ValueTable{f2_values, f1.orientation};
  result.trace_values = values;
  const TraceRecord replay = run_policy(space, result.f2, a2, m);
  result.replay_ok = replay.value_sequence() == values;
  return result;
}

std::string contestant_label(const Contestant& c) {
  if (std::holds_alternative<PolicyTree>(c)) return "policy";
  const auto& alg = std::get<AlgorithmContestant>(c);
  std::string label = alg_kind_name(alg.kind);
  if (std::holds_alternative<ExhaustiveSeeds>(alg.seeds)) {
    label += "[exact]";
  } else {
    label += "[seeds=" +
             std::to_string(
                 std::get<std::vector<std::uint64_t>>(alg.seeds).size()) +
             "]";
  }
  return label;
}

Rat contestant_average(const SearchSpace& space, const FunctionSet& fs,
                       const Contestant& c, const Measure& measure) {
  const int m = clamped_budget(measure, space.size());
  if (std::holds_alternative<PolicyTree>(c)) {
    const auto& policy = std::get<PolicyTree>(c);
    Rat total = 0;
    for (const auto& f : fs.members)
      total += apply_measure(measure, run_policy(space, f, policy, m),
                             fs.orientation());
    return total / static_cast<int>(fs.size());
  }
  const auto& alg = std::get<AlgorithmContestant>(c);
  Rat total = 0;
  for (const auto& f : fs.members)
    total += seed_average(alg.kind, space, f, measure, alg.seeds, m);
  return total / static_cast<int>(fs.size());
}

GapReport demonstrate_gap(const SearchSpace& space, const FunctionSet& fs,
                          const Contestant& a, const Contestant& b,
                          const Measure& measure) {
  if (fs.space_size() != space.size())
    throw Error(ErrorKind::invariant, "function set does not match the space");
  if (is_cup(fs).cup)
    throw Error(ErrorKind::precondition,
                "function set is closed under permutation; no gap is possible");
  GapReport report;
  report.label_a = contestant_label(a);
  report.label_b = contestant_label(b);
  report.average_a = contestant_average(space, fs, a, measure);
  report.average_b = contestant_average(space, fs, b, measure);
  report.difference = report.average_a - report.average_b;
  return report;
}

} // namespace nfl
