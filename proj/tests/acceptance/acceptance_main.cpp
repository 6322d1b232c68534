// Acceptance gate: one self-contained check per shipped claim, each printing
// a single PASS/FAIL line with its wall time.  Run everything with no
// arguments, or a single check with --criterion N.  The process exits nonzero
// if any requested criterion fails or overruns its time budget, so each line
// can serve as its own test entry.

#include <nfl/algorithms.hpp>
#include <nfl/counterexamples.hpp>
#include <nfl/enumeration.hpp>
#include <nfl/errors.hpp>
#include <nfl/measure.hpp>
#include <nfl/metrics.hpp>
#include <nfl/policy.hpp>
#include <nfl/search_space.hpp>
#include <nfl/value_table.hpp>
#include <nfl/verifier.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nfl::AlgKind;
using nfl::BigInt;
using nfl::BitSemantics;
using nfl::Clause;
using nfl::FunctionSet;
using nfl::Lcg64;
using nfl::Max2SatInstance;
using nfl::Measure;
using nfl::MeasureKind;
using nfl::Orientation;
using nfl::PolicyEnumeration;
using nfl::PolicyTree;
using nfl::ProblemDistribution;
using nfl::Rat;
using nfl::SearchSpace;
using nfl::Tour;
using nfl::TspConstraint;
using nfl::TspFeasibility;
using nfl::TspInstance;
using nfl::ValueTable;
using nfl::Verdict;
using nfl::WeightedTable;

namespace {

struct Failure {
  std::string reason;
};

void expect(bool ok, const std::string& reason) {
  if (!ok) throw Failure{reason};
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// The six-city instance whose cost depends only on circular distance,
// (d1, d2, d3) = (1, 2, 9): ring tour 6, all-chords tour 32, one-exchange 8.
TspInstance ring_instance() {
  const std::vector<Rat> by_gap{0, 1, 2, 9, 2, 1};
  std::vector<std::vector<Rat>> m(6, std::vector<Rat>(6, Rat(0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m[i][j] = by_gap[static_cast<std::size_t>((j - i + 6) % 6)];
  return TspInstance(6, m);
}

// 1. The one-clause formula (x0 or x1) over three variables scores the eight
//    assignments 000..111 as exactly (0,0,1,1,1,1,1,1).
void criterion_01() {
  const Max2SatInstance inst(3, {Clause{{0, true}, {1, true}}});
  const ValueTable table = nfl::max2sat_table(inst);
  const std::vector<Rat> want{0, 0, 1, 1, 1, 1, 1, 1};
  expect(table.orientation == Orientation::maximize,
         "satisfied-clause counts should be maximized");
  expect(table.values == want, "clause-count table mismatch");
}

// 2. Permuting two entries of that table leaves the clause-count family: the
//    realizability search returns none after exhausting every clause multiset
//    with multiplicities at most 1 over the 12 distinct two-variable clauses.
void criterion_02() {
  const ValueTable permuted({0, 1, 1, 0, 1, 1, 1, 1}, Orientation::maximize);
  const auto search = nfl::max2sat_realizable(permuted, 3);
  expect(!search.instance.has_value(),
         "a formula was found for the permuted table");
  expect(search.clause_types == 12,
         "expected 12 distinct two-variable clause types");
  expect(search.max_multiplicity == 1,
         "expected clause multiplicities capped at 1");
  expect(search.candidates_total == 4096,
         "expected 4096 = 2^12 candidate multisets");
}

// 3. Tour lengths on the ring instance: 6 for (123456), 32 for (142536),
//    8 for (123465).
void criterion_03() {
  const TspInstance inst = ring_instance();
  expect(nfl::tour_length(inst, {1, 2, 3, 4, 5, 6}) == Rat(6),
         "ring tour should cost 6");
  expect(nfl::tour_length(inst, {1, 4, 2, 5, 3, 6}) == Rat(32),
         "all-chords tour should cost 32");
  expect(nfl::tour_length(inst, {1, 2, 3, 4, 6, 5}) == Rat(8),
         "single-exchange tour should cost 8");
}

// 4. The seven-equation system -- one tour pinned at 32 with all six of its
//    2-opt neighbors pinned at 8 -- expected inconsistent under exact
//    elimination alone.
void criterion_04() {
  const Tour tour{1, 2, 3, 4, 5, 6};
  std::vector<TspConstraint> constraints{{tour, Rat(32)}};
  for (const Tour& nb : nfl::two_opt_neighbors(tour))
    constraints.push_back({nb, Rat(8)});
  expect(constraints.size() == 7, "expected exactly seven constraints");
  const auto result = nfl::tsp_realizable(constraints, 6);
  expect(result.status == TspFeasibility::inconsistent,
         "exact elimination finds the system consistent: a signed cost matrix "
         "satisfies all seven equations and its witness replays every "
         "constraint; the refutation needs either the nonnegativity side "
         "conditions (phase-1 simplex emits a Farkas certificate) or the full "
         "60-tour swapped table (rank-deficient elimination certificate)");
}

// 5. Boolean program semantics: agreement scores (4,2,1) are realized by the
//    target (0,0,0,1); scores (4,1,2) are realized by none of the 16 targets.
void criterion_05() {
  const std::vector<BitSemantics> programs{
      {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 0}};
  const auto hit = nfl::boolgp_realizable(programs, {4, 2, 1});
  expect(hit.target.has_value(), "scores (4,2,1) should be realizable");
  expect(*hit.target == BitSemantics{0, 0, 0, 1}, "expected target (0,0,0,1)");
  expect(hit.candidates_total == 16, "expected 16 candidate targets");

  const auto miss = nfl::boolgp_realizable(programs, {4, 1, 2});
  expect(!miss.target.has_value(),
         "scores (4,1,2) should have no realizing target");
  expect(miss.candidates_total == 16, "expected all 16 targets examined");
}

// 6. The plain identity: for |X| in {2,3} and codomain {0,1}, every
//    enumerated deterministic policy has the same average over all functions,
//    under best-so-far and mean-of-trace alike.
void criterion_06() {
  const std::vector<Rat> codomain{0, 1};
  for (const int size : {2, 3}) {
    const SearchSpace space = SearchSpace::plain(size);
    for (const MeasureKind kind :
         {MeasureKind::best_so_far, MeasureKind::mean_of_trace}) {
      const auto report = nfl::verify_nfl(space, codomain,
                                          Orientation::maximize,
                                          Measure(kind, 2));
      expect(report.verdict == Verdict::verified,
             "policies disagree at |X|=" + std::to_string(size));
      expect(report.per_policy.size() == (size == 2 ? 2u : 12u),
             "unexpected policy count at |X|=" + std::to_string(size));
      expect(report.common_average.has_value(), "missing common average");
      // best of two binary draws averages 3/4; each visited value has a
      // uniform {0,1} marginal over the full cube, so a two-step mean is 1/2
      const Rat want = kind == MeasureKind::best_so_far ? Rat(3, 4) : Rat(1, 2);
      expect(*report.common_average == want,
             "common average should be " + str(want) + ", got " +
                 str(*report.common_average));
    }
  }
}

// 7. The sharpened identity on one permutation class: all 24 policies over
//    the injective {0,1,2} class on three points average best-of-two = 5/3.
void criterion_07() {
  const FunctionSet cls =
      nfl::cup_class(ValueTable({0, 1, 2}, Orientation::maximize));
  const auto report =
      nfl::verify_snfl(cls, Measure(MeasureKind::best_so_far, 2));
  expect(report.verdict == Verdict::verified, "the class separated policies");
  expect(report.per_policy.size() == 24,
         "expected 24 policies over 3 points and 3 values");
  expect(report.common_average.has_value(), "missing common average");
  expect(*report.common_average == Rat(5, 3),
         "common average should be 5/3, got " + str(*report.common_average));
}

// 8. Same class, trace level: every policy's multiset of full value traces is
//    exactly the 6 permutations of (0,1,2).
void criterion_08() {
  const FunctionSet cls =
      nfl::cup_class(ValueTable({0, 1, 2}, Orientation::maximize));
  const auto report = nfl::trace_multiset_equal(cls);
  expect(report.equal, "some policy saw a different trace multiset");
  const std::vector<std::vector<Rat>> want{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  expect(report.multiset == want,
         "trace multiset is not the 6 permutations of (0,1,2)");
}

// 9. Weighted identity, both directions: uniform weights over a full class
//    verify; a two-support distribution on the same class yields a concrete
//    policy pair with unequal weighted averages.
void criterion_09() {
  const Measure best2(MeasureKind::best_so_far, 2);
  const FunctionSet cls =
      nfl::cup_class(ValueTable({0, 1, 2}, Orientation::maximize));
  std::vector<WeightedTable> uniform;
  for (const ValueTable& f : cls.members)
    uniform.push_back(WeightedTable{f, Rat(1, 6)});
  const auto even = nfl::verify_nunfl(ProblemDistribution(uniform), best2);
  expect(even.verdict == Verdict::verified, "uniform weights should verify");
  expect(even.block_uniform == true, "uniform class weights are block-uniform");
  expect(even.common_average.has_value() && *even.common_average == Rat(5, 3),
         "weighted average should equal the unweighted class average 5/3");

  const ProblemDistribution skewed(
      {WeightedTable{ValueTable({0, 1, 2}, Orientation::maximize), Rat(1, 2)},
       WeightedTable{ValueTable({2, 1, 0}, Orientation::maximize), Rat(1, 2)}});
  const auto uneven = nfl::verify_nunfl(skewed, best2);
  expect(uneven.block_uniform == false,
         "partial class coverage is not block-uniform");
  expect(uneven.verdict == Verdict::refuted,
         "a two-support distribution should refute");
  expect(uneven.witness.has_value(), "missing witness policy pair");
  expect(uneven.witness->average_a != uneven.witness->average_b,
         "witness averages should differ");
}

// 10. The focus construction, fuzzed: for ten seeded (a1, a2, f1) fixtures on
//     up to four points, the rebuilt f2 makes a2's run replay a1's exact
//     value trace.
void criterion_10() {
  Lcg64 rng(2026);
  const std::vector<Rat> codomain{0, 1, 2};
  for (int i = 0; i < 10; ++i) {
    const int size = 2 + i % 3;
    const SearchSpace space = SearchSpace::plain(size);
    std::vector<Rat> values;
    for (int x = 0; x < size; ++x)
      values.push_back(Rat(static_cast<int>(rng.below(3))));
    const ValueTable f1(values, Orientation::maximize);
    PolicyEnumeration policies(space, codomain);
    const std::uint64_t count = policies.count().convert_to<std::uint64_t>();
    const PolicyTree a1 = policies.at(BigInt(rng.below(count)));
    const PolicyTree a2 = policies.at(BigInt(rng.below(count)));

    const auto pair = nfl::focus_pair(space, a1, a2, f1);
    const std::string tag = "fixture " + std::to_string(i) + ": ";
    expect(pair.replay_ok, tag + "replay flag is false");
    const auto original = nfl::run_policy(space, f1, a1, size);
    const auto rebuilt = nfl::run_policy(space, pair.f2, a2, size);
    expect(original.value_sequence() == rebuilt.value_sequence(),
           tag + "value traces differ");
    expect(rebuilt.value_sequence() == pair.trace_values,
           tag + "reported trace differs from the replayed one");
    expect(nfl::cup_signature(pair.f2) == nfl::cup_signature(f1),
           tag + "value multiset not preserved");
  }
}

// 11. On the singleton set {onemax, n=3}, first-improvement climbing averaged
//     over every start strictly beats random search averaged over every seed,
//     best-so-far at horizon 4, one evaluation per newly probed point.
void criterion_11() {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  const Measure best4(MeasureKind::best_so_far, 4);
  const Rat climber = nfl::seed_average(AlgKind::best_first, space, f, best4,
                                        nfl::ExhaustiveSeeds{}, 4);
  const Rat sampler = nfl::seed_average(AlgKind::random_search, space, f,
                                        best4, nfl::ExhaustiveSeeds{}, 4);
  expect(climber == Rat(5, 2),
         "exhaustive climb average should be 5/2, got " + str(climber));
  expect(sampler == Rat(87, 35),
         "exhaustive random-search average should be 87/35, got " +
             str(sampler));
  expect(climber > sampler, "the climb should strictly beat random draws");
}

// 12. Structure metrics on onemax, n=4: locality (1, 7/6) holds, steepness
//     (1, 4) holds, distance correlation -1 within 1e-9, one local optimum,
//     separability score 1.
void criterion_12() {
  const SearchSpace space = SearchSpace::bitstrings(4);
  const ValueTable f = nfl::onemax_table(4);
  const auto loc = nfl::locality(space, f);
  expect(loc.left == Rat(1) && loc.right == Rat(7, 6) && loc.holds,
         "locality should be (1, 7/6) and hold; got (" + str(loc.left) +
             ", " + str(loc.right) + ")");
  const auto steep = nfl::steepness(space, f);
  expect(steep.left == Rat(1) && steep.right == Rat(4) && steep.holds,
         "steepness should be (1, 4) and hold; got (" + str(steep.left) +
             ", " + str(steep.right) + ")");
  const double corr = nfl::fdc(space, f);
  expect(std::abs(corr - (-1.0)) <= 1e-9,
         "distance correlation should be -1 within 1e-9, got " + str(corr));
  expect(nfl::count_local_optima(space, f) == 1,
         "expected a single local optimum");
  expect(nfl::modularity_score(space, f) == Rat(1),
         "expected full separability");
}

// 13. The extreme-swap trap: it preserves the value multiset, the two-member
//     set {f, trap(f)} is not a full permutation class, and the two climb
//     orientations tie exactly on the set at horizons 2 and 8.  (At horizon 3
//     they genuinely differ, 37/16 vs 9/4: equality is not an artifact of the
//     set being permutation-closed.)
void criterion_13() {
  const SearchSpace space = SearchSpace::bitstrings(3);
  const ValueTable f = nfl::onemax_table(3);
  const ValueTable trap = nfl::trap_transform(f);
  expect(nfl::cup_signature(trap) == nfl::cup_signature(f),
         "the swap must preserve the value multiset");
  expect(!nfl::is_cup(FunctionSet({f, trap})).cup,
         "{f, trap(f)} should not be a full permutation class");

  for (const int m : {2, 8}) {
    const Measure best(MeasureKind::best_so_far, m);
    Rat up(0), down(0);
    for (const ValueTable* g : {&f, &trap}) {
      up += nfl::exact_local_search_average(AlgKind::best_first, space, *g,
                                            best, m);
      down += nfl::exact_local_search_average(AlgKind::worst_first, space, *g,
                                              best, m);
    }
    expect(up == down, "climb orientations separate at horizon " +
                           std::to_string(m));
    const Rat average = up / 2;
    const Rat want = m == 2 ? Rat(33, 16) : Rat(3);
    expect(average == want, "set average at horizon " + std::to_string(m) +
                                " should be " + str(want) + ", got " +
                                str(average));
  }
}

// 14. Penalty composites: subtracting the scaled constraint g = (0,0,1) at
//     weight 10 from each member of the injective class yields six distinct
//     functions that no longer form a permutation-closed set.
void criterion_14() {
  const FunctionSet cls =
      nfl::cup_class(ValueTable({0, 1, 2}, Orientation::maximize));
  const ValueTable g({0, 0, 1}, Orientation::maximize);
  std::vector<ValueTable> composites;
  for (const ValueTable& f : cls.members)
    composites.push_back(nfl::penalty_composite(f, g, Rat(10)));
  const FunctionSet family(std::move(composites));
  expect(family.size() == 6, "expected six distinct composites");
  expect(!nfl::is_cup(family).cup,
         "the penalty family should fall outside a single permutation class");
}

// 15. Policy counting: the enumeration agrees with an independent evaluation
//     of C(s) = s * C(s-1)^k for every s <= 4, k <= 3, and the largest family
//     (55296 policies) materializes in full.
void criterion_15() {
  expect(PolicyTree::count(0, 2) == 1 && PolicyTree::count(1, 3) == 1,
         "base cases should count 1");
  for (int k = 1; k <= 3; ++k) {
    BigInt prev = 1;
    for (int s = 2; s <= 4; ++s) {
      BigInt want = s;
      for (int i = 0; i < k; ++i) want *= prev;
      expect(PolicyTree::count(s, k) == want,
             "count mismatch at s=" + std::to_string(s) +
                 ", k=" + std::to_string(k));
      prev = want;
    }
  }
  expect(PolicyTree::count(4, 3) == 55296, "largest case should be 55296");

  PolicyEnumeration policies(SearchSpace::plain(4), {Rat(0), Rat(1), Rat(2)});
  expect(policies.count() == 55296,
         "enumeration disagrees with the closed form");
  const auto all = policies.to_vector();
  expect(all.size() == 55296, "materialized family should have 55296 members");
  all.front().validate(4);
  all.back().validate(4);
}

struct Criterion {
  int id;
  const char* summary;
  long budget_ms;
  void (*run)();
};

const Criterion kCriteria[] = {
    {1, "single-clause satisfaction table", 1000, criterion_01},
    {2, "permuted table has no realizing formula", 1000, criterion_02},
    {3, "ring-instance tour lengths", 1000, criterion_03},
    {4, "seven-equation tour system inconsistency", 1000, criterion_04},
    {5, "agreement scores realizable and not", 1000, criterion_05},
    {6, "uniform identity on tiny cubes", 1000, criterion_06},
    {7, "one permutation class, equal averages", 1000, criterion_07},
    {8, "trace multisets coincide across policies", 1000, criterion_08},
    {9, "weighted identity, both directions", 1000, criterion_09},
    {10, "focus pairs replay fuzzed traces", 1000, criterion_10},
    {11, "climbing beats sampling on onemax", 5000, criterion_11},
    {12, "structure metrics on onemax", 1000, criterion_12},
    {13, "extreme-swap trap equalizes climbers", 1000, criterion_13},
    {14, "penalty composites leave the class", 1000, criterion_14},
    {15, "policy counts match the recurrence", 10000, criterion_15},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      try {
        selected = std::stoi(argv[++i]);
      } catch (const std::exception&) {
        std::cerr << "not a criterion number: " << argv[i] << "\n";
        return 2;
      }
    } else if (arg == "--help" || arg == "-h") {
      std::cout << "usage: nflab_acceptance [--criterion N]\n";
      return 0;
    } else {
      std::cerr << "unknown argument: " << arg << "\n";
      return 2;
    }
  }

  int ran = 0;
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.id != selected) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      c.run();
    } catch (const Failure& f) {
      reason = f.reason;
    } catch (const std::exception& e) {
      reason = std::string("unexpected exception: ") + e.what();
    }
    const long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (reason.empty() && ms > c.budget_ms)
      reason = "exceeded the " + std::to_string(c.budget_ms) + " ms budget";
    std::printf("criterion %02d: %s (%lld ms) -- %s\n", c.id,
                reason.empty() ? "PASS" : "FAIL", ms, c.summary);
    if (!reason.empty()) {
      std::printf("              %s\n", reason.c_str());
      ++failed;
    }
  }

  if (ran == 0) {
    std::cerr << "no criterion numbered " << selected << "\n";
    return 2;
  }
  if (selected == 0)
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
