#include <doctest.h>

#include <nfl/counterexamples.hpp>
#include <nfl/errors.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

using nfl::BitSemantics;
using nfl::Clause;
using nfl::Max2SatInstance;
using nfl::Orientation;
using nfl::Rat;
using nfl::RatSemantics;
using nfl::Tour;
using nfl::TspConstraint;
using nfl::TspFeasibility;
using nfl::TspInstance;
using nfl::ValueTable;

namespace {

// The ring-with-chords instance used across the suite: cost depends only on
// the circular distance between cities, (d1, d2, d3) = (1, 2, 9).
TspInstance ring_instance() {
  const std::vector<Rat> by_gap{0, 1, 2, 9, 2, 1};
  std::vector<std::vector<Rat>> m(6, std::vector<Rat>(6, Rat(0)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m[i][j] = by_gap[static_cast<std::size_t>((j - i + 6) % 6)];
  return TspInstance(6, m);
}

// Rebuild a constraint's edge-count row over the reported unknown order.
std::vector<Rat> edge_row(const Tour& tour,
                          const std::vector<std::pair<int, int>>& edge_order) {
  std::vector<Rat> row(edge_order.size(), Rat(0));
  for (std::size_t s = 0; s < tour.size(); ++s) {
    int a = tour[s];
    int b = tour[(s + 1) % tour.size()];
    if (a > b) std::swap(a, b);
    const auto it = std::find(edge_order.begin(), edge_order.end(),
                              std::make_pair(a, b));
    REQUIRE(it != edge_order.end());
    row[static_cast<std::size_t>(it - edge_order.begin())] += 1;
  }
  return row;
}

} // namespace

TEST_CASE("a single or-clause gives the two-zero table") {
  const Max2SatInstance inst(3, {Clause{{0, true}, {1, true}}});
  CHECK(inst.clause_satisfied(0, 0b100)); // x0 true
  CHECK(inst.clause_satisfied(0, 0b010)); // x1 true
  CHECK_FALSE(inst.clause_satisfied(0, 0b001)); // only x2 true
  const ValueTable table = nfl::max2sat_table(inst);
  CHECK(table.orientation == Orientation::maximize);
  CHECK(table.values == std::vector<Rat>{0, 0, 1, 1, 1, 1, 1, 1});

  CHECK_THROWS_AS(Max2SatInstance(2, {Clause{{0, true}, {0, false}}}),
                  nfl::Error); // clause on one variable
  CHECK_THROWS_AS(Max2SatInstance(2, {Clause{{0, true}, {2, true}}}),
                  nfl::Error); // variable out of range
}

TEST_CASE("the clause search recovers the unique realizing formula") {
  const ValueTable table({0, 0, 1, 1, 1, 1, 1, 1}, Orientation::maximize);
  const auto found = nfl::max2sat_realizable(table, 3);
  REQUIRE(found.instance.has_value());
  CHECK(found.clause_types == 12);
  CHECK(found.max_multiplicity == 1);
  CHECK(found.candidates_total == 4096); // 2^12 multiplicity vectors
  // only (x0 or x1) is false at exactly {000, 001}
  REQUIRE(found.instance->clauses.size() == 1);
  const Clause& c = found.instance->clauses[0];
  CHECK(c.a.var == 0);
  CHECK(c.a.positive);
  CHECK(c.b.var == 1);
  CHECK(c.b.positive);
  CHECK(nfl::max2sat_table(*found.instance).values == table.values);
}

TEST_CASE("the permuted table is outside the clause-count landscape family") {
  const ValueTable permuted({0, 1, 1, 0, 1, 1, 1, 1}, Orientation::maximize);
  const auto search = nfl::max2sat_realizable(permuted, 3);
  CHECK_FALSE(search.instance.has_value());
  CHECK(search.clause_types == 12);
  CHECK(search.max_multiplicity == 1);
  CHECK(search.candidates_total == 4096);
  CHECK(search.nodes_explored > 0);
  CHECK(search.nodes_explored < 4096); // pruning bites
}

TEST_CASE("tours canonicalize by rotation and reflection") {
  CHECK(nfl::canonical_tour({2, 3, 1}) == Tour{1, 2, 3});
  CHECK(nfl::canonical_tour({1, 3, 2}) == Tour{1, 2, 3});
  CHECK(nfl::canonical_tour({4, 3, 2, 1}) == Tour{1, 2, 3, 4});
  CHECK_THROWS_AS(nfl::validate_tour({1, 2, 2}, 3), nfl::Error);
  CHECK_THROWS_AS(nfl::validate_tour({1, 2, 4}, 3), nfl::Error);
  CHECK_THROWS_AS(nfl::validate_tour({1, 2}, 3), nfl::Error);

  const auto three = nfl::all_canonical_tours(4);
  CHECK(three == std::vector<Tour>{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}});
  CHECK(nfl::all_canonical_tours(6).size() == 60);
  CHECK_THROWS_AS(nfl::all_canonical_tours(12, 1000), nfl::Error);

  const auto neighbors = nfl::two_opt_neighbors({1, 2, 3, 4, 5, 6});
  CHECK(neighbors.size() == 6);
  for (const Tour& t : neighbors) CHECK(t == nfl::canonical_tour(t));
  const auto full = nfl::two_opt_neighbors({1, 2, 3, 4, 5, 6}, true);
  CHECK(full.size() > 6);
}

TEST_CASE("tour lengths on the ring instance match hand sums") {
  const TspInstance inst = ring_instance();
  CHECK(nfl::tour_length(inst, {1, 2, 3, 4, 5, 6}) == Rat(6));
  CHECK(nfl::tour_length(inst, {1, 4, 2, 5, 3, 6}) == Rat(32));
  CHECK(nfl::tour_length(inst, {1, 2, 3, 4, 6, 5}) == Rat(8));
}

TEST_CASE("the seven-equation neighborhood system is consistent") {
  const Tour ring{1, 2, 3, 4, 5, 6};
  std::vector<TspConstraint> constraints{{ring, Rat(32)}};
  for (const Tour& nb : nfl::two_opt_neighbors(ring))
    constraints.push_back({nb, Rat(8)});
  REQUIRE(constraints.size() == 7);

  const auto result = nfl::tsp_realizable(constraints, 6);
  CHECK(result.status == TspFeasibility::consistent);
  REQUIRE(result.witness.has_value());
  CHECK(result.edge_order.size() == 15);
  for (const TspConstraint& c : constraints)
    CHECK(nfl::tour_length(*result.witness, c.tour) == c.length);

  // ... but only with negative costs: no nonnegative matrix fits
  const auto nonneg = nfl::tsp_realizable(constraints, 6, true);
  CHECK(nonneg.status == TspFeasibility::infeasible_nonnegative);
  CHECK_FALSE(nonneg.witness.has_value());
  REQUIRE(nonneg.farkas_certificate.has_value());
  const auto& farkas = *nonneg.farkas_certificate;
  REQUIRE(farkas.multipliers.size() == constraints.size());
  // replay the certificate: y*A >= 0 componentwise while y*b < 0
  std::vector<Rat> combined(nonneg.edge_order.size(), Rat(0));
  Rat rhs(0);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto row = edge_row(constraints[r].tour, nonneg.edge_order);
    for (std::size_t k = 0; k < row.size(); ++k)
      combined[k] += farkas.multipliers[r] * row[k];
    rhs += farkas.multipliers[r] * constraints[r].length;
  }
  CHECK(combined == farkas.combined_row);
  CHECK(rhs == farkas.combined_rhs);
  CHECK(rhs < 0);
  for (const Rat& v : combined) CHECK(v >= 0);
}

TEST_CASE("swapping best and worst over the full tour table is contradictory") {
  const TspInstance inst = ring_instance();
  const auto tours = nfl::all_canonical_tours(6);
  std::vector<Rat> lengths;
  for (const Tour& t : tours) lengths.push_back(nfl::tour_length(inst, t));
  const auto best = std::min_element(lengths.begin(), lengths.end());
  const auto worst = std::max_element(lengths.begin(), lengths.end());
  CHECK(*best == Rat(6));
  CHECK(*worst == Rat(32));
  std::iter_swap(best, worst);

  std::vector<TspConstraint> constraints;
  for (std::size_t i = 0; i < tours.size(); ++i)
    constraints.push_back({tours[i], lengths[i]});
  const auto result = nfl::tsp_realizable(constraints, 6);
  CHECK(result.status == TspFeasibility::inconsistent);
  REQUIRE(result.linear_certificate.has_value());
  const auto& cert = *result.linear_certificate;
  REQUIRE(cert.multipliers.size() == constraints.size());
  // replay: y*A = 0 on every edge while y*b != 0
  std::vector<Rat> combined(result.edge_order.size(), Rat(0));
  Rat rhs(0);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto row = edge_row(constraints[r].tour, result.edge_order);
    for (std::size_t k = 0; k < row.size(); ++k)
      combined[k] += cert.multipliers[r] * row[k];
    rhs += cert.multipliers[r] * constraints[r].length;
  }
  for (const Rat& v : combined) CHECK(v == 0);
  CHECK(rhs == cert.combined_rhs);
  CHECK(rhs != 0);
}

TEST_CASE("one tour with two different lengths is already inconsistent") {
  const std::vector<TspConstraint> conflict{{{1, 2, 3}, Rat(5)},
                                            {{2, 3, 1}, Rat(7)}};
  const auto result = nfl::tsp_realizable(conflict, 3);
  CHECK(result.status == TspFeasibility::inconsistent);
  CHECK(result.linear_certificate.has_value());
}

TEST_CASE("the tour landscape feeds the structure metrics") {
  const auto landscape = nfl::tsp_landscape(ring_instance());
  CHECK(landscape.space.size() == 60);
  CHECK(landscape.table.orientation == Orientation::minimize);
  CHECK(landscape.tours.size() == 60);
  CHECK(landscape.space.has_neighborhood());
  const auto at = [&](const Tour& t) {
    const auto it = std::find(landscape.tours.begin(), landscape.tours.end(), t);
    REQUIRE(it != landscape.tours.end());
    return landscape.table.at(static_cast<int>(it - landscape.tours.begin()));
  };
  CHECK(at({1, 2, 3, 4, 5, 6}) == Rat(6));
  CHECK(at({1, 4, 2, 5, 3, 6}) == Rat(32));
}

TEST_CASE("agreement counting and target search over boolean semantics") {
  const std::vector<BitSemantics> programs{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 0}};
  CHECK(nfl::boolgp_objective(programs, {0, 0, 0, 1}) ==
        std::vector<int>{4, 2, 1});

  const auto hit = nfl::boolgp_realizable(programs, {4, 2, 1});
  REQUIRE(hit.target.has_value());
  CHECK(*hit.target == BitSemantics{0, 0, 0, 1});
  CHECK(hit.candidates_total == 16);

  // permuting the scores of programs 2 and 3 leaves no consistent target: a
  // perfect score pins the target to program 1's semantics, which scores the
  // others 2 and 1, not 1 and 2
  const auto miss = nfl::boolgp_realizable(programs, {4, 1, 2});
  CHECK_FALSE(miss.target.has_value());
  CHECK(miss.candidates_total == 16);

  CHECK_THROWS_AS(nfl::boolgp_objective({{0, 1}, {0, 1, 0}}, {0, 1}), nfl::Error);
  CHECK_THROWS_AS(nfl::boolgp_realizable(programs, {4, 2}), nfl::Error);
  CHECK_THROWS_AS(nfl::boolgp_objective({{0, 2}}, {0, 1}), nfl::Error);
}

TEST_CASE("sphere systems decide exactly and certify both outcomes") {
  const std::vector<RatSemantics> centers{{0, 0}, {4, 0}, {0, 4}};

  const auto hit = nfl::spheres_intersect(centers, {Rat(2), Rat(10), Rat(10)});
  CHECK(hit.intersects);
  REQUIRE(hit.min_residual.has_value());
  CHECK(*hit.min_residual == 0);
  REQUIRE(hit.witness.has_value());
  CHECK(*hit.witness == RatSemantics{1, 1});

  const auto miss = nfl::spheres_intersect(centers, {Rat(10), Rat(2), Rat(10)});
  CHECK_FALSE(miss.intersects);
  REQUIRE(miss.min_residual.has_value());
  CHECK(*miss.min_residual == 3); // nearest the constraints get to agreeing
  CHECK_FALSE(miss.witness.has_value());
  CHECK_FALSE(miss.linear_inconsistency.has_value());
}

TEST_CASE("positive-dimension intersections may lack a rational witness") {
  // two circles crossing at (1, +-sqrt(3)): a real intersection with no
  // rational point on the probe line
  const auto irrational =
      nfl::spheres_intersect({{0, 0}, {2, 0}}, {Rat(4), Rat(4)});
  CHECK(irrational.intersects);
  REQUIRE(irrational.min_residual.has_value());
  CHECK(*irrational.min_residual == -3);
  CHECK_FALSE(irrational.witness.has_value());

  // same geometry scaled so the crossing points are rational: witness found
  const auto rational =
      nfl::spheres_intersect({{0, 0}, {2, 0}}, {Rat(5), Rat(5)});
  CHECK(rational.intersects);
  REQUIRE(rational.witness.has_value());
  const RatSemantics& w = *rational.witness;
  REQUIRE(w.size() == 2);
  CHECK((w[0] - 0) * (w[0] - 0) + w[1] * w[1] == 5);
  CHECK((w[0] - 2) * (w[0] - 2) + w[1] * w[1] == 5);

  // concentric circles of different radii fail at the linear stage
  const auto nested = nfl::spheres_intersect({{0, 0}, {0, 0}}, {Rat(1), Rat(4)});
  CHECK_FALSE(nested.intersects);
  CHECK(nested.linear_inconsistency.has_value());
}

TEST_CASE("semantic duplicates must score identically") {
  const ValueTable bad({0, 1, 2}, Orientation::minimize);
  const auto caught = nfl::duplicated_semantics_check({{0, 1}}, bad);
  CHECK_FALSE(caught.consistent);
  REQUIRE(caught.offender.has_value());
  CHECK(*caught.offender == std::array<int, 3>{0, 0, 1});

  const ValueTable fine({1, 1, 2}, Orientation::minimize);
  CHECK(nfl::duplicated_semantics_check({{0, 1}}, fine).consistent);
}
