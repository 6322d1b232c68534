#include <doctest.h>

#include <nfl/errors.hpp>
#include <nfl/value_table.hpp>

#include <vector>

using nfl::Orientation;
using nfl::Rat;
using nfl::ValueTable;

TEST_CASE("named generators tabulate with variable 0 most significant") {
  CHECK(nfl::onemax_table(3).values ==
        std::vector<Rat>{0, 1, 1, 2, 1, 2, 2, 3});
  CHECK(nfl::zeromax_table(2).values == std::vector<Rat>{2, 1, 1, 0});
  CHECK(nfl::parity_table(2).values == std::vector<Rat>{0, 1, 1, 0});
  CHECK(nfl::onemax_table(3).orientation == Orientation::maximize);
}

TEST_CASE("unique optimum and pessimum, with ties rejected") {
  const ValueTable f = nfl::onemax_table(2); // (0,1,1,2)
  CHECK(f.unique_optimum() == 3);
  CHECK(f.unique_pessimum() == 0);
  const ValueTable tied({Rat(1), Rat(1), Rat(0)}, Orientation::maximize);
  CHECK_THROWS_AS(tied.unique_optimum(), nfl::Error);
  CHECK(tied.unique_pessimum() == 2);
  const ValueTable minimize({Rat(3), Rat(1), Rat(2)}, Orientation::minimize);
  CHECK(minimize.unique_optimum() == 1);
  CHECK(minimize.unique_pessimum() == 0);
}

TEST_CASE("value_improves respects orientation strictly") {
  CHECK(nfl::value_improves(Rat(2), Rat(1), Orientation::maximize));
  CHECK_FALSE(nfl::value_improves(Rat(1), Rat(1), Orientation::maximize));
  CHECK(nfl::value_improves(Rat(1), Rat(2), Orientation::minimize));
  CHECK_FALSE(nfl::value_improves(Rat(2), Rat(1), Orientation::minimize));
}

TEST_CASE("signatures sort the value multiset; distinct_values deduplicates") {
  const ValueTable f({Rat(2), Rat(0), Rat(2), Rat(1)}, Orientation::maximize);
  CHECK(nfl::cup_signature(f).sorted_values == std::vector<Rat>{0, 1, 2, 2});
  CHECK(nfl::distinct_values(f.values) == std::vector<Rat>{0, 1, 2});
  const ValueTable g({Rat(0), Rat(2), Rat(1), Rat(2)}, Orientation::maximize);
  CHECK(nfl::cup_signature(f) == nfl::cup_signature(g));
}

TEST_CASE("table_less orders by value sequence lexicographically") {
  const ValueTable a({Rat(0), Rat(1)}, Orientation::maximize);
  const ValueTable b({Rat(0), Rat(2)}, Orientation::maximize);
  CHECK(nfl::table_less(a, b));
  CHECK_FALSE(nfl::table_less(b, a));
  CHECK_FALSE(nfl::table_less(a, a));
}

TEST_CASE("tables validate nonempty values and bounds-check access") {
  CHECK_THROWS_AS(ValueTable({}, Orientation::maximize), nfl::Error);
  const ValueTable f({Rat(1)}, Orientation::maximize);
  CHECK(f.at(0) == Rat(1));
  CHECK_THROWS_AS(f.at(1), nfl::Error);
  CHECK_THROWS_AS(f.at(-1), nfl::Error);
}
