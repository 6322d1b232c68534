#include <doctest.h>

#include <nfl/enumeration.hpp>
#include <nfl/errors.hpp>

#include <set>
#include <vector>

using nfl::BigInt;
using nfl::CupSignature;
using nfl::FunctionSet;
using nfl::Orientation;
using nfl::Rat;
using nfl::SearchSpace;
using nfl::ValueTable;

TEST_CASE("enumerate_functions lists |codomain|^|X| tables lexicographically") {
  const FunctionSet fs = nfl::enumerate_functions(
      SearchSpace::plain(2), {Rat(0), Rat(1)}, Orientation::maximize);
  REQUIRE(fs.size() == 4);
  CHECK(fs.members[0].values == std::vector<Rat>{0, 0});
  CHECK(fs.members[1].values == std::vector<Rat>{0, 1});
  CHECK(fs.members[2].values == std::vector<Rat>{1, 0});
  CHECK(fs.members[3].values == std::vector<Rat>{1, 1});
  CHECK_THROWS_AS(nfl::enumerate_functions(SearchSpace::plain(30), {Rat(0), Rat(1)},
                                           Orientation::maximize, 1000),
                  nfl::Error);
}

TEST_CASE("cup_class_size is the multinomial coefficient") {
  CHECK(nfl::cup_class_size(CupSignature{{Rat(0), Rat(1), Rat(2)}}) == 6);
  CHECK(nfl::cup_class_size(CupSignature{{Rat(0), Rat(0), Rat(1)}}) == 3);
  CHECK(nfl::cup_class_size(CupSignature{{Rat(5), Rat(5), Rat(5)}}) == 1);
  CHECK(nfl::cup_class_size(CupSignature{{Rat(0), Rat(0), Rat(1), Rat(1)}}) == 6);
}

TEST_CASE("cup_class builds all distinct value permutations in order") {
  const ValueTable injective({Rat(0), Rat(1), Rat(2)}, Orientation::maximize);
  const FunctionSet cls = nfl::cup_class(injective);
  REQUIRE(cls.size() == 6);
  CHECK(cls.members.front().values == std::vector<Rat>{0, 1, 2});
  CHECK(cls.members.back().values == std::vector<Rat>{2, 1, 0});

  const ValueTable repeated({Rat(0), Rat(0), Rat(1)}, Orientation::maximize);
  CHECK(nfl::cup_class(repeated).size() == 3);
}

TEST_CASE("partition_cup groups the full boolean cube by signature") {
  const FunctionSet all = nfl::enumerate_functions(
      SearchSpace::plain(3), {Rat(0), Rat(1)}, Orientation::maximize);
  const std::vector<FunctionSet> parts = nfl::partition_cup(all);
  REQUIRE(parts.size() == 4);
  std::multiset<int> sizes;
  int total = 0;
  for (const FunctionSet& part : parts) {
    sizes.insert(part.size());
    total += part.size();
    CHECK(nfl::is_cup(part).cup); // each part is a complete class
  }
  CHECK(total == 8);
  CHECK(sizes == std::multiset<int>{1, 1, 3, 3});
}

TEST_CASE("is_cup certifies and names the missing permutation") {
  const ValueTable seed({Rat(0), Rat(1), Rat(2)}, Orientation::maximize);
  FunctionSet cls = nfl::cup_class(seed);
  CHECK(nfl::is_cup(cls).cup);

  std::vector<ValueTable> short_of_one(cls.members.begin(), cls.members.end() - 1);
  const FunctionSet broken((std::vector<ValueTable>(short_of_one)));
  const nfl::CupCheck check = nfl::is_cup(broken);
  REQUIRE_FALSE(check.cup);
  REQUIRE(check.witness.has_value());
  const auto& [member, missing] = *check.witness;
  CHECK(broken.contains(member));
  CHECK_FALSE(broken.contains(missing));
  CHECK(nfl::cup_signature(member) == nfl::cup_signature(missing));
  CHECK(missing.values == std::vector<Rat>{2, 1, 0}); // the dropped one
}

TEST_CASE("policy enumeration agrees with the closed-form count") {
  nfl::PolicyEnumeration policies(SearchSpace::plain(3), {Rat(0), Rat(1)});
  CHECK(policies.count() == 12);
  for (int i = 0; i < 12; ++i) policies.at(BigInt(i)).validate(3);
  CHECK_THROWS_AS(policies.at(BigInt(12)), nfl::Error);
  CHECK(policies.to_vector().size() == 12);

  CHECK_THROWS_AS(nfl::PolicyEnumeration(SearchSpace::plain(4),
                                         {Rat(0), Rat(1), Rat(2)}, 1000),
                  nfl::Error); // 55296 policies > cap 1000
}

TEST_CASE("function sets deduplicate and reject mixed shapes") {
  const ValueTable a({Rat(0), Rat(1)}, Orientation::maximize);
  const FunctionSet fs({a, a});
  CHECK(fs.size() == 1);
  const ValueTable longer({Rat(0), Rat(1), Rat(2)}, Orientation::maximize);
  CHECK_THROWS_AS(FunctionSet({a, longer}), nfl::Error);
  const ValueTable flipped({Rat(0), Rat(1)}, Orientation::minimize);
  CHECK_THROWS_AS(FunctionSet({a, flipped}), nfl::Error);
}
