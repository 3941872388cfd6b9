#include <doctest.h>

#include <algorithm>
#include <set>

#include "moff/designs.hpp"

using namespace moff;

TEST_CASE("base case and the r=2 block list") {
  IncidenceMatrix s1 = build_S(1);
  CHECK(s1.m == 2);
  CHECK(s1.n == 2);
  CHECK(s1.at(0, 0) == 1);
  CHECK(s1.at(1, 1) == 1);
  CHECK(s1.at(0, 1) == 0);

  BlockFamily f2 = to_blocks(build_S(2));
  REQUIRE(f2.size() == 6);
  std::vector<std::vector<std::size_t>> expect = {{1, 2}, {3, 4}, {1, 3},
                                                  {2, 4}, {1, 4}, {2, 3}};
  for (std::size_t k = 0; k < 6; ++k) CHECK(block_elements(f2.blocks[k]) == expect[k]);
}

TEST_CASE("shape, sums, gram and outer identities for r = 1..6") {
  for (int r = 1; r <= 6; ++r) {
    IncidenceMatrix s = build_S(r);
    CHECK(s.m == std::size_t(1) << r);
    CHECK(s.n == (std::size_t(1) << (r + 1)) - 2);
    SumsReport sums = check_sums(s, r);
    CHECK(sums.pass);
    CHECK(sums.expected_col_sum == (1LL << (r - 1)));
    CHECK(sums.expected_row_sum == (1LL << r) - 1);
    CHECK(gram_check(s, r).pass);
    OuterReport outer = outer_identities_check(s, r);
    CHECK(outer.pass);
    CHECK(outer.outer.pass);
    CHECK(outer.outer_swap.pass);
  }
}

TEST_CASE("incidence round trip") {
  for (int r = 1; r <= 4; ++r) {
    IncidenceMatrix s = build_S(r);
    CHECK(from_blocks(to_blocks(s)) == s);
  }
}

TEST_CASE("cohesiveness") {
  CHECK(cohesiveness(to_blocks(build_S(2))) == 1);
  CHECK(cohesiveness(to_blocks(build_S(3))) == 2);
  CHECK(cohesiveness(to_blocks(build_S(4))) == 4);

  BlockFamily dup;
  dup.m = 4;
  dup.l = 2;
  dup.blocks = {block_from_elements({1, 2}, 4), block_from_elements({1, 2}, 4)};
  CHECK(cohesiveness(dup) == 2);  // duplicate list entries intersect fully

  BlockFamily one;
  one.m = 4;
  one.l = 2;
  one.blocks = {dup.blocks[0]};
  CHECK_THROWS(cohesiveness(one));
}

TEST_CASE("t-design verdicts") {
  for (int r = 2; r <= 5; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    long long m = 1LL << r;
    auto l1 = is_t_design(f, 1);
    REQUIRE(l1.has_value());
    CHECK(*l1 == m - 1);
    auto l2 = is_t_design(f, 2);
    REQUIRE(l2.has_value());
    CHECK(*l2 == m / 2 - 1);
  }

  // deleting any one block of S_2 breaks the 2-design property
  BlockFamily f = to_blocks(build_S(2));
  for (std::size_t k = 0; k < f.size(); ++k) {
    BlockFamily g = f;
    g.blocks.erase(g.blocks.begin() + k);
    CHECK_FALSE(is_t_design(g, 2).has_value());
  }
}

TEST_CASE("maximal orthoplecticity verdicts") {
  for (int r = 2; r <= 5; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    OrthoplecticVerdict v = is_maximally_orthoplectic(f);
    CHECK(v.is_max);
    CHECK(v.cohesive_ok);
    CHECK(v.cardinality_ok);
    CHECK(v.bound == Rational(1LL << (2 * (r - 1)), 1LL << r));
    // m-1 disjoint complementary pairs
    CHECK(v.pairs.size() == (std::size_t(1) << r) - 1);
    std::set<std::size_t> used;
    for (auto [a, b] : v.pairs) {
      CHECK((f.blocks[a] & f.blocks[b]) == 0);
      used.insert(a);
      used.insert(b);
    }
    CHECK(used.size() == f.size());
  }

  // all 6 pairs from a 4-set coincide with S_2 as a set
  BlockFamily all;
  all.m = 4;
  all.l = 2;
  for (auto mask : subsets_of_size(4, 2)) all.blocks.push_back(mask);
  CHECK(is_maximally_orthoplectic(all).is_max);

  // same 6 blocks on a 5-point ground set: cardinality 2(m-1) = 8 fails
  BlockFamily five = all;
  five.m = 5;
  OrthoplecticVerdict v5 = is_maximally_orthoplectic(five);
  CHECK_FALSE(v5.is_max);
  CHECK_FALSE(v5.cardinality_ok);
}

TEST_CASE("intersection lower bound") {
  auto b1 = johnson_bound(4, 2, 6);
  REQUIRE(b1.has_value());
  CHECK(*b1 == Rational(1));
  auto b2 = johnson_bound(8, 4, 14);
  REQUIRE(b2.has_value());
  CHECK(*b2 == Rational(2));
  CHECK_FALSE(johnson_bound(4, 2, 4).has_value());
}

TEST_CASE("subset enumeration") {
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(8, 4).size() == 70);
  auto s = subsets_of_size(5, 3);
  CHECK(std::is_sorted(s.begin(), s.end()));
}
