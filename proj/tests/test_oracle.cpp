#include <vector>

#include <doctest.h>

#include "nsg/oracle.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;
namespace oracle = nsg::oracle;

TEST_CASE("brute_special_gaps") {
  CHECK(oracle::brute_special_gaps(NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9})) ==
        std::vector<Int>{11, 13});
  CHECK(oracle::brute_special_gaps(NumericalSemigroup::from_coordinates(5, {6, 12, 13, 19})) ==
        std::vector<Int>{14});
  CHECK(oracle::brute_special_gaps(NumericalSemigroup::from_coordinates(2, {3})) ==
        std::vector<Int>{1});
}

TEST_CASE("brute_oversemigroups") {
  CHECK(oracle::brute_oversemigroups(NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9}))
            .size() == 8);
  CHECK(oracle::brute_oversemigroups(NumericalSemigroup::from_coordinates(5, {6, 7, 8, 9}))
            .size() == 1);
  CHECK(oracle::brute_oversemigroups(NumericalSemigroup::from_coordinates(3, {4, 5})).size() ==
        1);
  SUBCASE("budget is enforced") {
    const auto s = NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9});
    oracle::OracleBudget tiny;
    tiny.max_gap_bound = 2;
    CHECK_THROWS_AS(oracle::brute_oversemigroups(s, tiny), nsg::Error);
  }
}

TEST_CASE("brute_min_cover") {
  CHECK(oracle::brute_min_cover({17, 23}, {{17}, {17}, {23}}) == 2);
  CHECK(oracle::brute_min_cover({}, {{1}, {2}}) == 0);
  CHECK(oracle::brute_min_cover({1, 2}, {{1, 2}, {1}}) == 1);
  CHECK_THROWS_AS(oracle::brute_min_cover({1, 2}, {{1}}), nsg::Error);
}

TEST_CASE("enumerate_s_m_f") {
  SUBCASE("(5,4) is the half-line") {
    const auto members = oracle::enumerate_s_m_f({5, 4});
    REQUIRE(members.size() == 1);
    CHECK(members.front().coords() == nsg::Coords{6, 7, 8, 9});
  }
  SUBCASE("(3,4) by exhaustive subsets") {
    const auto members = oracle::enumerate_s_m_f({3, 4});
    REQUIRE(members.size() == 1);
    CHECK(members.front().coords() == nsg::Coords{7, 5});
  }
  SUBCASE("multiples of m are invalid Frobenius numbers") {
    CHECK_THROWS_AS(oracle::enumerate_s_m_f({5, 10}), nsg::Error);
  }
}
