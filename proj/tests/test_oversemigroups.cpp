#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "nsg/gapsets.hpp"
#include "nsg/oracle.hpp"
#include "nsg/oversemigroups.hpp"
#include "support/random_semigroups.hpp"

using nsg::Coords;
using nsg::Int;
using nsg::NumericalSemigroup;

TEST_CASE("adjoin") {
  const auto s = NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9});
  CHECK(adjoin(s, 13).coords() == Coords{16, 7, 13, 9});
  CHECK(adjoin(s, 11).coords() == Coords{11, 7, 18, 9});
  SUBCASE("members are not special gaps") {
    try {
      adjoin(s, 12);
      FAIL("expected NotSpecialGap");
    } catch (const nsg::Error& e) {
      CHECK(e.name() == "NotSpecialGap");
    }
  }
  SUBCASE("gaps at or below m are rejected") {
    const auto half = NumericalSemigroup::from_coordinates(5, {6, 7, 8, 9});
    try {
      adjoin(half, 4);
      FAIL("expected NotAboveMultiplicity");
    } catch (const nsg::Error& e) {
      CHECK(e.name() == "NotAboveMultiplicity");
    }
  }
}

TEST_CASE("coordinate_candidates") {
  CHECK(nsg::coordinate_candidates({16, 7, 18, 9}, 5) == std::vector<Int>{1, 3});
  CHECK(nsg::coordinate_candidates({6, 7, 8, 9}, 5).empty());
  // index 2 passes the maximality test but doubling its candidate gap lands
  // outside the semigroup, so only index 4 survives
  CHECK(nsg::coordinate_candidates({6, 12, 13, 19}, 5) == std::vector<Int>{4});
}

TEST_CASE("candidate indices name exactly the special gaps above m") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = nsg::testsupport::random_semigroup(rng, 8, 15);
    CAPTURE(s.coords());
    std::vector<Int> from_indices;
    for (Int i : nsg::coordinate_candidates(s.coords(), s.multiplicity()))
      from_indices.push_back(s.coords()[static_cast<std::size_t>(i) - 1] - s.multiplicity());
    std::sort(from_indices.begin(), from_indices.end());
    CHECK(from_indices == special_gaps_above_m(s));
  }
}

TEST_CASE("oversemigroups enumeration") {
  SUBCASE("the eight oversemigroups of (16,7,18,9)") {
    const auto out = oversemigroups(NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9}));
    const std::set<Coords> expected = {{16, 7, 18, 9}, {11, 7, 18, 9}, {16, 7, 13, 9},
                                       {11, 7, 13, 9}, {16, 7, 8, 9},  {6, 7, 13, 9},
                                       {11, 7, 8, 9},  {6, 7, 8, 9}};
    std::set<Coords> got;
    for (const auto& t : out) got.insert(t.coords());
    CHECK(got == expected);
  }
  SUBCASE("the nine oversemigroups of <5,6,13>") {
    // 7 only becomes adjoinable after 14 is; the naive candidate rule would
    // produce the invalid tuple (6,7,13,19) instead of this lattice.
    const auto out = oversemigroups(NumericalSemigroup::from_coordinates(5, {6, 12, 13, 19}));
    const std::set<Coords> expected = {{6, 12, 13, 19}, {6, 12, 13, 14}, {6, 7, 13, 14},
                                       {6, 12, 8, 14},  {6, 12, 13, 9},  {6, 7, 8, 14},
                                       {6, 7, 13, 9},   {6, 12, 8, 9},   {6, 7, 8, 9}};
    std::set<Coords> got;
    for (const auto& t : out) got.insert(t.coords());
    CHECK(got == expected);
  }
  SUBCASE("lattice maxima are alone") {
    CHECK(oversemigroups(NumericalSemigroup::from_coordinates(5, {6, 7, 8, 9})).size() == 1);
    CHECK(oversemigroups(NumericalSemigroup::from_coordinates(3, {4, 5})).size() == 1);
  }
  SUBCASE("limit fails rather than truncates") {
    const auto s = NumericalSemigroup::from_coordinates(5, {16, 7, 18, 9});
    try {
      oversemigroups(s, 3);
      FAIL("expected LimitExceeded");
    } catch (const nsg::Error& e) {
      CHECK(e.name() == "LimitExceeded");
    }
    CHECK(oversemigroups(s, 8).size() == 8);
    CHECK(oversemigroups(s, 0).size() == 8);
  }
}

TEST_CASE("oversemigroup properties on random instances") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = nsg::testsupport::random_semigroup(rng, 7, 14);
    CAPTURE(s.coords());
    const auto out = oversemigroups(s);

    CHECK(out == nsg::oracle::brute_oversemigroups(s));
    CHECK(out.size() >= 1 + special_gaps_above_m(s).size());
    CHECK(std::is_sorted(out.begin(), out.end()));

    // connectivity: every element except S itself is one adjunction away
    // from another element of the output
    std::set<Coords> tuples;
    for (const auto& t : out) tuples.insert(t.coords());
    for (const auto& t : out) {
      if (t == s) continue;
      bool reachable = false;
      for (Int i = 1; i < s.multiplicity() && !reachable; ++i) {
        Coords parent = t.coords();
        parent[static_cast<std::size_t>(i) - 1] += s.multiplicity();
        if (!tuples.count(parent)) continue;
        const auto d = nsg::coordinate_candidates(parent, s.multiplicity());
        reachable = std::find(d.begin(), d.end(), i) != d.end();
      }
      CHECK(reachable);
    }
  }
}

TEST_CASE("threaded expansion matches the serial result") {
  std::mt19937_64 rng(24601);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = nsg::testsupport::random_semigroup(rng, 7, 14);
    CHECK(oversemigroups(s, 0, 4) == oversemigroups(s));
  }
}
