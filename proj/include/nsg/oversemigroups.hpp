#pragma once

#include <cstddef>
#include <set>
#include <unordered_set>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

struct CoordsHash {
  std::size_t operator()(const Coords& coords) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int v : coords)
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Work state of a coordinate-space frontier search. Every accumulated tuple
/// is componentwise <= the start tuple and is a valid Kunz tuple; the active
/// generation is always a subset of what has been accumulated.
struct Frontier {
  std::vector<Coords> active;
  std::unordered_set<Coords, CoordsHash> visited;
  std::set<Coords> accumulated;
};

/// Adjoins a special gap x > m to S: the coordinate of x's residue class
/// drops by m. Throws NotAboveMultiplicity / NotSpecialGap.
NumericalSemigroup adjoin(const NumericalSemigroup& s, Int x);

/// Indices i (1-based) whose coordinate can be lowered by m so the tuple
/// stays a valid Kunz tuple: y_i > 2m, w(i) is maximal in the Apery set, and
/// twice the candidate gap y_i - m is already a member.
std::vector<Int> coordinate_candidates(const Coords& y, Int m);

/// D(y) evaluated for a whole generation; chunked across `threads` when > 1.
std::vector<std::vector<Int>> coordinate_candidates_bulk(const std::vector<Coords>& active,
                                                         Int m, unsigned threads);

inline constexpr std::size_t kDefaultOversemigroupLimit = 1'000'000;

/// All oversemigroups of S with the same multiplicity, sorted
/// lexicographically by coordinate tuple. Fails with LimitExceeded (rather
/// than truncating) once more than `limit` semigroups appear; limit 0 means
/// unlimited.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s,
                                               std::size_t limit = kDefaultOversemigroupLimit,
                                               unsigned threads = 1);

}  // namespace nsg
