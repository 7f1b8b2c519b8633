#include "nsg/decomposition.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "nsg/gapsets.hpp"
#include "nsg/oversemigroups.hpp"

namespace nsg {

namespace {

// T (as a tuple) contains the semigroup of tuple b iff every coordinate of T
// is <= the matching coordinate of b.
bool tuple_contains(const Coords& t, const Coords& b) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<NumericalSemigroup> minimal_m_irreducible_oversemigroups(const NumericalSemigroup& s,
                                                                     unsigned threads) {
  const Int m = s.multiplicity();
  std::vector<Coords> active{s.coords()};
  std::unordered_set<Coords, CoordsHash> visited{s.coords()};
  std::set<Coords> found;

  // Generation-based frontier: each pass moves the m-irreducible nodes
  // (at most one adjoinable gap) into `found`, expands the rest, and drops
  // every candidate that contains an already-found minimal element. Nodes of
  // one generation share a genus, so no two of them are comparable and the
  // found set only ever receives minimal elements.
  while (!active.empty()) {
    const auto candidates = coordinate_candidates_bulk(active, m, threads);
    std::vector<Coords> next;
    std::vector<Coords> found_now;
    for (std::size_t n = 0; n < active.size(); ++n) {
      if (candidates[n].size() <= 1) {
        found_now.push_back(active[n]);
        continue;
      }
      for (Int i : candidates[n]) {
        Coords child = active[n];
        child[static_cast<std::size_t>(i) - 1] -= m;
        if (!visited.insert(child).second) continue;
        const bool dominated = std::any_of(found.begin(), found.end(), [&](const Coords& b) {
          return tuple_contains(child, b);
        });
        if (!dominated) next.push_back(std::move(child));
      }
    }
    found.insert(found_now.begin(), found_now.end());
    std::erase_if(next, [&](const Coords& child) {
      return std::any_of(found_now.begin(), found_now.end(),
                         [&](const Coords& b) { return tuple_contains(child, b); });
    });
    active = std::move(next);
  }

  std::vector<NumericalSemigroup> out;
  out.reserve(found.size());
  for (const Coords& c : found) out.push_back(NumericalSemigroup::from_coordinates(m, c));
  return out;
}

std::vector<Int> p_set(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (!is_subset(s, t))
    throw Error("NotOversemigroup", "the second semigroup does not contain the first");
  std::vector<Int> out;
  for (Int h : special_gaps_above_m(s)) {
    if (!t.contains(h)) out.push_back(h);
  }
  return out;
}

DecompositionResult minimal_decomposition(const NumericalSemigroup& s, unsigned threads) {
  DecompositionResult result;
  result.target = special_gaps_above_m(s);

  if (result.target.empty()) {
    result.components.push_back(s);
    result.p_sets.push_back({});
    return result;
  }

  const auto minimals = minimal_m_irreducible_oversemigroups(s, threads);
  std::vector<std::vector<Int>> p_sets;
  p_sets.reserve(minimals.size());

  const std::size_t words = (result.target.size() + 63) / 64;
  using Mask = std::vector<std::uint64_t>;
  Mask all(words, 0);
  for (std::size_t t = 0; t < result.target.size(); ++t)
    all[t / 64] |= std::uint64_t{1} << (t % 64);
  std::vector<Mask> masks;
  for (const auto& minimal : minimals) {
    p_sets.push_back(p_set(s, minimal));
    Mask mask(words, 0);
    for (Int h : p_sets.back()) {
      const std::size_t pos = static_cast<std::size_t>(
          std::lower_bound(result.target.begin(), result.target.end(), h) -
          result.target.begin());
      mask[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
    masks.push_back(std::move(mask));
  }
  Mask reachable(words, 0);
  for (const Mask& mask : masks)
    for (std::size_t w = 0; w < words; ++w) reachable[w] |= mask[w];
  detail::check(reachable == all, "the minimal elements together exclude every target gap");

  // Exact cover by increasing cardinality; combinations are visited in
  // lexicographic index order over the sorted minimals, so the first cover
  // found is the tie-break winner.
  const std::size_t n = minimals.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Mask covered(words, 0);
      for (std::size_t i : pick)
        for (std::size_t w = 0; w < words; ++w) covered[w] |= masks[i][w];
      if (covered == all) {
        for (std::size_t i : pick) {
          result.components.push_back(minimals[i]);
          result.p_sets.push_back(p_sets[i]);
        }
        return result;
      }
      // advance to the next k-combination
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw Error("InternalCheck", "set cover search failed despite a feasible union");
}

Int decomposition_bound(const NumericalSemigroup& s) {
  const Int targets = static_cast<Int>(special_gaps_above_m(s).size());
  return std::min(targets, s.multiplicity() - 1);
}

}  // namespace nsg
