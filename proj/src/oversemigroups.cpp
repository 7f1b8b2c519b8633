#include "nsg/oversemigroups.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "nsg/gapsets.hpp"

namespace nsg {

NumericalSemigroup adjoin(const NumericalSemigroup& s, Int x) {
  const Int m = s.multiplicity();
  if (x <= m)
    throw Error("NotAboveMultiplicity",
                std::to_string(x) + " does not exceed the multiplicity " + std::to_string(m));
  const auto sg = special_gaps(s);
  if (!std::binary_search(sg.begin(), sg.end(), x))
    throw Error("NotSpecialGap", std::to_string(x) + " is not a special gap");
  Coords c = s.coords();
  c[static_cast<std::size_t>(x % m) - 1] -= m;
  return NumericalSemigroup::from_coordinates(m, std::move(c));
}

std::vector<Int> coordinate_candidates(const Coords& y, Int m) {
  std::vector<Int> out;
  for (Int i = 1; i < m; ++i) {
    const Int yi = y[static_cast<std::size_t>(i) - 1];
    if (yi <= 2 * m) continue;
    bool maximal = true;
    for (Int k = 1; k < m && maximal; ++k) {
      if (k == i) continue;
      const Int diff = y[static_cast<std::size_t>(k) - 1] - yi;
      if (diff <= 0) continue;
      const Int r = (k - i + m) % m;
      if (y[static_cast<std::size_t>(r) - 1] == diff) maximal = false;
    }
    if (!maximal) continue;
    // Candidate gap x = y_i - m; its double must already be a member, i.e.
    // 2x >= w((2i) mod m). Checked without overflow: a doubled value beyond
    // the integer range exceeds every coordinate.
    const Int x = yi - m;
    if (x <= std::numeric_limits<Int>::max() / 2) {
      if (2 * x < apery_value(y, (2 * i) % m)) continue;
    }
    out.push_back(i);
  }
  return out;
}

std::vector<std::vector<Int>> coordinate_candidates_bulk(const std::vector<Coords>& active,
                                                         Int m, unsigned threads) {
  std::vector<std::vector<Int>> out(active.size());
  if (threads <= 1 || active.size() < 2 * threads) {
    for (std::size_t n = 0; n < active.size(); ++n) out[n] = coordinate_candidates(active[n], m);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (active.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(active.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      for (std::size_t n = begin; n < end; ++n) out[n] = coordinate_candidates(active[n], m);
    });
  }
  for (auto& worker : pool) worker.join();
  return out;
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s, std::size_t limit,
                                               unsigned threads) {
  const Int m = s.multiplicity();
  Frontier frontier;
  frontier.active.push_back(s.coords());
  frontier.visited.insert(s.coords());
  frontier.accumulated.insert(s.coords());

  while (!frontier.active.empty()) {
    const auto candidates = coordinate_candidates_bulk(frontier.active, m, threads);
    std::vector<Coords> next;
    for (std::size_t n = 0; n < frontier.active.size(); ++n) {
      for (Int i : candidates[n]) {
        Coords child = frontier.active[n];
        child[static_cast<std::size_t>(i) - 1] -= m;
        if (!frontier.visited.insert(child).second) continue;
        frontier.accumulated.insert(child);
        if (limit != 0 && frontier.accumulated.size() > limit)
          throw Error("LimitExceeded",
                      "more than " + std::to_string(limit) + " oversemigroups");
        next.push_back(std::move(child));
      }
    }
    frontier.active = std::move(next);
  }

  std::vector<NumericalSemigroup> out;
  out.reserve(frontier.accumulated.size());
  for (const Coords& c : frontier.accumulated)
    out.push_back(NumericalSemigroup::from_coordinates(m, c));
  return out;
}

}  // namespace nsg
