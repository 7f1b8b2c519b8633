#include "nsg/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace nsg {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw Error("Overflow", "integer overflow in " + std::to_string(a) + " + " +
                                std::to_string(b));
  return out;
}

Int apery_value(const Coords& coords, Int residue) {
  return residue == 0 ? 0 : coords[static_cast<std::size_t>(residue) - 1];
}

bool coords_contain(const Coords& coords, Int m, Int x) {
  if (x < 0) return false;
  if (m == 1) return true;
  return apery_value(coords, x % m) <= x;
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& gens) {
  if (gens.empty()) throw Error("EmptyGenerators", "at least one generator is required");
  Int g = 0;
  for (Int x : gens) {
    if (x <= 0)
      throw Error("InvalidArgument", "generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw Error("NotCofinite", "generators have gcd " + std::to_string(g) +
                                   "; the complement would be infinite");

  const Int m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return naturals();

  // Least element per residue class mod m, by Dijkstra relaxation with one
  // edge of weight g per generator. gcd = 1 makes every class reachable; an
  // overflowing sum can never improve a distance, so it is skipped, and a
  // class left unreached means its least element is unrepresentable.
  std::vector<Int> least(static_cast<std::size_t>(m), std::numeric_limits<Int>::max());
  std::vector<char> reached(static_cast<std::size_t>(m), 0);
  least[0] = 0;
  reached[0] = 1;
  using Node = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != least[static_cast<std::size_t>(residue)]) continue;
    for (Int gen : gens) {
      Int next = 0;
      if (__builtin_add_overflow(value, gen, &next)) continue;
      const auto r = static_cast<std::size_t>(next % m);
      if (!reached[r] || next < least[r]) {
        least[r] = next;
        reached[r] = 1;
        queue.emplace(next, static_cast<Int>(r));
      }
    }
  }
  for (Int i = 1; i < m; ++i) {
    if (!reached[static_cast<std::size_t>(i)])
      throw Error("Overflow", "Apery value for residue " + std::to_string(i) +
                                  " exceeds the integer range");
  }
  return NumericalSemigroup(m, Coords(least.begin() + 1, least.end()));
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<Int>& gaps) {
  for (Int x : gaps) {
    if (x <= 0)
      throw Error("InvalidArgument", "gaps must be positive, got " + std::to_string(x));
  }
  if (gaps.empty()) return naturals();

  const Int frob = *std::max_element(gaps.begin(), gaps.end());
  std::vector<char> is_gap(static_cast<std::size_t>(frob) + 1, 0);
  for (Int x : gaps) is_gap[static_cast<std::size_t>(x)] = 1;

  // Witness search: smallest member pair (x, y), x <= y, whose sum is a gap.
  for (Int x = 1; x <= frob; ++x) {
    if (is_gap[static_cast<std::size_t>(x)]) continue;
    for (Int y = x; x + y <= frob; ++y) {
      if (is_gap[static_cast<std::size_t>(y)]) continue;
      if (is_gap[static_cast<std::size_t>(x + y)]) throw NotClosedError(x, y);
    }
  }

  Int m = 1;
  while (m <= frob && is_gap[static_cast<std::size_t>(m)]) ++m;

  Coords coords;
  coords.reserve(static_cast<std::size_t>(m) - 1);
  for (Int i = 1; i < m; ++i) {
    Int x = i;
    while (x <= frob && is_gap[static_cast<std::size_t>(x)]) x += m;
    coords.push_back(x);
  }
  return NumericalSemigroup(m, std::move(coords));
}

NumericalSemigroup NumericalSemigroup::from_coordinates(Int m, Coords coords) {
  if (m < 1) throw Error("InvalidArgument", "multiplicity must be positive");
  if (static_cast<Int>(coords.size()) != m - 1)
    throw Error("InvalidArgument", "expected " + std::to_string(m - 1) +
                                       " coordinates, got " + std::to_string(coords.size()));
  for (Int i = 1; i < m; ++i) {
    const Int w = coords[static_cast<std::size_t>(i) - 1];
    if (w < 0 || w % m != i) throw BadResidueError(i, w, m);
    if (w < m + i) throw BelowMultiplicityError(i, w, m);
  }
  for (Int i = 1; i < m; ++i) {
    for (Int j = i; j < m; ++j) {
      if ((i + j) % m == 0) continue;  // w(0) = 0, trivially satisfied
      const Int wi = coords[static_cast<std::size_t>(i) - 1];
      const Int wj = coords[static_cast<std::size_t>(j) - 1];
      const Int w = apery_value(coords, (i + j) % m);
      // A sum beyond the integer range exceeds every coordinate.
      Int sum = 0;
      if (__builtin_add_overflow(wi, wj, &sum)) continue;
      if (sum < w) throw KunzViolationError(i, j, sum, w);
    }
  }
  return NumericalSemigroup(m, std::move(coords));
}

bool NumericalSemigroup::contains(Int x) const { return coords_contain(coords_, m_, x); }

Int NumericalSemigroup::frobenius() const {
  if (m_ == 1) throw Error("NoGaps", "the naturals have no Frobenius number");
  return *std::max_element(coords_.begin(), coords_.end()) - m_;
}

Int NumericalSemigroup::genus() const {
  Int total = 0;
  for (Int i = 1; i < m_; ++i) total += (coords_[static_cast<std::size_t>(i) - 1] - i) / m_;
  return total;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int i = 1; i < m_; ++i) {
    for (Int x = i; x < coords_[static_cast<std::size_t>(i) - 1]; x += m_) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AperySet NumericalSemigroup::apery() const {
  AperySet out;
  out.n = m_;
  out.elements.reserve(coords_.size() + 1);
  out.elements.push_back(0);
  out.elements.insert(out.elements.end(), coords_.begin(), coords_.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (s.multiplicity() != t.multiplicity())
    throw Error("MultiplicityMismatch",
                "multiplicities differ: " + std::to_string(s.multiplicity()) + " vs " +
                    std::to_string(t.multiplicity()));
  for (std::size_t i = 0; i < s.coords().size(); ++i) {
    if (t.coords()[i] > s.coords()[i]) return false;
  }
  return true;
}

NumericalSemigroup intersect(const std::vector<NumericalSemigroup>& list) {
  if (list.empty()) throw Error("EmptyList", "cannot intersect an empty list");
  const Int m = list.front().multiplicity();
  Coords maxima = list.front().coords();
  for (const auto& s : list) {
    if (s.multiplicity() != m)
      throw Error("MultiplicityMismatch",
                  "multiplicities differ: " + std::to_string(m) + " vs " +
                      std::to_string(s.multiplicity()));
    for (std::size_t i = 0; i < maxima.size(); ++i)
      maxima[i] = std::max(maxima[i], s.coords()[i]);
  }
  auto result = NumericalSemigroup::from_coordinates(m, std::move(maxima));
  if (m > 1) {
    Int max_frob = list.front().frobenius();
    for (const auto& s : list) max_frob = std::max(max_frob, s.frobenius());
    detail::check(result.frobenius() == max_frob,
                  "intersection Frobenius number must be the maximum of the inputs");
  }
  return result;
}

}  // namespace nsg
