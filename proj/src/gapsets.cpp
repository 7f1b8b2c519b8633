#include "nsg/gapsets.hpp"

#include <algorithm>

namespace nsg {

std::vector<Int> apery_maximals(const NumericalSemigroup& s) {
  const Int m = s.multiplicity();
  const Coords& w = s.coords();
  std::vector<Int> out;
  for (Int i = 1; i < m; ++i) {
    const Int wi = w[static_cast<std::size_t>(i) - 1];
    bool maximal = true;
    for (Int k = 1; k < m && maximal; ++k) {
      if (k == i) continue;
      const Int diff = w[static_cast<std::size_t>(k) - 1] - wi;
      if (diff <= 0) continue;
      // diff has residue (k - i) mod m, never 0, so it is an Apery element
      // exactly when it equals the coordinate of that residue.
      const Int r = (k - i + m) % m;
      if (w[static_cast<std::size_t>(r) - 1] == diff) maximal = false;
    }
    if (maximal) out.push_back(wi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  std::vector<Int> out = apery_maximals(s);
  for (Int& x : out) x -= s.multiplicity();
  return out;
}

std::vector<Int> special_gaps(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x : pseudo_frobenius(s)) {
    // 2x beyond the integer range exceeds the Frobenius number, so it is
    // a member.
    Int doubled = 0;
    if (!__builtin_add_overflow(x, x, &doubled) && !s.contains(doubled)) continue;
    out.push_back(x);
  }
  return out;
}

std::vector<Int> special_gaps_above_m(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x : special_gaps(s)) {
    if (x > s.multiplicity()) out.push_back(x);
  }
  return out;
}

}  // namespace nsg
