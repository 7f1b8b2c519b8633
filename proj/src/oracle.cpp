#include "nsg/oracle.hpp"

#include <algorithm>

namespace nsg::oracle {

std::vector<Int> brute_special_gaps(const NumericalSemigroup& s) {
  const auto gaps = s.gaps();
  std::vector<Int> out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    std::vector<Int> reduced;
    reduced.reserve(gaps.size() - 1);
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      if (j != i) reduced.push_back(gaps[j]);
    }
    try {
      (void)NumericalSemigroup::from_gaps(reduced);
      out.push_back(gaps[i]);
    } catch (const NotClosedError&) {
    }
  }
  return out;
}

std::vector<NumericalSemigroup> brute_oversemigroups(const NumericalSemigroup& s,
                                                     const OracleBudget& budget) {
  const Int m = s.multiplicity();
  std::vector<Int> free_gaps;  // gaps above the multiplicity
  for (Int g : s.gaps()) {
    if (g > m) free_gaps.push_back(g);
  }
  if (static_cast<Int>(free_gaps.size()) > budget.max_gap_bound || free_gaps.size() > 62)
    throw Error("BudgetExceeded", std::to_string(free_gaps.size()) +
                                      " free gaps exceed the oracle bound " +
                                      std::to_string(budget.max_gap_bound));
  const std::size_t count = std::size_t{1} << free_gaps.size();
  if (count > budget.max_subsets)
    throw Error("BudgetExceeded", "subset count exceeds the oracle budget");

  std::vector<Int> base;
  for (Int i = 1; i < m; ++i) base.push_back(i);

  std::vector<NumericalSemigroup> out;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Int> candidate = base;
    for (std::size_t bit = 0; bit < free_gaps.size(); ++bit) {
      if (mask & (std::size_t{1} << bit)) candidate.push_back(free_gaps[bit]);
    }
    try {
      out.push_back(NumericalSemigroup::from_gaps(candidate));
    } catch (const NotClosedError&) {
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_min_cover(const std::vector<Int>& target,
                            const std::vector<std::vector<Int>>& p_sets) {
  if (target.empty()) return 0;
  if (p_sets.size() > 25)
    throw Error("BudgetExceeded", "too many p-sets for exhaustive cover search");
  auto covers = [&](std::size_t mask) {
    for (Int h : target) {
      bool hit = false;
      for (std::size_t i = 0; i < p_sets.size() && !hit; ++i) {
        if ((mask & (std::size_t{1} << i)) &&
            std::find(p_sets[i].begin(), p_sets[i].end(), h) != p_sets[i].end())
          hit = true;
      }
      if (!hit) return false;
    }
    return true;
  };
  const std::size_t full = (std::size_t{1} << p_sets.size()) - 1;
  if (!covers(full)) throw Error("Infeasible", "the p-sets do not cover the target");
  std::size_t best = p_sets.size();
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < best && covers(mask)) best = size;
  }
  return best;
}

std::vector<NumericalSemigroup> enumerate_s_m_f(const FrobeniusPair& pair,
                                                const OracleBudget& budget) {
  validate(pair);
  std::vector<NumericalSemigroup> out;
  for (auto& t : brute_oversemigroups(smallest_with_frobenius(pair), budget)) {
    if (t.frobenius() == pair.frobenius) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace nsg::oracle
