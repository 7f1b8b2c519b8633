#pragma once

#include <cstddef>
#include <vector>

#include "nsg/core.hpp"
#include "nsg/irreducibility.hpp"

namespace nsg::oracle {

/// Caps for the exponential searches below; exceeding one fails loudly
/// instead of truncating.
struct OracleBudget {
  Int max_gap_bound = 20;  // free gaps (genus minus m-1) for subset searches
  std::size_t max_subsets = std::size_t{1} << 20;
};

/// Definitional special gaps: the gaps whose removal from the gap set still
/// leaves a valid numerical semigroup.
std::vector<Int> brute_special_gaps(const NumericalSemigroup& s);

/// Definitional oversemigroups of the same multiplicity: every subset of the
/// gap set that keeps 1..m-1 and stays closed. Throws BudgetExceeded.
std::vector<NumericalSemigroup> brute_oversemigroups(const NumericalSemigroup& s,
                                                     const OracleBudget& budget = {});

/// Minimum number of p-sets needed to cover the target, by exhaustive
/// subsets; 0 for an empty target. Throws Infeasible when even the full
/// union misses part of the target.
std::size_t brute_min_cover(const std::vector<Int>& target,
                            const std::vector<std::vector<Int>>& p_sets);

/// Every semigroup with the given multiplicity and Frobenius number.
/// Throws InvalidPair / BudgetExceeded.
std::vector<NumericalSemigroup> enumerate_s_m_f(const FrobeniusPair& pair,
                                                const OracleBudget& budget = {});

}  // namespace nsg::oracle
