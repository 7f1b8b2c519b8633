#pragma once

#include <vector>

#include "nsg/core.hpp"

namespace nsg {

/// Apery elements w(i) such that w(k) - w(i) is not itself an Apery element
/// for any k != i. Sorted ascending.
std::vector<Int> apery_maximals(const NumericalSemigroup& s);

/// Pseudo-Frobenius numbers: the Apery maximals shifted down by the
/// multiplicity. Sorted ascending.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

/// Special gaps: pseudo-Frobenius numbers x with 2x a member. Adjoining any
/// of these (and nothing else) keeps the set a numerical semigroup.
std::vector<Int> special_gaps(const NumericalSemigroup& s);

/// Special gaps strictly above the multiplicity; adjoining one of these
/// preserves the multiplicity.
std::vector<Int> special_gaps_above_m(const NumericalSemigroup& s);

}  // namespace nsg
