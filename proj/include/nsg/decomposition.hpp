#pragma once

#include <vector>

#include "nsg/core.hpp"

namespace nsg {

/// A minimal decomposition of S into m-irreducible oversemigroups.
/// Components intersect back to S; the p_sets entry for a component lists
/// the target gaps that component excludes, and their union is the target.
/// For the lattice maximum the target is empty, the cover is the empty set,
/// and the single component is S itself.
struct DecompositionResult {
  std::vector<NumericalSemigroup> components;
  std::vector<std::vector<Int>> p_sets;  // parallel to components
  std::vector<Int> target;               // special gaps of S above m
};

/// The inclusion-minimal m-irreducible oversemigroups of S (same
/// multiplicity), sorted by coordinate tuple.
std::vector<NumericalSemigroup> minimal_m_irreducible_oversemigroups(
    const NumericalSemigroup& s, unsigned threads = 1);

/// Special gaps of S above m that T excludes. Throws NotOversemigroup when
/// T does not contain S.
std::vector<Int> p_set(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// A minimum-cardinality choice of minimals whose p-sets cover the target;
/// ties broken toward the lexicographically smallest sorted component list.
DecompositionResult minimal_decomposition(const NumericalSemigroup& s, unsigned threads = 1);

/// Upper bound min(|target|, m - 1) on the cover size.
Int decomposition_bound(const NumericalSemigroup& s);

}  // namespace nsg
