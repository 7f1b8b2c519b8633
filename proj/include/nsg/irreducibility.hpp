#pragma once

#include <string_view>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

enum class ClassificationLabel { MSymmetric, MPseudosymmetric, NotMIrreducible };

std::string_view to_string(ClassificationLabel label);

/// A (multiplicity, Frobenius number) pair; meaningful exactly when
/// F >= m - 1 and F is not a multiple of m.
struct FrobeniusPair {
  Int m;
  Int frobenius;
};

/// Throws Error("InvalidPair") unless F >= m - 1 and F is not a multiple
/// of m.
void validate(const FrobeniusPair& pair);

/// The smallest semigroup with this multiplicity and Frobenius number:
/// multiples of m together with everything beyond F.
NumericalSemigroup smallest_with_frobenius(const FrobeniusPair& pair);

/// True iff the genus meets the lower bound ceil((F + 1) / 2); the naturals
/// count as irreducible.
bool is_irreducible(const NumericalSemigroup& s);

/// True iff at most one special gap exceeds the multiplicity. Cross-checked
/// on every call against the equivalent genus criterion
/// g in {m - 1, m, ceil((F + 1) / 2)}.
bool is_m_irreducible(const NumericalSemigroup& s);

/// m-symmetric / m-pseudosymmetric for m-irreducible semigroups with odd /
/// even Frobenius number; not-m-irreducible otherwise.
ClassificationLabel classify(const NumericalSemigroup& s);

/// Minimum genus over all semigroups with the given multiplicity and
/// Frobenius number: m - 1, m, or ceil((F + 1) / 2) depending on where F
/// falls relative to m and 2m.
Int min_genus(const FrobeniusPair& pair);

/// The unique maximal semigroup with the given pair when F < 2m; throws
/// NotUnique for F > 2m (use enumerate_maximal instead).
NumericalSemigroup canonical_maximal(const FrobeniusPair& pair);

/// All inclusion-maximal semigroups with the given multiplicity and
/// Frobenius number, sorted by coordinate tuple.
std::vector<NumericalSemigroup> enumerate_maximal(const FrobeniusPair& pair);

}  // namespace nsg
