#pragma once

#include <compare>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

/// Kunz coordinate tuple (w(1), ..., w(m-1)); empty for the naturals.
using Coords = std::vector<Int>;

/// Apery set of a semigroup with respect to its multiplicity: exactly one
/// element per residue class mod n, with w(0) = 0.
struct AperySet {
  Int n = 1;
  std::vector<Int> elements;  // sorted ascending, always starts with 0
};

/// a + b, throwing Error("Overflow") instead of wrapping.
Int checked_add(Int a, Int b);

/// w(r) read off a coordinate tuple, with the w(0) = 0 convention.
Int apery_value(const Coords& coords, Int residue);

/// Membership test on a raw coordinate tuple: x is a member iff
/// x >= w(x mod m).
bool coords_contain(const Coords& coords, Int m, Int x);

/// A numerical semigroup of multiplicity m, represented canonically by its
/// Kunz coordinates. Immutable after construction; all operations are pure.
class NumericalSemigroup {
public:
  /// Smallest numerical semigroup containing the generators.
  /// Throws EmptyGenerators, NotCofinite (gcd != 1), InvalidArgument.
  static NumericalSemigroup from_generators(const std::vector<Int>& gens);

  /// Complement of a finite gap set, when that complement is closed under
  /// addition. Throws NotClosedError naming a witness pair otherwise.
  static NumericalSemigroup from_gaps(const std::vector<Int>& gaps);

  /// Validates the three coordinate invariants (residue, above multiplicity,
  /// closure) and throws BadResidueError / BelowMultiplicityError /
  /// KunzViolationError on the first failure.
  static NumericalSemigroup from_coordinates(Int m, Coords coords);

  /// The full set of naturals (m = 1, empty tuple).
  static NumericalSemigroup naturals() { return NumericalSemigroup(1, {}); }

  Int multiplicity() const { return m_; }
  const Coords& coords() const { return coords_; }

  bool contains(Int x) const;

  /// Largest integer not in the semigroup: max(coords) - m.
  /// Throws Error("NoGaps") when m = 1.
  Int frobenius() const;

  /// Number of gaps: sum over residues of (w(i) - i) / m.
  Int genus() const;

  /// All gaps, sorted ascending.
  std::vector<Int> gaps() const;

  AperySet apery() const;

  bool operator==(const NumericalSemigroup&) const = default;
  auto operator<=>(const NumericalSemigroup&) const = default;

private:
  NumericalSemigroup(Int m, Coords coords) : m_(m), coords_(std::move(coords)) {}

  Int m_;
  Coords coords_;
};

/// S subset of T, both of the same multiplicity: true iff every coordinate of
/// T is <= the matching coordinate of S. Throws MultiplicityMismatch.
bool is_subset(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Intersection of a nonempty list of semigroups with equal multiplicity:
/// the componentwise maximum of the coordinate tuples.
NumericalSemigroup intersect(const std::vector<NumericalSemigroup>& list);

}  // namespace nsg
