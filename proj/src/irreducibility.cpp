#include "nsg/irreducibility.hpp"

#include <algorithm>

#include "nsg/gapsets.hpp"
#include "nsg/oversemigroups.hpp"

namespace nsg {

std::string_view to_string(ClassificationLabel label) {
  switch (label) {
    case ClassificationLabel::MSymmetric: return "m-symmetric";
    case ClassificationLabel::MPseudosymmetric: return "m-pseudosymmetric";
    case ClassificationLabel::NotMIrreducible: return "not-m-irreducible";
  }
  return "?";
}

void validate(const FrobeniusPair& pair) {
  if (pair.m < 1 || pair.frobenius < pair.m - 1 || pair.frobenius < 1 ||
      pair.frobenius % pair.m == 0)
    throw Error("InvalidPair", "no semigroup has multiplicity " + std::to_string(pair.m) +
                                   " and Frobenius number " + std::to_string(pair.frobenius));
}

NumericalSemigroup smallest_with_frobenius(const FrobeniusPair& pair) {
  validate(pair);
  const Int m = pair.m;
  const Int next = pair.frobenius + 1;
  Coords coords;
  coords.reserve(static_cast<std::size_t>(m) - 1);
  for (Int i = 1; i < m; ++i) {
    coords.push_back(next + ((i - next) % m + m) % m);
  }
  return NumericalSemigroup::from_coordinates(m, std::move(coords));
}

bool is_irreducible(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) return true;
  const Int frob = s.frobenius();
  return s.genus() == (frob + 2) / 2;
}

bool is_m_irreducible(const NumericalSemigroup& s) {
  if (s.multiplicity() == 1) return true;
  const bool by_special_gaps = special_gaps_above_m(s).size() <= 1;
  const Int m = s.multiplicity();
  const Int g = s.genus();
  const Int frob = s.frobenius();
  const bool by_genus = g == m - 1 || g == m || g == (frob + 2) / 2;
  detail::check(by_special_gaps == by_genus,
                "special-gap and genus criteria for m-irreducibility must agree");
  return by_special_gaps;
}

ClassificationLabel classify(const NumericalSemigroup& s) {
  if (!is_m_irreducible(s)) return ClassificationLabel::NotMIrreducible;
  return s.frobenius() % 2 != 0 ? ClassificationLabel::MSymmetric
                                : ClassificationLabel::MPseudosymmetric;
}

Int min_genus(const FrobeniusPair& pair) {
  validate(pair);
  if (pair.frobenius == pair.m - 1) return pair.m - 1;
  if (pair.frobenius < 2 * pair.m) return pair.m;
  return (pair.frobenius + 2) / 2;
}

NumericalSemigroup canonical_maximal(const FrobeniusPair& pair) {
  validate(pair);
  const Int m = pair.m;
  Coords coords;
  coords.reserve(static_cast<std::size_t>(m) - 1);
  for (Int i = 1; i < m; ++i) coords.push_back(m + i);
  if (pair.frobenius == m - 1)
    return NumericalSemigroup::from_coordinates(m, std::move(coords));
  if (pair.frobenius > 2 * m)
    throw Error("NotUnique", "several maximal semigroups exist for F > 2m");
  const Int r = pair.frobenius - m;  // residue of F, in 1..m-1
  coords[static_cast<std::size_t>(r) - 1] = pair.frobenius + m;
  return NumericalSemigroup::from_coordinates(m, std::move(coords));
}

std::vector<NumericalSemigroup> enumerate_maximal(const FrobeniusPair& pair) {
  validate(pair);
  const Int target_max = pair.frobenius + pair.m;
  std::vector<NumericalSemigroup> members;
  for (const auto& t : oversemigroups(smallest_with_frobenius(pair))) {
    if (*std::max_element(t.coords().begin(), t.coords().end()) == target_max)
      members.push_back(t);
  }
  detail::check(!members.empty(), "a valid pair always admits at least one semigroup");
  std::vector<NumericalSemigroup> out;
  for (const auto& t : members) {
    const bool maximal = std::none_of(members.begin(), members.end(), [&](const auto& u) {
      return u != t && is_subset(t, u);
    });
    if (maximal) out.push_back(t);
  }
  return out;
}

}  // namespace nsg
