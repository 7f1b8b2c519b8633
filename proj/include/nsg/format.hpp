#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nsg/core.hpp"

namespace nsg {

/// Malformed input text (not a domain error); callers map this to a usage
/// diagnostic rather than a semigroup error.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Strictly parses a comma-separated list of unsigned decimal integers.
/// An empty string yields an empty list.
std::vector<Int> parse_int_list(std::string_view text);

/// Parses one of the three semigroup spellings:
///   5,7,9                    generators
///   gaps:1,2,3,4,6,8,11,13   gap set
///   kunz:5:16,7,18,9         multiplicity and coordinate tuple
/// Syntax problems throw ParseError; constructor failures propagate as Error.
NumericalSemigroup parse_semigroup(std::string_view text);

/// "16,7,18,9" (empty string for the naturals).
std::string format_coords(const Coords& coords);

/// {"m": 5, "coords": [16,7,18,9], "frobenius": 13, "genus": 8};
/// frobenius is null for the naturals.
nlohmann::json semigroup_json(const NumericalSemigroup& s);

}  // namespace nsg
