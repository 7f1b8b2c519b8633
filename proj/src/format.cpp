#include "nsg/format.hpp"

#include <charconv>

namespace nsg {

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw ParseError("expected a number, got an empty field");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("expected an unsigned decimal number, got '" + std::string(text) + "'");
  }
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("number out of range: '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  constexpr std::string_view kGaps = "gaps:";
  constexpr std::string_view kKunz = "kunz:";
  if (text.starts_with(kGaps)) {
    return NumericalSemigroup::from_gaps(parse_int_list(text.substr(kGaps.size())));
  }
  if (text.starts_with(kKunz)) {
    const auto rest = text.substr(kKunz.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected kunz:<multiplicity>:<coords>, got '" + std::string(text) + "'");
    const Int m = parse_int(rest.substr(0, colon));
    return NumericalSemigroup::from_coordinates(m, parse_int_list(rest.substr(colon + 1)));
  }
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

std::string format_coords(const Coords& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out;
}

nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  nlohmann::json out;
  out["m"] = s.multiplicity();
  out["coords"] = s.coords();
  out["frobenius"] = s.multiplicity() == 1 ? nlohmann::json() : nlohmann::json(s.frobenius());
  out["genus"] = s.genus();
  return out;
}

}  // namespace nsg
