#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsg/core.hpp"
#include "nsg/decomposition.hpp"
#include "nsg/format.hpp"
#include "nsg/gapsets.hpp"
#include "nsg/irreducibility.hpp"
#include "nsg/oracle.hpp"
#include "nsg/oversemigroups.hpp"

namespace {

using nsg::Int;
using nsg::NumericalSemigroup;
using json = nlohmann::json;

struct Options {
  std::string format = "text";
  bool verify = false;
  unsigned threads = 1;
};

std::string join(const std::vector<Int>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

json tuples_json(const std::vector<NumericalSemigroup>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(s.coords());
  return out;
}

void print_tuples(const std::vector<NumericalSemigroup>& list, const Options& opt) {
  if (opt.format == "json") {
    std::cout << tuples_json(list) << "\n";
  } else {
    for (const auto& s : list) std::cout << nsg::format_coords(s.coords()) << "\n";
  }
}

void print_ints(const std::vector<Int>& values, const Options& opt) {
  if (opt.format == "json")
    std::cout << json(values) << "\n";
  else
    std::cout << join(values) << "\n";
}

void print_bool(bool value, const Options& opt) {
  std::cout << (opt.format == "json" ? (value ? "true" : "false") : (value ? "true" : "false"))
            << "\n";
}

class VerifyFailure : public std::runtime_error {
public:
  explicit VerifyFailure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool ok, const std::string& what) {
  if (!ok) throw VerifyFailure(what);
}

// Pseudo-Frobenius numbers straight from the definition: gaps x with x + s a
// member for every nonzero member s (members beyond F - x are automatic).
std::vector<Int> definitional_pf(const NumericalSemigroup& s) {
  std::vector<Int> out;
  const Int frob = s.frobenius();
  for (Int x : s.gaps()) {
    bool pf = true;
    for (Int t = 1; t <= frob - x && pf; ++t) {
      if (s.contains(t) && !s.contains(x + t)) pf = false;
    }
    if (pf) out.push_back(x);
  }
  return out;
}

std::vector<Int> brute_special_gaps_above_m(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x : nsg::oracle::brute_special_gaps(s)) {
    if (x > s.multiplicity()) out.push_back(x);
  }
  return out;
}

int run_info(const NumericalSemigroup& s, const Options& opt) {
  if (opt.verify) {
    require(NumericalSemigroup::from_gaps(s.gaps()) == s, "gap set does not round-trip");
    require(NumericalSemigroup::from_coordinates(s.multiplicity(), s.coords()) == s,
            "coordinates do not round-trip");
  }
  const bool has_frob = s.multiplicity() > 1;
  if (opt.format == "json") {
    json out = nsg::semigroup_json(s);
    out["gaps"] = s.gaps();
    out["apery"] = s.apery().elements;
    std::cout << out << "\n";
  } else {
    std::cout << "m: " << s.multiplicity() << "\n";
    std::cout << "frobenius: " << (has_frob ? std::to_string(s.frobenius()) : "none") << "\n";
    std::cout << "genus: " << s.genus() << "\n";
    std::cout << "coords: " << nsg::format_coords(s.coords()) << "\n";
    std::cout << "gaps: " << join(s.gaps()) << "\n";
    std::cout << "apery: " << join(s.apery().elements) << "\n";
  }
  return 0;
}

int run_decompose(const NumericalSemigroup& s, bool all_minimals, const Options& opt) {
  const auto result = nsg::minimal_decomposition(s, opt.threads);
  const auto minimals = nsg::minimal_m_irreducible_oversemigroups(s, opt.threads);
  if (opt.verify) {
    require(nsg::intersect(result.components) == s, "components do not intersect back to S");
    std::vector<std::vector<Int>> all_p_sets;
    for (const auto& minimal : minimals) all_p_sets.push_back(nsg::p_set(s, minimal));
    const std::size_t cover = result.target.empty() ? 0 : result.components.size();
    require(nsg::oracle::brute_min_cover(result.target, all_p_sets) == cover,
            "cover size is not minimum");
    for (const auto& c : result.components)
      require(nsg::is_m_irreducible(c), "component is not m-irreducible");
  }
  if (opt.format == "json") {
    json out;
    out["target"] = result.target;
    out["minimals"] = tuples_json(minimals);
    out["components"] = tuples_json(result.components);
    out["p_sets"] = result.p_sets;
    std::cout << out << "\n";
  } else {
    std::cout << "target: " << join(result.target) << "\n";
    if (all_minimals) {
      for (const auto& minimal : minimals)
        std::cout << "minimal: " << nsg::format_coords(minimal.coords())
                  << " excludes: " << join(nsg::p_set(s, minimal)) << "\n";
    }
    for (std::size_t i = 0; i < result.components.size(); ++i)
      std::cout << "component: " << nsg::format_coords(result.components[i].coords())
                << " excludes: " << join(result.p_sets[i]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups of fixed multiplicity: invariants, special gaps,\n"
               "oversemigroup enumeration, m-irreducibility, and minimal decomposition"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verify", opt.verify, "re-derive the result with a brute-force oracle");
  app.add_option("--threads", opt.threads, "worker threads for frontier enumeration")
      ->check(CLI::PositiveNumber);

  std::string arg;
  Int arg_m = 0;
  Int arg_f = 0;
  std::size_t limit = nsg::kDefaultOversemigroupLimit;
  bool all_minimals = false;
  bool decompose_json = false;

  const char* semigroup_help = "semigroup: generators `5,7,9`, gap set `gaps:1,2,4`, or "
                               "coordinates `kunz:5:16,7,18,9`";
  auto* info = app.add_subcommand("info", "multiplicity, Frobenius number, genus, gaps, "
                                          "coordinates, and Apery set");
  info->add_option("semigroup", arg, semigroup_help)->required();
  auto* pf = app.add_subcommand("pf", "pseudo-Frobenius numbers");
  pf->add_option("semigroup", arg, semigroup_help)->required();
  auto* sg = app.add_subcommand("special-gaps", "gaps that can be adjoined one at a time");
  sg->add_option("semigroup", arg, semigroup_help)->required();
  auto* over = app.add_subcommand("oversemigroups",
                                  "all oversemigroups of the same multiplicity");
  over->add_option("semigroup", arg, semigroup_help)->required();
  over->add_option("--limit", limit, "fail beyond this many results (0 = unlimited)");
  auto* irr = app.add_subcommand("irreducible", "irreducibility test");
  irr->add_option("semigroup", arg, semigroup_help)->required();
  auto* mirr = app.add_subcommand("m-irreducible", "m-irreducibility test");
  mirr->add_option("semigroup", arg, semigroup_help)->required();
  auto* cls = app.add_subcommand("classify",
                                 "m-symmetric / m-pseudosymmetric / not-m-irreducible");
  cls->add_option("semigroup", arg, semigroup_help)->required();
  auto* ming = app.add_subcommand("min-genus",
                                  "minimum genus for a multiplicity and Frobenius number");
  ming->add_option("m", arg_m, "multiplicity")->required();
  ming->add_option("F", arg_f, "Frobenius number")->required();
  auto* maximal = app.add_subcommand("maximal", "all inclusion-maximal semigroups with the "
                                                "given multiplicity and Frobenius number");
  maximal->add_option("m", arg_m, "multiplicity")->required();
  maximal->add_option("F", arg_f, "Frobenius number")->required();
  auto* dec = app.add_subcommand("decompose",
                                 "minimal decomposition into m-irreducible semigroups");
  dec->add_option("semigroup", arg, semigroup_help)->required();
  dec->add_flag("--all-minimals", all_minimals,
                "also list every minimal m-irreducible oversemigroup");
  dec->add_flag("--json", decompose_json, "shorthand for --format json");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << "subcommands: info, pf, special-gaps, oversemigroups, irreducible, "
                 "m-irreducible, classify, min-genus, maximal, decompose\n";
    return 2;
  }
  if (decompose_json) opt.format = "json";

  try {
    if (ming->parsed() || maximal->parsed()) {
      const nsg::FrobeniusPair pair{arg_m, arg_f};
      if (ming->parsed()) {
        const Int genus = nsg::min_genus(pair);
        if (opt.verify) {
          Int best = -1;
          for (const auto& t : nsg::oracle::enumerate_s_m_f(pair))
            best = best < 0 ? t.genus() : std::min(best, t.genus());
          require(best == genus, "minimum genus does not match the enumeration");
        }
        std::cout << (opt.format == "json" ? json(genus).dump() : std::to_string(genus))
                  << "\n";
      } else {
        const auto maxima = nsg::enumerate_maximal(pair);
        if (opt.verify) {
          auto members = nsg::oracle::enumerate_s_m_f(pair);
          std::vector<NumericalSemigroup> expected;
          for (const auto& t : members) {
            if (std::none_of(members.begin(), members.end(), [&](const auto& u) {
                  return u != t && nsg::is_subset(t, u);
                }))
              expected.push_back(t);
          }
          require(expected == maxima, "maximal set does not match the enumeration");
        }
        print_tuples(maxima, opt);
      }
    } else {
      const NumericalSemigroup s = nsg::parse_semigroup(arg);
      if (info->parsed()) {
        run_info(s, opt);
      } else if (pf->parsed()) {
        const auto result = nsg::pseudo_frobenius(s);
        if (opt.verify) require(result == definitional_pf(s), "pseudo-Frobenius mismatch");
        print_ints(result, opt);
      } else if (sg->parsed()) {
        const auto result = nsg::special_gaps(s);
        if (opt.verify)
          require(result == nsg::oracle::brute_special_gaps(s), "special-gap mismatch");
        print_ints(result, opt);
      } else if (over->parsed()) {
        const auto result = nsg::oversemigroups(s, limit, opt.threads);
        if (opt.verify)
          require(result == nsg::oracle::brute_oversemigroups(s), "oversemigroup mismatch");
        print_tuples(result, opt);
      } else if (irr->parsed()) {
        const bool result = nsg::is_irreducible(s);
        if (opt.verify)
          require(result == (nsg::oracle::brute_special_gaps(s).size() <= 1),
                  "irreducibility mismatch");
        print_bool(result, opt);
      } else if (mirr->parsed()) {
        const bool result = nsg::is_m_irreducible(s);
        if (opt.verify)
          require(result == (brute_special_gaps_above_m(s).size() <= 1),
                  "m-irreducibility mismatch");
        print_bool(result, opt);
      } else if (cls->parsed()) {
        const auto label = nsg::classify(s);
        if (opt.verify) {
          const bool mirred = brute_special_gaps_above_m(s).size() <= 1;
          const auto expected = !mirred ? nsg::ClassificationLabel::NotMIrreducible
                                : s.frobenius() % 2 != 0
                                    ? nsg::ClassificationLabel::MSymmetric
                                    : nsg::ClassificationLabel::MPseudosymmetric;
          require(label == expected, "classification mismatch");
        }
        if (opt.format == "json")
          std::cout << json(std::string(nsg::to_string(label))) << "\n";
        else
          std::cout << nsg::to_string(label) << "\n";
      } else if (dec->parsed()) {
        run_decompose(s, all_minimals, opt);
      }
    }
    if (opt.verify) std::cerr << "verify: ok\n";
  } catch (const nsg::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerifyFailure& e) {
    std::cerr << "verify: mismatch: " << e.what() << "\n";
    return 1;
  } catch (const nsg::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
