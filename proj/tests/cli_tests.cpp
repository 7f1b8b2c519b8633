#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded in or discarded, capturing stdout.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command =
      std::string(NSG_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("info text output is stable") {
  const auto result = run_cli("info 5,7,9");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "m: 5\n"
        "frobenius: 13\n"
        "genus: 8\n"
        "coords: 16,7,18,9\n"
        "gaps: 1 2 3 4 6 8 11 13\n"
        "apery: 0 7 9 16 18\n");
}

TEST_CASE("info on the naturals") {
  const auto result = run_cli("info 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "m: 1\n"
        "frobenius: none\n"
        "genus: 0\n"
        "coords: \n"
        "gaps: \n"
        "apery: 0\n");
}

TEST_CASE("special gaps from a gap set") {
  const auto result = run_cli("special-gaps gaps:1,2,3,4,6,8,11,13");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "11 13\n");
}

TEST_CASE("pf subcommand") {
  const auto result = run_cli("pf kunz:5:6,12,13,19");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "7 14\n");
}

TEST_CASE("oversemigroups listing") {
  const auto result = run_cli("oversemigroups kunz:5:16,7,18,9");
  CHECK(result.exit_code == 0);
  std::set<std::string> lines;
  std::stringstream stream(result.output);
  std::string line;
  while (std::getline(stream, line)) lines.insert(line);
  CHECK(lines == std::set<std::string>{"11,7,13,9", "11,7,18,9", "11,7,8,9", "16,7,13,9",
                                       "16,7,18,9", "16,7,8,9", "6,7,13,9", "6,7,8,9"});
  SUBCASE("limit failure") {
    const auto limited = run_cli("oversemigroups kunz:5:16,7,18,9 --limit 3", true);
    CHECK(limited.exit_code == 1);
    CHECK(limited.output.find("LimitExceeded") != std::string::npos);
  }
}

TEST_CASE("decompose json") {
  const auto result = run_cli("decompose kunz:5:11,22,28,14 --format json");
  CHECK(result.exit_code == 0);
  const json out = json::parse(result.output);
  CHECK(out["target"] == json::array({17, 23}));
  CHECK(out["components"].size() == 2);
  CHECK(out["minimals"].size() == 3);
  CHECK(out["p_sets"].size() == 2);
  SUBCASE("--json shorthand matches") {
    const auto alias = run_cli("decompose kunz:5:11,22,28,14 --json");
    CHECK(alias.output == result.output);
  }
}

TEST_CASE("decompose text with minimals") {
  const auto result = run_cli("decompose kunz:5:11,22,28,14 --all-minimals");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("target: 17 23\n") == 0);
  CHECK(result.output.find("minimal: 11,17,28,14 excludes: 23\n") != std::string::npos);
  CHECK(result.output.find("minimal: 11,22,8,14 excludes: 17\n") != std::string::npos);
  CHECK(result.output.find("minimal: 11,22,13,9 excludes: 17\n") != std::string::npos);
}

TEST_CASE("classification and tests") {
  CHECK(run_cli("classify kunz:4:5,6,7").output == "m-symmetric\n");
  CHECK(run_cli("classify kunz:3:4,5").output == "m-pseudosymmetric\n");
  CHECK(run_cli("classify kunz:5:16,7,18,9").output == "not-m-irreducible\n");
  CHECK(run_cli("irreducible 2,3").output == "true\n");
  CHECK(run_cli("m-irreducible kunz:5:16,7,8,9").output == "true\n");
  CHECK(run_cli("m-irreducible kunz:5:16,7,18,9 --format json").output == "false\n");
}

TEST_CASE("min-genus and maximal") {
  CHECK(run_cli("min-genus 5 13").output == "7\n");
  const auto result = run_cli("maximal 5 7");
  CHECK(result.output == "6,12,8,9\n");
  const auto invalid = run_cli("min-genus 5 10", true);
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.output.find("InvalidPair") != std::string::npos);
}

TEST_CASE("json round trip reproduces info") {
  const auto first = run_cli("info 5,7,9 --format json");
  CHECK(first.exit_code == 0);
  const json out = json::parse(first.output);
  std::string kunz = "kunz:" + out["m"].dump() + ":";
  for (std::size_t i = 0; i < out["coords"].size(); ++i) {
    if (i > 0) kunz += ",";
    kunz += out["coords"][i].dump();
  }
  const auto second = run_cli("info " + kunz + " --format json");
  CHECK(second.output == first.output);
}

TEST_CASE("verify mode") {
  CHECK(run_cli("special-gaps 5,7,9 --verify").exit_code == 0);
  CHECK(run_cli("oversemigroups kunz:5:16,7,18,9 --verify").exit_code == 0);
  CHECK(run_cli("decompose kunz:5:11,22,28,14 --verify").exit_code == 0);
  CHECK(run_cli("maximal 5 13 --verify").exit_code == 0);
  CHECK(run_cli("min-genus 5 13 --verify").exit_code == 0);
}

TEST_CASE("domain errors exit 1 and name the error") {
  const auto result = run_cli("info 4,6", true);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("NotCofinite") != std::string::npos);

  const auto closed = run_cli("info gaps:2", true);
  CHECK(closed.exit_code == 1);
  CHECK(closed.output.find("NotClosed") != std::string::npos);

  const auto kunz = run_cli("info kunz:5:7,7,18,9", true);
  CHECK(kunz.exit_code == 1);
  CHECK(kunz.output.find("BadResidue") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("bogus", true).exit_code == 2);
  CHECK(run_cli("", true).exit_code == 2);
  CHECK(run_cli("info", true).exit_code == 2);
  CHECK(run_cli("info 5x7", true).exit_code == 2);
  CHECK(run_cli("info kunz:5", true).exit_code == 2);
  CHECK(run_cli("--help", true).exit_code == 0);
}
