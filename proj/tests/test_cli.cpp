#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conatus/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = conatus::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kScenarioDir = CONATUS_SCENARIO_DIR;

}  // namespace

TEST_CASE("compare subcommand renders the verdict") {
  const auto r = cli({"compare", "C1", "C1 & C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "left > right (witness: C1=1, C2=0)\n");

  const auto eq = cli({"compare", "C1", "C1 | (C1 & C2)"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "left = right\n");
}

TEST_CASE("malformed formula is a usage error with exit 2") {
  const auto r = cli({"compare", "C1 &", "C2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("syntax error") != std::string::npos);
}

TEST_CASE("missing subcommand and unknown flags exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--bogus", "catalog"}).code == 2);
}

TEST_CASE("catalog subcommand prints the dictionary") {
  const auto r = cli({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fear\tbase\tflee\tthreat_present\tdesiring to flee, or escape\n") !=
        std::string::npos);
}

TEST_CASE("simulate writes artifacts into --out") {
  const fs::path dir = fs::temp_directory_path() / "conatus_cli_sim";
  fs::remove_all(dir);
  const auto r = cli({"--out", dir.string(), "simulate",
                      kScenarioDir + "/thirst_satiation.scn"});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "thirst_satiation_01_satiate.txt"));
  CHECK(r.out.find("# count=2") != std::string::npos);
}

TEST_CASE("simulate on a missing file is a validation failure") {
  const auto r = cli({"simulate", "/nonexistent/nope.scn"});
  CHECK(r.code == 2);
}

TEST_CASE("laws subcommand reports a clean order") {
  const auto r = cli({"laws", kScenarioDir + "/hunger_chain.scn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("strict partial order: yes") != std::string::npos);
}

TEST_CASE("wish subcommand runs only the wish directives") {
  const fs::path dir = fs::temp_directory_path() / "conatus_cli_wish";
  fs::remove_all(dir);
  const auto r = cli({"--out", dir.string(), "wish", kScenarioDir + "/wish_present.scn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# stopped_at=9") != std::string::npos);
  // a scenario without wishes is rejected
  const auto none = cli({"wish", kScenarioDir + "/moon_exist.scn"});
  CHECK(none.code == 2);
}

TEST_CASE("observe subcommand tests a regularity from a log file") {
  const fs::path log = fs::temp_directory_path() / "conatus_obs.log";
  {
    std::ofstream out(log);
    out << "# tray drops\n";
    out << "t=0 trigger{support=0} outcome=fall:1\n";
    out << "t=1 trigger{support=0} outcome=fall:1\n";
    out << "t=2 trigger{support=1} outcome=fall:0\n";
  }
  const auto r = cli({"observe", log.string(), "!support", "fall"});
  CHECK(r.code == 0);
  CHECK(r.out == "!support -> fall: unrefuted, support 2\n");

  const auto missing = cli({"observe", "/nonexistent.log", "!support", "fall"});
  CHECK(missing.code == 2);
}

TEST_CASE("--max-steps overrides the step budget") {
  const fs::path dir = fs::temp_directory_path() / "conatus_cli_cap";
  fs::remove_all(dir);
  // with only 1 step allowed the satiation truncates after one swallow
  const auto r = cli({"--out", dir.string(), "--max-steps", "1", "simulate",
                      kScenarioDir + "/thirst_satiation.scn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# truncated=1 actions=1 final_level=1") != std::string::npos);
}

TEST_CASE("--cap lowers the enumeration bound") {
  const auto r = cli({"--cap", "1", "compare", "C1 & C2", "C1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("exceeds cap") != std::string::npos);
}

TEST_CASE("repl: parse, compare, catalog, quit") {
  std::istringstream in(
      "parse \"C1 & (C2 | C3)\"\n"
      "compare \"C1\" \"C1 & C2\"\n"
      "entails \"C1 & C2\" \"C1\"\n"
      "sat \"C1 & !C1\"\n"
      "bogus\n"
      "quit\n");
  std::ostringstream out;
  std::ostringstream err;
  const int code = conatus::cli::run_repl(in, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("C1 & (C2 | C3)\n") != std::string::npos);
  CHECK(out.str().find("left > right (witness: C1=1, C2=0)\n") != std::string::npos);
  CHECK(out.str().find("yes\n") != std::string::npos);
  CHECK(out.str().find("unsatisfiable\n") != std::string::npos);
  CHECK(err.str().find("unknown command") != std::string::npos);
}

TEST_CASE("repl: load and run a scenario") {
  const fs::path dir = fs::temp_directory_path() / "conatus_repl_run";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::istringstream in("load " + kScenarioDir + "/moon_exist.scn\nrun " + dir.string() +
                        "\nlaws\nquit\n");
  std::ostringstream out;
  std::ostringstream err;
  conatus::cli::run_repl(in, out, err);
  CHECK(out.str().find("loaded scenario 'moon_exist'") != std::string::npos);
  CHECK(out.str().find("moon_there: unrefuted, support 0") != std::string::npos);
  CHECK(err.str().empty());

  // error paths keep the loop alive
  std::istringstream bad("run\nparse \"C1 &\"\nquit\n");
  std::ostringstream out2;
  std::ostringstream err2;
  conatus::cli::run_repl(bad, out2, err2);
  CHECK(err2.str().find("no scenario loaded") != std::string::npos);
  CHECK(err2.str().find("syntax error") != std::string::npos);
}
