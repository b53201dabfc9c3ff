// End-to-end checks of the CLI binary: output shapes, JSON round-trips and
// the 0/1/2 exit-code contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(KOSZUL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_path(const std::string& name) {
  return std::string(KOSZUL_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("flag report as JSON") {
  const CliResult r = run_cli("flag \"F4(2,3)\" --json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("group") == "F4");
  CHECK(out.at("koszul_weight") == json::array({5, 0, 0, 6}));
  CHECK(out.at("spin") == false);
  CHECK(out.at("b2") == 2);
  CHECK(out.at("d") == 6);
}

TEST_CASE("emitted JSON re-parses and re-serializes byte-identically") {
  for (const std::string args :
       {std::string("flag \"E6(2,3,4,5,6)\" --json"),
        std::string("cspace \"E7(1,2,3,5)\" --t0 \"1,0,0\" --json"),
        std::string("classical B --n0 0 --blocks 2 --r 2 --json")}) {
    const CliResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    const ordered_json round = ordered_json::parse(r.out);
    CHECK(round.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("full flag of E8") {
  const CliResult r = run_cli("flag \"E8()\" --json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("d") == 120);
  CHECK(out.at("spin") == true);
  CHECK(out.at("koszul_vector") == json::array({2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(out.at("dim") == 240);
}

TEST_CASE("black-node entry mode complements the list") {
  const CliResult a = run_cli("flag \"E7(1,2,3,5)\" --json");
  const CliResult b = run_cli("flag \"E7(4,6,7)\" --black --json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("ascii rendering avoids multibyte symbols") {
  const CliResult r = run_cli("flag \"E6(2,3,4,5,6)\" --ascii");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("12L_1") != std::string::npos);
  CHECK(r.out.find("Λ") == std::string::npos);
}

TEST_CASE("classical report marks route agreement") {
  const CliResult r = run_cli("classical B --n0 0 --blocks 2 --r 2 --json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("koszul_closed") == json::array({6}));
  CHECK(out.at("koszul_agree") == true);
  CHECK(out.at("spin_formula") == true);
  CHECK(out.at("spin_agree") == true);

  const CliResult human = run_cli("classical C --n0 0 --blocks 3 --r 0");
  REQUIRE(human.exit_code == 0);
  CHECK(human.out.find("AGREE") != std::string::npos);
  CHECK(human.out.find("(4)") != std::string::npos);
}

TEST_CASE("cspace reports") {
  const CliResult r = run_cli("cspace \"E7(1,2,3,5)\" --t0 \"1,0,0\" --json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("spin") == true);
  CHECK(out.at("b2") == 1);
  CHECK(out.at("fiber_dim") == 2);

  const CliResult ms = run_cli("cspace \"E6()\" --t0 \"\" --json");
  REQUIRE(ms.exit_code == 0);
  const json mout = json::parse(ms.out);
  CHECK(mout.at("spin") == true);
  CHECK(mout.at("trivial_c1") == true);
  CHECK(mout.at("b2") == 0);

  const CliResult cons = run_cli("cspace \"E7(1,2,3,5)\" --construct --json");
  REQUIRE(cons.exit_code == 0);
  CHECK(json::parse(cons.out).at("constructions").size() == 2);
}

TEST_CASE("regress passes on the shipped fixtures") {
  const CliResult flags = run_cli("regress " + data_path("exceptional_flags.json"));
  CHECK(flags.exit_code == 0);
  CHECK(flags.out.find("OK") != std::string::npos);
  CHECK(flags.out.find("45 fibrations") != std::string::npos);

  const CliResult classical = run_cli("regress " + data_path("classical_families.json"));
  CHECK(classical.exit_code == 0);
}

TEST_CASE("regress exit codes distinguish mismatch from unusable input") {
  // negative control: corrupt one multiplicity count
  std::ifstream in(data_path("exceptional_flags.json"));
  REQUIRE(in.good());
  json doc = json::parse(in);
  doc["rows"][0]["d"] = 999;
  const std::string corrupted = "/tmp/koszul_corrupted_fixture.json";
  std::ofstream(corrupted) << doc.dump();
  const CliResult bad = run_cli("regress " + corrupted);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
  std::remove(corrupted.c_str());

  CHECK(run_cli("regress /nonexistent/fixture.json").exit_code == 1);
  const std::string garbage = "/tmp/koszul_garbage_fixture.json";
  std::ofstream(garbage) << "not json";
  CHECK(run_cli("regress " + garbage).exit_code == 1);
  std::remove(garbage.c_str());
}

TEST_CASE("usage and validation errors exit with 1") {
  CHECK(run_cli("flag \"E7(9)\"").exit_code == 1);
  CHECK(run_cli("flag \"nonsense\"").exit_code == 1);
  CHECK(run_cli("flag \"A3(1,2,3)\"").exit_code == 1);
  CHECK(run_cli("cspace \"E7(1,2,3,5)\" --t0 \"1,0\"").exit_code == 1);
  CHECK(run_cli("classical D --n0 0 --blocks 3 --r 1").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
}
