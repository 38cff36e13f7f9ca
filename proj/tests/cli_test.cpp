// End-to-end runs of the command-line tool.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using std::string;

namespace {

const string kCli = CONTINGENT_CLI_PATH;
const string kRoot = CONTINGENT_SOURCE_DIR;

struct RunResult {
  int code;
  string out;
};

RunResult run_raw(const string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  string out;
  std::array<char, 512> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe)) out += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

RunResult run(const string& args) { return run_raw(kCli + " " + args + " 2>&1"); }

string model(const string& name) { return kRoot + "/fixtures/models/" + name + ".model"; }
string derivation(const string& name) {
  return kRoot + "/fixtures/derivations/" + name + ".drv";
}

}  // namespace

TEST_CASE("eval verdicts and exit codes") {
  RunResult r = run("eval " + model("c_not_dc") + " Dp s");
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run("eval " + model("mcn_not_sdm") + " 'D(p|q)' s");
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");

  r = run("--format machine eval " + model("c_not_dc") + " T t --verbose");
  CHECK(r.code == 0);
  CHECK(r.out == "verdict=true truth_set={s t}\n");

  r = run("eval " + model("c_not_dc") + " 'D(p' s");
  CHECK(r.code == 2);
  CHECK(r.out.find("column 4") != string::npos);

  r = run("eval " + model("c_not_dc") + " Dp nowhere");
  CHECK(r.code == 2);
}

TEST_CASE("props reports the class") {
  RunResult r = run("--format machine props " + model("mcn_not_sdm"));
  CHECK(r.code == 0);
  CHECK(r.out == "m=true c=true n=true z=false class=filter\n");

  r = run("--format machine props " + model("c_not_dc"));
  CHECK(r.out == "m=false c=true n=false z=false class=-\n");
}

TEST_CASE("check verdicts") {
  RunResult r = run("check " + derivation("dcprime_from_dc"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") == 0);

  // A corrupted copy is rejected at the corrupted line.
  std::ifstream in(derivation("dmprime_from_dm"));
  string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const string broken = "9. Dp -> D(p -> q) | D(~p -> r)";
  const string swapped = "9. Dp -> D(p -> q) & D(~p -> r)";
  REQUIRE(text.find(broken) != string::npos);
  text.replace(text.find(broken), broken.size(), swapped);
  const string mutated_path = "cli_test_mutated.drv";
  std::ofstream(mutated_path) << text;
  r = run("--format machine check " + mutated_path);
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict=error line=9") == 0);

  r = run("check " + model("c_not_dc"));
  CHECK(r.code == 2);  // not a derivation file
}

TEST_CASE("search writes a witness that reproduces the falsification") {
  const string witness_path = "cli_test_witness.model";
  RunResult r = run("--format machine search dC --props c --max 2 --exhaustive --witness " +
                    witness_path);
  CHECK(r.code == 1);
  REQUIRE(r.out.find("verdict=countermodel") != string::npos);
  const auto state_pos = r.out.find("state=");
  REQUIRE(state_pos != string::npos);
  string state = r.out.substr(state_pos + 6);
  state = state.substr(0, state.find_first_of(" \n"));

  r = run("eval " + witness_path + " 'Dp & Dq -> D(p&q)' " + state);
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("search verdicts and bounds") {
  RunResult r = run("--format machine search dN --props n --max 2 --exhaustive");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=valid_up_to_bound") != string::npos);

  r = run("search dM --props m --max 4 --exhaustive");
  CHECK(r.code == 3);

  r = run("search nonsense --props m --max 2 --exhaustive");
  CHECK(r.code == 2);

  r = run("search dC --props q --max 2 --exhaustive");
  CHECK(r.code == 2);
}

TEST_CASE("seeded searches are reproducible and env-overridable") {
  const string base = "--format machine search dC --props c --max 3 --sample 400 --witness "
                      "cli_test_seed_witness.model";
  const RunResult a = run("--seed 31 " + base);
  const RunResult b = run("--seed 31 " + base);
  CHECK(a.out == b.out);
  const RunResult c = run_raw("CONTINGENT_SEED=31 " + kCli + " " + base + " 2>&1");
  CHECK(c.out == a.out);
  const RunResult d = run("--seed 32 " + base);
  CHECK(d.out != a.out);
}

TEST_CASE("transform subcommands") {
  RunResult r = run("transform star 'D(p & Dq)'");
  CHECK(r.code == 0);
  CHECK(r.out == "B(p & (Bq | B~q)) | B~(p & (Bq | B~q))\n");

  r = run("transform star Bp");
  CHECK(r.code == 2);

  r = run("transform complement " + model("c_not_dc"));
  CHECK(r.code == 0);
  CHECK(r.out == "states: s t\nN s: {s} {t}\nN t:\nV p: s\n");

  // Supplementing an already supplemented model is the identity.
  r = run("transform supplement " + model("mcn_not_sdm"));
  CHECK(r.code == 0);
  std::ifstream in(model("mcn_not_sdm"));
  const string original((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(r.out == original);
}

TEST_CASE("fixture subcommands") {
  RunResult r = run("--format machine fixtures suite --sample 200");
  CHECK(r.code == 0);
  CHECK(r.out.find("item=dN_valid_n verdict=pass") == 0);

  r = run("fixtures show c_not_dc");
  CHECK(r.code == 0);
  CHECK(r.out.find("states: s t") == 0);

  r = run("fixtures show nope");
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("search dC --exhaustive --sample 10").code == 2);
}
