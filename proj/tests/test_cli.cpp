#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ELLCY_CLI_PATH
#error "build must define ELLCY_CLI_PATH"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ellcy_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the installed driver with stdout+stderr captured in a file.
RunResult run(const std::string& args) {
  fs::path cap = scratch() / "capture.txt";
  std::string cmd = std::string(ELLCY_CLI_PATH) + " " + args + " > " +
                    cap.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("periods emits the holomorphic row") {
  RunResult r = run("periods --preset main4 --d1 10 --d2 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"pi0\""));
  CHECK(contains(r.output, "13860"));
  CHECK(contains(r.output, "4084080"));
}

TEST_CASE("slice constant lookup") {
  RunResult r = run("periods --preset main4 --slice-constants 2 --format text");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "c0 1/16"));
  CHECK(contains(r.output, "closed_form_ok 1"));
}

TEST_CASE("unknown preset stops with a usage error") {
  RunResult r = run("periods --preset nonesuch");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "unknown preset"));
}

TEST_CASE("parameterless preset needs explicit parameters") {
  RunResult r = run("periods --preset fam0 --d1 4 --d2 1");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "--n"));
}

TEST_CASE("instanton table carries its provenance note") {
  RunResult r = run("gw --gamma 2 --t-order 1 --d1 10 --d2 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "# gamma 2"));
  CHECK(contains(r.output, "classical q1^0 term omitted"));
  CHECK(contains(r.output, "960"));
  CHECK(contains(r.output, "4800"));
}

TEST_CASE("full table matches the frozen corner") {
  RunResult r = run("gw --gamma 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "-20,-820,-68060,-7486440"));
  CHECK(contains(r.output, "97531011394560"));
  CHECK(contains(r.output, "119544387620870983680"));
}

TEST_CASE("empty truncation is rejected") {
  RunResult r = run("gw --d1 0");
  CHECK(r.exit_code == 2);
  RunResult r2 = run("gw --gamma 5");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("byte identical reruns") {
  fs::path a = scratch() / "a.csv", b = scratch() / "b.csv";
  RunResult r1 = run("gw --gamma 1 --t-order 2 --out " + a.string());
  RunResult r2 = run("gw --gamma 1 --t-order 2 --out " + b.string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("fit defaults to the first sector decomposition") {
  RunResult r = run("fit");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "E4*E6^3 -185/9"));
  CHECK(contains(r.output, "E4^4*E6 -175/9"));
}

TEST_CASE("fit json carries exact strings") {
  RunResult r = run("fit --builtin e4cubed --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"E4^3\": \"1\""));
}

TEST_CASE("config file values are overridden by flags") {
  fs::path cfg = scratch() / "cfg.json";
  std::ofstream(cfg) << "{\"preset\":\"main4\",\"d1\":6,\"d2\":1,"
                        "\"format\":\"text\"}";
  RunResult base = run("periods --config " + cfg.string());
  CHECK(base.exit_code == 0);
  CHECK(contains(base.output, "caps 6 1"));
  RunResult over = run("periods --config " + cfg.string() + " --d1 4");
  CHECK(over.exit_code == 0);
  CHECK(contains(over.output, "caps 4 1"));

  fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"caps\":[6,1]}";
  RunResult rb = run("periods --config " + bad.string());
  CHECK(rb.exit_code == 2);
  CHECK(contains(rb.output, "unknown key"));
}

TEST_CASE("verify suite passes end to end") {
  RunResult r = run("verify --q-order 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "sections ok"));
  CHECK(!contains(r.output, "FAIL"));
}

TEST_SUITE_END();
