#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "picard3/fan_io.hpp"

namespace {

std::string g_binary;   // path to the picard3 executable
std::string g_datadir;  // tests/data

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string capture = "/tmp/picard3_cli_test_out.txt";
  const std::string cmd = "'" + g_binary + "' " + args + " >" + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify text output and exit code") {
  const RunResult r = run_cli("verify --n 2 --b 0");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS"));
  CHECK(contains(r.out, "strongly exceptional"));
  CHECK(contains(r.out, "L_5 = (0,0,0)"));
}

TEST_CASE("verify structured output matches the golden file") {
  const RunResult r = run_cli("verify --n 2 --b 0 --format structured");
  REQUIRE(r.code == 0);
  nlohmann::json got = nlohmann::json::parse(r.out);
  nlohmann::json want = nlohmann::json::parse(read_file(g_datadir + "/verify_2_0.json"));
  got.erase("elapsed_ms");  // timing is the only unstable field
  want.erase("elapsed_ms");
  CHECK(got == want);
}

TEST_CASE("split subcommand") {
  const RunResult text = run_cli("split --n 2 --b 0 --p 2");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "4 distinct classes, total 4"));

  const RunResult r = run_cli("split --n 2 --b 0 --p 2 --format structured");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("total") == 4);
  CHECK(j.at("summands").size() == 4);
  CHECK(j.at("in_split_sets") == true);

  const RunResult twisted = run_cli("split --n 2 --b 1 --p 3 --class=-1,0,-1");
  CHECK(twisted.code == 0);
  CHECK(contains(twisted.out, "total 9"));
}

TEST_CASE("cohomology subcommand") {
  const RunResult r = run_cli("cohomology --n 2 --b 0 --class=-1,1,-1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "h^0 = 0, h^1 = 1, h^2 = 0"));

  const RunResult s = run_cli("cohomology --n 3 --b 1 --class=1,0,0 --format structured");
  REQUIRE(s.code == 0);
  const nlohmann::json j = nlohmann::json::parse(s.out);
  CHECK(j.at("h") == nlohmann::json::array({3, 0, 0, 0}));
  CHECK(j.at("euler_characteristic") == 3);
}

TEST_CASE("forbidden subcommand") {
  const RunResult r = run_cli("forbidden --n 2 --b 0 --format structured");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == 11);
  CHECK(j.at("subsets").size() == 11);
  CHECK(j.at("subsets")[0].at("rays") == nlohmann::json::array());
}

TEST_CASE("collection subcommand") {
  const RunResult r = run_cli("collection --n 2 --b 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "L_1 = (-2,-1,-1)"));
  CHECK(contains(r.out, "generates"));
}

TEST_CASE("fan file round trip through --emit-fan and --fan") {
  const std::string path = "/tmp/picard3_cli_test_fan.json";
  const RunResult emit = run_cli("forbidden --n 2 --b 0 --emit-fan " + path);
  REQUIRE(emit.code == 0);

  const picard3::Fan fan = picard3::load_fan(path);
  REQUIRE(fan.family.has_value());
  CHECK(fan.family->n == 2);
  CHECK(fan.family->b == 0);

  const RunResult verify = run_cli("verify --fan " + path);
  CHECK(verify.code == 0);
  CHECK(contains(verify.out, "PASS"));

  const RunResult coh = run_cli("cohomology --fan " + path + " --class=0,0,1");
  CHECK(coh.code == 0);
  CHECK(contains(coh.out, "h^0 = 1"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("verify").code == 2);                       // no fan source
  CHECK(run_cli("verify --n 2").code == 2);                 // --n without --b
  CHECK(run_cli("verify --n 1 --b 0").code == 2);           // n out of range
  CHECK(run_cli("cohomology --n 2 --b 0").code == 2);       // missing --class
  CHECK(run_cli("cohomology --n 2 --b 0 --class=1").code == 2);
  CHECK(run_cli("split --n 2 --b 0 --p 1").code == 2);      // p < 2
  CHECK(run_cli("frobnicate").code == 2);                   // unknown subcommand
  CHECK(run_cli("verify --fan /nonexistent.json").code == 2);
}

TEST_CASE("malformed fan files are rejected") {
  const std::string path = "/tmp/picard3_cli_bad_fan.json";
  {
    std::ofstream out(path);
    out << R"({"dimension":2,"rays":[[2,0],[0,1]],"maximal_cones":[[1,2]]})";
  }
  const RunResult r = run_cli("cohomology --fan " + path + " --class=0,0");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "primitive"));
  std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("verify --help").code == 0);
}

int main(int argc, char** argv) {
  std::vector<char*> dt_args{argv[0]};
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (!a.empty() && a[0] != '-') {
      if (g_binary.empty()) {
        g_binary = a;
        continue;
      }
      if (g_datadir.empty()) {
        g_datadir = a;
        continue;
      }
    }
    dt_args.push_back(argv[i]);
  }
  if (g_binary.empty() || g_datadir.empty()) {
    std::fprintf(stderr, "usage: test_cli <picard3-binary> <data-dir> [doctest args]\n");
    return 64;
  }
  doctest::Context ctx(static_cast<int>(dt_args.size()), dt_args.data());
  return ctx.run();
}
