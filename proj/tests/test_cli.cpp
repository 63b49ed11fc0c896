// End-to-end checks of the CLI binary: exit codes, golden output lines,
// JSON round-trips, and seeded determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef CLI_BIN
#error "CLI_BIN must point at the built cycloschur binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit codes: success, degenerate, usage") {
  CHECK(run("verify --n 2 --r 1 --x 2 --xi 1").exit_code == 0);
  CHECK(run("verify --n 2 --r 1 --x 1 --xi 1").exit_code == 2);   // x^n = xi^n
  CHECK(run("verify --n 2 --r 1 --x 2 --xi 0").exit_code == 2);   // xi = 0
  CHECK(run("verify --n 2 --r 1 --x 2").exit_code == 64);         // missing --xi
  CHECK(run("verify --n 2 --r 1 --x 1,2 --xi 1").exit_code == 64);
  CHECK(run("expand --n 4 --r 2 --p 9").exit_code == 64);
  CHECK(run("nonsense").exit_code == 64);
  CHECK(run("").exit_code == 64);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify text output contains the hand-computed value") {
  const auto res = run("verify --n 2 --r 1 --x 2 --xi 1");
  CHECK(res.out.find("lhs = [-2/9]") != std::string::npos);
  CHECK(res.out.find("rhs = [-2/9]") != std::string::npos);
  CHECK(res.out.find("equal = true") != std::string::npos);
}

TEST_CASE("expand goldens") {
  CHECK(run("expand --n 4 --r 2 --p 0").out == "m[3] + m[2,1]\n");
  CHECK(run("expand --n 4 --r 2 --p 2").out == "m[3,2] + ξ^4·m[1]\n");
  CHECK(run("expand --n 5 --r 1 --p 3").out == "m[3]\n");
}

TEST_CASE("phi-table") {
  const auto at_ones = run("phi-table --n 3 --r 5 --x ones");
  CHECK(at_ones.exit_code == 0);
  CHECK(at_ones.out.find("phi_5 = 51\n") != std::string::npos);

  const auto small = run("phi-table --n 2 --r 2 --x ones");
  CHECK(small.out == "phi_0 = 1\nphi_1 = 2\nphi_2 = 1\n");

  const auto symbolic = run("phi-table --n 3 --r 2");
  CHECK(symbolic.out.find("phi_0 = 1\n") != std::string::npos);
  CHECK(symbolic.out.find("phi_3 = m[2,1]\n") != std::string::npos);
}

TEST_CASE("verify json round-trips byte-identically") {
  const auto res = run(
      "verify --n 3 --r 2 --x 1,1 --xi 1/2 --output json "
      "--strict-printed-form");
  CHECK(res.exit_code == 0);
  std::string body = res.out;
  REQUIRE(!body.empty());
  REQUIRE(body.back() == '\n');
  body.pop_back();
  const auto parsed = nlohmann::ordered_json::parse(body);
  CHECK(parsed.dump() == body);
  CHECK(parsed["equal"] == true);
  CHECK(parsed["backend"] == "exact");
  CHECK(parsed.contains("lhs_printed"));
}

TEST_CASE("float backend via the cli") {
  const auto res =
      run("verify --n 4 --r 2 --x 3,1/2 --xi 2/3 --backend float --output json");
  CHECK(res.exit_code == 0);
  const auto parsed =
      nlohmann::ordered_json::parse(res.out.substr(0, res.out.size() - 1));
  CHECK(parsed["backend"] == "float");
  CHECK(parsed["equal"] == true);
}

TEST_CASE("examples command reproduces every display") {
  const auto res = run("examples");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("[FAIL]") == std::string::npos);
  CHECK(res.out.find("n=4 r=2 expansions") != std::string::npos);
  // deterministic bytes
  CHECK(run("examples").out == res.out);
  const auto js = run("examples --output json");
  const auto parsed =
      nlohmann::ordered_json::parse(js.out.substr(0, js.out.size() - 1));
  CHECK(parsed["all_pass"] == true);
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  const auto a = run("selftest --seed 5");
  const auto b = run("selftest --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("[FAIL]") == std::string::npos);
  CHECK(a.out.find("criterion-9") != std::string::npos);
}

TEST_CASE("selftest float variants pass at 1e-9") {
  const auto res = run("selftest --seed 6 --backend float");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("theorem-sweep (float)") != std::string::npos);
}
