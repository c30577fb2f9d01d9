#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_raw(const std::string& command) {
  const std::string cmd = command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run(const std::string& args) { return run_raw(std::string(LIEDIM_CLI_PATH) + " " + args); }

}  // namespace

TEST_CASE("witt subcommand") {
  auto r = run("witt --n 2 --r 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("w(2,6) = 9") != std::string::npos);
  CHECK(r.out.find("bounds OK") != std::string::npos);

  r = run("witt --n 1 --r 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("w(1,5) = 0") != std::string::npos);

  r = run("witt --n 2 --r 0");
  CHECK(r.code == 2);
  CHECK(r.out.find("r must be ≥ 1") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("b-table --p 2 --n 2").code == 2);
  CHECK(run("b-table --p 2 --n 2 --k 4").code == 2);
  CHECK(run("b-table --p 2 --n 2 --k 3 --format xml").code == 2);
  CHECK(run("oracle lie-power --n 2 --r 3 --field f4").code == 2);
  CHECK(run("oracle lie-module --r 7").code == 2);
  CHECK(run("verify --suite nope").code == 2);
}

TEST_CASE("tables") {
  auto r = run("b-table --p 2 --n 2 --k 3 --m-max 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n12,2,2,3,304,335,304,335,") != std::string::npos);
  r = run("c-table --p 2 --k 3 --m-max 2 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dim_num\": \"35481600\"") != std::string::npos);
  r = run("b-table --p 2 --n 2 --k 3 --k 5 --m-max 1 --float-bits 24");
  CHECK(r.code == 0);
  CHECK(r.out.find("8.888889e-01") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  auto r = run("oracle lie-power --n 2 --r 6 --field f2");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 9") != std::string::npos);
  CHECK(r.out.find("match") != std::string::npos);
  r = run("oracle lie-module --r 7 --slow");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 720") != std::string::npos);
  r = run("oracle weight-space --q 3 --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 360") != std::string::npos);
  r = run("oracle lyndon --n 2 --r 3");
  CHECK(r.out == "001\n011\n");
  r = run("oracle expand --n 2 --word 001");
  CHECK(r.out == "001:1\n010:-2\n100:1\n");
  r = run("oracle aperiodic --n 2 --r 6");
  CHECK(r.out.find("54") != std::string::npos);
}

TEST_CASE("LIEDIM_BUDGET overrides the oracle budget") {
  CHECK(run("oracle lie-module --r 5").code == 0);
  const auto r = run_raw("env LIEDIM_BUDGET=10 " LIEDIM_CLI_PATH " oracle lie-module --r 5");
  CHECK(r.code == 2);
  CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("verify suites") {
  auto r = run("verify --suite witt");
  CHECK(r.code == 0);
  CHECK(r.out.find("witt.bounds") != std::string::npos);
  CHECK(r.out.find("640 checks") != std::string::npos);
  r = run("verify --suite oracle");
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle.lie_module_rank") != std::string::npos);
}
