#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(DUBOIS_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string roundtrip(const std::string& text) { return nlohmann::ordered_json::parse(text).dump(2) + "\n"; }

}  // namespace

TEST_CASE("fedder subcommand") {
  const auto r = run("fedder --poly 'x1*x2^2 - x3^2' --vars x1,x2,x3 --primes 2..7 --format json");
  REQUIRE(r.code == 0);
  CHECK(roundtrip(r.out) == r.out);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][0]["passes"] == false);
  CHECK(j["rows"][1]["witness"] == "x1*x2^2*x3^2");
  CHECK(j["summary"]["characteristic_two_scanned"] == true);

  const auto text = run("fedder --poly 'x2^2 - x1^3' --vars x1,x2 --primes 3,5");
  CHECK(text.code == 0);
  CHECK(text.out.find("fail") != std::string::npos);
}

TEST_CASE("fedder reads a polynomial file") {
  const std::string path = "cli_test_poly.txt";
  std::ofstream(path) << "x1*x2\n";
  const auto r = run("fedder --poly-file " + path + " --vars x1,x2 --primes 5 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out)["rows"][0]["witness"] == "x1^4*x2^4");
  std::remove(path.c_str());
}

TEST_CASE("mult and slc subcommands") {
  auto r = run("mult --poly 'x2^2 - x1^2*x3' --vars x1,x2,x3 --point 0,0,1 --cross-check --format json");
  REQUIRE(r.code == 0);
  CHECK(roundtrip(r.out) == r.out);
  CHECK(nlohmann::ordered_json::parse(r.out)["summary"]["mu"] == 2);

  r = run("mult --poly 'x2^2 - x1^2*x3' --vars x1,x2,x3 --point 1/2,0,0");
  CHECK(r.code == 0);
  // On the surface, but d/dx3 = -1/4 there.
  CHECK(r.out.find("mu = 1") != std::string::npos);

  r = run("slc --mu 32 --ambient-dim 30 --format json");
  REQUIRE(r.code == 0);
  CHECK(roundtrip(r.out) == r.out);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["summary"]["verdict"] == "NotSLC");
  CHECK(j["summary"]["discrepancy_coefficient"] == -2);

  r = run("slc --poly 'x1^4 + x2^4 + x3^4' --vars x1,x2,x3 --point 0,0,0 --ambient-dim 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("NotSLC") != std::string::npos);
}

TEST_CASE("battery subcommand is reproducible") {
  const auto a = run("battery --n 5 --primes 5..13 --format json --workers 1");
  const auto b = run("battery --n 5 --primes 5..13 --format json --workers 8");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(roundtrip(a.out) == a.out);
  CHECK(nlohmann::ordered_json::parse(a.out)["summary"]["all_pass"] == true);

  const auto one = run("battery --case 0 --d 3 --primes 5");
  CHECK(one.code == 0);
  CHECK(one.out.find("x1*x2*x3") != std::string::npos);
}

TEST_CASE("exit codes") {
  // Parse errors.
  CHECK(run("fedder --poly 'x1 +' --vars x1 --primes 2").code == 1);
  CHECK(run("fedder --poly 'x1 + y' --vars x1 --primes 2").code == 1);
  CHECK(run("fedder --poly x1 --vars x1 --primes 2..").code == 1);
  CHECK(run("fedder --poly x1 --vars x1 --primes 2 --format yaml").code == 1);
  CHECK(run("mult --poly x1 --vars x1 --point 1/0").code == 1);
  CHECK(run("nonsense").code == 1);
  // Precondition violations.
  CHECK(run("fedder --poly x1 --vars x1 --primes 4").code == 2);
  CHECK(run("fedder --poly 0 --vars x1 --primes 3").code == 2);
  CHECK(run("mult --poly x1 --vars x1 --point 0,0").code == 2);
  CHECK(run("slc --poly x1 --vars x1 --point 0 --ambient-dim 3").code == 2);
  CHECK(run("battery --case 9").code == 2);
  // Error text is positioned.
  CHECK(run("fedder --poly 'x1*(x2' --vars x1,x2 --primes 2").out.find("position 6") != std::string::npos);
}
