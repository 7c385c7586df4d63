#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "sqtriplets/io.hpp"
#include "support/fixtures.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SQT_CLI_PATH) + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) res.out += buf.data();
  const int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

}  // namespace

TEST_CASE("cli solves the worked triplet") {
  const CliResult r =
      run_cli("triplet solve --n 3 --A 0,2 --B 0,2,3 --C 1,2,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("alpha:    1,3") != std::string::npos);
  CHECK(r.out.find("beta:     2,3,1") != std::string::npos);
  CHECK(r.out.find("gamma:    3,6,2") != std::string::npos);
  CHECK(r.out.find("nullity:  1") != std::string::npos);

  const CliResult m =
      run_cli("triplet solve --n 3 --A 0,2 --B 0,2,3 --C 1,2,3 --format machine");
  CHECK(m.status == 0);
  CHECK(m.out.find("\"nullity\": 1") != std::string::npos);
  CHECK(m.out.find("\"balanced\": true") != std::string::npos);
}

TEST_CASE("cli exit codes distinguish usage and domain errors") {
  CHECK(run_cli("triplet solve --n 3 --A 0,2").status == 2);
  CHECK(run_cli("nonsense").status == 2);
  // count identity fails: domain error
  const CliResult dom = run_cli("triplet solve --n 2 --A 0,2 --B 0,2 --C 0,2");
  CHECK(dom.status == 1);
  CHECK(dom.out.find("error") != std::string::npos);
}

TEST_CASE("cli matrix cube check") {
  const CliResult r = run_cli("matrix --n 12 --check-cube");
  CHECK(r.status == 0);
  CHECK(r.out.find("A^3 = (-1)^n I: OK") != std::string::npos);

  const CliResult m = run_cli("matrix --n 2");
  CHECK(m.status == 0);
  CHECK(m.out.find("1 -1 1") != std::string::npos);
  CHECK(m.out.find("2 -1 0") != std::string::npos);
}

TEST_CASE("cli demo prints the worked chain and triangle corners") {
  const CliResult r = run_cli("demo example23");
  CHECK(r.status == 0);
  CHECK(r.out.find("S^2 <- S(-2)^3 <- S(-3)") != std::string::npos);
  CHECK(r.out.find("S(-1)^3 <- S(-2)^6 <- S(-3)^2") != std::string::npos);
  CHECK(r.out.find("a = 0") != std::string::npos);
  CHECK(r.out.find("c = 0") != std::string::npos);
  CHECK(r.out.find("b = 1") != std::string::npos);
  CHECK(r.out.find("alpha:    1,3") != std::string::npos);
}

TEST_CASE("cli complex pipeline through files") {
  const std::string in = "cli_test_in.json";
  const std::string out = "cli_test_out.json";
  {
    std::ofstream f(in);
    sqt::write_complex(fixtures::example23(), f);
  }
  CHECK(run_cli("complex validate --in " + in).status == 0);
  const CliResult r = run_cli("complex ad --in " + in + " --out " + out);
  CHECK(r.status == 0);
  {
    std::ifstream f(out);
    REQUIRE(f.good());
    const sqt::FreeSqComplex adf = sqt::read_complex(f);
    CHECK(sqt::singly_graded_summary(adf) == "S^2 <- S(-2)^3 <- S(-3)");
  }
  const CliResult inv = run_cli("complex invariants --in " + in);
  CHECK(inv.status == 0);
  CHECK(inv.out.find("B (generators") != std::string::npos);
  std::remove(in.c_str());
  std::remove(out.c_str());

  CHECK(run_cli("complex validate --in does_not_exist.json").status == 1);
}

TEST_CASE("cli enumerate and tensor ranks") {
  const CliResult r = run_cli("triplet enumerate --n 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("n=1; A=0; B=0,1; C=1") != std::string::npos);
  CHECK(r.out.find("n=1; A=0,1; B=1; C=0") != std::string::npos);
  CHECK(r.out.find("n=1; A=1; B=0; C=0,1") != std::string::npos);

  const CliResult t = run_cli("tensor ranks --n 9 --A 1,3,4,7");
  CHECK(t.status == 0);
  CHECK(t.out.find("rank at degree 1: 2520") != std::string::npos);
  CHECK(t.out.find("rank at degree 7: 1260") != std::string::npos);
  CHECK(t.out.find("concordant with solver and Herzog-Kuhl: yes") !=
        std::string::npos);

  const CliResult reduced =
      run_cli("triplet reduce --n 3 --A 0,2 --B 0,2,3 --C 1,2,3");
  CHECK(reduced.status == 0);
  CHECK(reduced.out.find("n=3; A=1,2; B=0,2; C=1,2,3") != std::string::npos);
}

TEST_CASE("cli verify runs the smallest sweep") {
  const CliResult r = run_cli("verify --suite solver --max-n 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("verify: OK") != std::string::npos);
}
