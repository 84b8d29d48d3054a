#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "octo/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = octo::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("associator subcommand", "[cli]") {
  const auto r = run({"associator", "e1", "e2", "e4", "--multiplicative"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\nEq2: OK  Eq3: OK\n");

  const auto add = run({"associator", "e1", "e2", "e4", "--additive"});
  CHECK(add.code == 0);
  CHECK(add.out == "-2e7\n");

  const auto m = run({"--format", "machine", "associator", "e1", "e2", "e4"});
  CHECK(m.out ==
        "kind\tmultiplicative-associator\nvalue\t-1,0,0,0,0,0,0,0\neq2\tOK\neq3\tOK\n");

  CHECK(run({"associator", "e1", "e2", "e4", "--additive", "--multiplicative"}).code == 1);
  CHECK(run({"associator", "e1", "0", "e4"}).code == 2);
}

TEST_CASE("commutator subcommand", "[cli]") {
  const auto r = run({"commutator", "e1", "e2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\nForward: OK  Reverse: OK\n");
  CHECK(run({"commutator", "e1", "e2", "--additive"}).out == "2e3\n");
  // Negative operands are not mistaken for options.
  CHECK(run({"commutator", "-e1", "e2", "--additive"}).out == "-2e3\n");
  CHECK(run({"commutator", "e1"}).code == 1);
}

TEST_CASE("eval subcommand", "[cli]") {
  CHECK(run({"eval", "(e1*e2)*e4"}).out == "e7\n");
  const auto chain = run({"eval", "e1*e2*e4"});
  CHECK(chain.out == "e7\n");
  CHECK(chain.err.find("warning") != std::string::npos);
  CHECK(chain.err.find("(e1*(e2*e4)) = -e7") != std::string::npos);

  const auto lets = run({"eval", "x*y", "--let", "x=1/2 + e1", "--let", "y=x~"});
  CHECK(lets.code == 0);
  CHECK(lets.out == "5/4\n");

  CHECK(run({"eval", "x"}).code == 2);
  CHECK(run({"eval", "0^-1"}).code == 2);
  CHECK(run({"eval", "x*"}).code == 1);
  CHECK(run({"eval", "e1", "--let", "e2=1"}).code == 1);
  CHECK(run({"--backend", "float", "eval", "0.5*e1"}).out == "0.5e1\n");
  CHECK(run({"--format", "machine", "eval", "e7"}).out == "value\t0,0,0,0,0,0,0,1\n");
}

TEST_CASE("orders subcommand", "[cli]") {
  const auto r = run({"orders", "e1", "e2", "e4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "x1 = e1\nx2 = e2\nx3 = e4\n"
        "1   (x1*(x2*x3))  = -e7\n"
        "2   ((x1*x2)*x3)  = e7\n");

  const auto m = run({"orders", "e1", "e2", "e4", "e3", "--matrix"});
  CHECK(m.code == 0);
  CHECK(m.out.find("unit diagonal a[i][i] = 1: OK") != std::string::npos);
  CHECK(m.out.find("conjugate symmetry a[j][i] = conj(a[i][j]): OK") != std::string::npos);

  const auto mm = run({"--format", "machine", "orders", "e1", "e2", "e4", "--matrix"});
  CHECK(mm.out.find("1 2\t-1,0,0,0,0,0,0,0\n") != std::string::npos);
  CHECK(mm.out.find("2 2\t1,0,0,0,0,0,0,0\n") != std::string::npos);

  CHECK(run({"orders", "1", "1", "1", "1", "1", "1", "1", "1", "1", "--matrix"}).code == 1);
  CHECK(run({"orders", "1", "0"}).code == 0);
  CHECK(run({"orders", "1", "0", "--matrix"}).code == 2);
}

TEST_CASE("check subcommand", "[cli]") {
  const auto r = run({"check", "--cases", "20", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eq2:") != std::string::npos);
  CHECK(r.out.find("all 20 cases passed") != std::string::npos);
  CHECK(r.out.find("FAILED") == std::string::npos);

  const auto a = run({"--format", "machine", "check", "--cases", "10", "--seed", "3"});
  const auto b = run({"--format", "machine", "check", "--cases", "10", "--seed", "3"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("schafer\t10/10\n") != std::string::npos);

  CHECK(run({"--backend", "float", "check", "--cases", "20"}).code == 0);
}

TEST_CASE("global flag validation", "[cli]") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--backend", "complex", "eval", "1"}).code == 1);
  CHECK(run({"--tolerance", "0.1", "eval", "1"}).code == 1);
  CHECK(run({"--backend", "float", "--tolerance", "0.1", "eval", "1"}).code == 0);
  // Global flags are also accepted after the subcommand.
  CHECK(run({"eval", "1/2", "--backend", "float"}).out == "0.5\n");
  CHECK(run({"--help"}).code == 0);
}
