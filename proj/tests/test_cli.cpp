#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"

using namespace regprod;
using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_complex: accepted forms") {
  CHECK(cli::parse_complex("1.5") == Cplx(1.5, 0.0));
  CHECK(cli::parse_complex("-2e-3") == Cplx(-2e-3, 0.0));
  CHECK(cli::parse_complex("(1.5,-0.25)") == Cplx(1.5, -0.25));
  CHECK(cli::parse_complex("(3)") == Cplx(3.0, 0.0));
  CHECK(cli::parse_complex("1+2i") == Cplx(1.0, 2.0));
  CHECK(cli::parse_complex("1-2i") == Cplx(1.0, -2.0));
  CHECK(cli::parse_complex("2i") == Cplx(0.0, 2.0));
  CHECK(cli::parse_complex("-i") == Cplx(0.0, -1.0));
  CHECK(cli::parse_complex("i") == Cplx(0.0, 1.0));
  CHECK(cli::parse_complex("1e-2+3e+4i") == Cplx(1e-2, 3e4));
  CHECK(cli::parse_complex(" 1 + 2i ") == Cplx(1.0, 2.0));
}

TEST_CASE("parse_complex: rejected forms") {
  CHECK_THROWS_AS(cli::parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex("(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex("1..5"), std::invalid_argument);
}

TEST_CASE("split_list: top-level commas only") {
  const auto parts = cli::split_list("(1,2),3,4+5i");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "(1,2)");
  CHECK(parts[1] == "3");
  CHECK(parts[2] == "4+5i");
}

TEST_CASE("cli: no subcommand is a usage error") {
  const auto r = run_cli({});
  CHECK(r.code == 2);
  CHECK(r.err.find("regprod") != std::string::npos);
}

TEST_CASE("cli: help exits cleanly") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("cli: unknown subcommand") {
  const auto r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: malformed shift list is a usage error") {
  const auto r = run_cli({"verify", "mizuno", "--zs", "bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bogus") != std::string::npos);
}

TEST_CASE("cli: shift at a pole is a usage error") {
  const auto r = run_cli({"verify", "mizuno", "--zs", "0"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: passing verification exits 0") {
  const auto r = run_cli({"verify", "mizuno", "--zs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("summary: pass=1 fail=0") != std::string::npos);
}

TEST_CASE("cli: unreachable tolerance exits 1") {
  const auto r = run_cli({"verify", "wallis", "--pairs", "16", "--tol", "1e-15"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: starved term budget exits 3") {
  setenv("REGPROD_MAX_TERMS", "8", 1);
  const auto r = run_cli({"eval", "zeta-e", "--s", "(2,0)", "--z", "1",
                          "--method", "direct"});
  unsetenv("REGPROD_MAX_TERMS");
  CHECK(r.code == 3);
  CHECK(r.out.find("NOT CONVERGED") != std::string::npos);
}

TEST_CASE("cli: invalid term budget override") {
  setenv("REGPROD_MAX_TERMS", "not-a-number", 1);
  const auto r = run_cli({"verify", "wallis"});
  unsetenv("REGPROD_MAX_TERMS");
  CHECK(r.code == 2);
}

TEST_CASE("cli: json output carries full precision") {
  const auto r = run_cli({"--format", "json", "eval", "zeta-e", "--s", "(2,0)",
                          "--z", "(1,0)"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["request"]["subcommand"] == "eval");
  CHECK(doc["request"]["target"] == "zeta-e");
  REQUIRE(doc["results"].size() == 1);
  const auto& row = doc["results"][0];
  CHECK(row["kind"] == "series");
  CHECK(row["converged"] == true);
  const double re = row["value"][0].get<double>();
  CHECK(std::abs(re - std::numbers::pi * std::numbers::pi / 12.0) <= 1e-12);
  CHECK(row["value"][1].get<double>() == 0.0);
  CHECK(row["terms_used"].get<long long>() >= 1);
}

TEST_CASE("cli: json verification schema") {
  const auto r = run_cli({"--format", "json", "verify", "kurokawa", "--n", "2",
                          "--x", "1", "--y", "0.5"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  const auto& row = doc["results"][0];
  CHECK(row["identity"] == "kurokawa_wakayama");
  CHECK(row["pass"] == true);
  CHECK(row["metadata"].contains("poly_identity_max_rel"));
  CHECK(doc["summary"]["pass"] == 1);
  CHECK(doc["summary"]["fail"] == 0);
}

TEST_CASE("cli: lerch with complex shift adds the conjugate-pair row") {
  const auto r = run_cli({"--format", "json", "verify", "lerch", "--x", "1+1i"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["identity"] == "lerch");
  CHECK(doc["results"][1]["identity"] == "lerch_qi");
  CHECK(doc["results"][1]["pass"] == true);
  // the conjugate-pair product is real
  CHECK(std::abs(doc["results"][1]["lhs"][1].get<double>()) <= 1e-10);
}

TEST_CASE("cli: csv output round-trips 17 significant digits") {
  const auto r = run_cli({"--format", "csv", "eval", "gamma-tilde", "--z", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(header.rfind("kind,name,value_re", 0) == 0);
  // quote-aware split: the name field contains commas and is quoted
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char c : row) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  REQUIRE(cells.size() >= 3);
  CHECK(cells[1] == "gamma-tilde(z=(1,0))");
  const double re = std::stod(cells[2]);
  CHECK(re == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
  // %.17g round-trips binary64 exactly: re-rendering reproduces the cell
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", re);
  CHECK(cells[2] == buf);
}

TEST_CASE("cli: determinism modulo runtime") {
  auto strip_runtime = [](std::string text) {
    std::string out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find("runtime_ms") == std::string::npos) out += line + "\n";
    }
    return out;
  };
  const std::vector<std::string> args{"--format", "json", "verify", "suite",
                                      "--seed", "7", "--cases", "3"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
}

TEST_CASE("cli: suite rows are named by case") {
  const auto r = run_cli({"--format", "json", "verify", "suite", "--cases", "2"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["name"] == "suite/case-0");
  CHECK(doc["results"][1]["name"] == "suite/case-1");
  CHECK(doc["results"][0]["metadata"].contains("shifts"));
}

TEST_CASE("cli: table emits plain csv") {
  const auto r = run_cli({"table", "gamma-tilde", "--from", "1", "--to", "2",
                          "--step", "0.5"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "z,gamma_tilde_re,gamma_tilde_im,psi_tilde_re,psi_tilde_im");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("cli: bench compares tail methods against the reference") {
  const auto r = run_cli({"--format", "json", "bench", "accel", "--spec",
                          "1.5,(0.5,1)", "--sizes", "1e3,1e4"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 4);
  for (const auto& row : doc["results"]) {
    const double dev = std::stod(row["deviation_from_reference"].get<std::string>());
    CHECK(dev <= 1e-9);
  }
}

TEST_CASE("cli: psi-tilde order and stieltjes evaluation") {
  const auto r = run_cli({"--format", "json", "eval", "psi-tilde", "--z", "1",
                          "--order", "2"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["results"][0]["value"][0].get<double>() -
                 (-1.8030853547393914)) <= 1e-11);

  const auto s = run_cli({"--format", "json", "eval", "stieltjes", "--k", "0",
                          "--z", "1"});
  CHECK(s.code == 0);
  const json sdoc = json::parse(s.out);
  CHECK(std::abs(sdoc["results"][0]["value"][0].get<double>() -
                 std::numbers::ln2) <= 1e-10);
}
