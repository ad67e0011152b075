#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "latfano/cli.hpp"
#include "latfano/fixtures.hpp"
#include "latfano/io.hpp"
#include "latfano/normality.hpp"
#include "latfano/suites.hpp"

using namespace latfano;

namespace {

int cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = run_cli(std::vector<std::string>(args.begin(), args.end()), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/latfano_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("polytope files round-trip bit-exactly") {
  Polytope P = builtin("REEVE2").polytope;
  std::string text = format_polytope(P);
  CHECK(parse_polytope(text) == P);

  // arbitrary point order and comments are fine on the way in
  Polytope Q = parse_polytope(
      "# a Reeve simplex\n"
      "5 3\n"
      "1 1 2\n"
      "0 1 0  # repeated points collapse\n"
      "0 1 0\n"
      "1 0 0\n"
      "0 0 0\n");
  CHECK(Q == P);

  for (const auto& f : builtin_fixtures())
    CHECK(parse_polytope(format_polytope(f.polytope)) == f.polytope);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  try {
    parse_polytope("2 3\n0 0 0\nx 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_polytope(""), ParseError);
  CHECK_THROWS_AS(parse_polytope("1 4\n0 0 0 0\n"), ParseError);  // bad dim
  CHECK_THROWS_AS(parse_polytope("2 3\n0 0 0\n"), ParseError);    // truncated
  CHECK_THROWS_AS(parse_polytope("1 3\n0 0 0\ntrailing\n"), ParseError);
}

TEST_CASE("fan files round-trip with and without a divisor") {
  std::string text =
      "rays 4 2\n"
      "1 0\n"
      "0 1\n"
      "-1 2\n"
      "0 -1\n"
      "cones 4\n"
      "0 1\n"
      "1 2\n"
      "2 3\n"
      "3 0\n"
      "divisor\n"
      "0 0 0 1\n";
  auto [F, D] = parse_fan(text);
  REQUIRE(D.has_value());
  CHECK(F.rays().size() == 4);
  CHECK(F.max_cones().size() == 4);

  auto [F2, D2] = parse_fan(format_fan(F, &*D));
  REQUIRE(D2.has_value());
  CHECK(F2 == F);
  CHECK(D2->coeffs == D->coeffs);

  auto [F3, D3] = parse_fan(format_fan(F));
  CHECK(F3 == F);
  CHECK(!D3.has_value());

  CHECK_THROWS_AS(parse_fan("rays 1 2\n1 0\ncones 1\n0\n"), ParseError);
}

TEST_CASE("classification-list blocks in both orientations") {
  // columns-as-vertices (3 rows, 4 columns) followed by rows-as-vertices
  std::string text =
      "3 4\n"
      "0 0 1 1\n"
      "0 1 0 1\n"
      "0 0 0 2\n"
      "\n"
      "4 2\n"
      "0 0\n"
      "1 0\n"
      "0 1\n"
      "1 1\n";
  auto blocks = parse_ks_blocks(text);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == builtin("REEVE2").polytope);
  CHECK(blocks[1].dim() == 2);
  CHECK(blocks[1].vertices().size() == 4);

  CHECK_THROWS_AS(parse_ks_blocks("4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"),
                  ParseError);  // dimension 4 is out of range
}

TEST_CASE("report JSON has the pinned key order and stable timing") {
  auto r = check_idp(builtin("REEVE2").polytope);
  CHECK(to_json(r, true) ==
        "{\"check\":\"idp\",\"holds\":false,\"level\":1,"
        "\"gap\":[[1,1,1]],\"lhs_count\":10,\"rhs_count\":11,"
        "\"elapsed_ms\":0}");

  auto s = check_sum_equality(builtin("UNITCUBE").polytope,
                              builtin("UNITCUBE").polytope);
  std::string j = to_json(s, true);
  CHECK(j.find("\"level\":null") != std::string::npos);
  CHECK(j.find("\"gap\":[]") != std::string::npos);
}

TEST_CASE("suite runs are deterministic across thread settings") {
  SuiteResult a, b;
  setenv("LATFANO_THREADS", "0", 1);
  a = run_suite("fano-minkowski", 7, 6);
  setenv("LATFANO_THREADS", "4", 1);
  b = run_suite("fano-minkowski", 7, 6);
  unsetenv("LATFANO_THREADS");
  CHECK(to_json_lines(a, true) == to_json_lines(b, true));

  CHECK_THROWS_AS(run_suite("no-such-suite", 1, 1), std::invalid_argument);
}

TEST_CASE("suite results at pinned seeds") {
  // all-pass suites
  CHECK(run_suite("idp-polygons", 7, 10).failed == 0);
  CHECK(run_suite("pair-identity-k2", 7, 10).failed == 0);
  CHECK(run_suite("surface-mult", 7, 10).failed == 0);
  CHECK(run_suite("surface-bpf", 7, 10).failed == 0);
  CHECK(run_suite("decompose-width", 7, 10).failed == 0);

  // the minkowski identity suite hits genuine counterexamples; the failing
  // instances at this seed are pinned (the underlying failures are verified
  // independently in test_normality)
  SuiteResult fm = run_suite("fano-minkowski", 7, 10);
  CHECK(fm.passed == 8);
  CHECK(fm.failed == 2);
  CHECK(!fm.items[0].holds);
  CHECK(fm.items[0].gap_points == std::vector<Vec>{Vec{5, 2, 1}});
  CHECK(!fm.items[2].holds);
}

TEST_CASE("cli: check subcommands, exit codes and formats") {
  std::string out;

  CHECK(cli({"check-idp", "builtin:CUBE3"}, &out) == 0);
  CHECK(out.find("holds: true") != std::string::npos);

  CHECK(cli({"check-idp", "builtin:REEVE2", "--format", "json", "--stable"},
            &out) == 1);
  CHECK(out == "{\"check\":\"idp\",\"holds\":false,\"level\":1,"
               "\"gap\":[[1,1,1]],\"lhs_count\":10,\"rhs_count\":11,"
               "\"elapsed_ms\":0}\n");

  std::string reeve = write_temp("reeve.poly",
                                 format_polytope(builtin("REEVE2").polytope));
  CHECK(cli({"check-sum", reeve.c_str(), reeve.c_str()}) == 1);
  CHECK(cli({"check-mink", "builtin:CUBE3", reeve.c_str(), "--k", "2"}) == 0);
  CHECK(cli({"fano-mink", "builtin:CUBE3", reeve.c_str()}) == 0);

  std::string err;
  CHECK(cli({"no-such-command"}, &out, &err) == 2);
  CHECK(cli({"check-idp", "/no/such/file.poly"}, &out, &err) == 2);
  CHECK(cli({"check-idp", "builtin:NOPE"}, &out, &err) == 2);
  CHECK(cli({"check-mink", "builtin:CUBE3", reeve.c_str(), "--k", "0"}, &out,
            &err) == 2);
}

TEST_CASE("cli: geometry subcommands") {
  std::string out;

  CHECK(cli({"reflexive", "builtin:CUBE3"}, &out) == 0);
  CHECK(cli({"reflexive", "builtin:REEVE2"}, &out) == 1);

  CHECK(cli({"polar", "builtin:BIGSIMPLEX"}, &out) == 0);
  CHECK(parse_polytope(out) == builtin("DUALSIMPLEX").polytope);

  CHECK(cli({"width", "builtin:REEVE2", "--format", "json", "--stable"},
            &out) == 0);
  CHECK(out.find("[0,1,0]") != std::string::npos);
  CHECK(cli({"width", "builtin:CUBE3", "--bound", "4"}, &out) == 1);

  CHECK(cli({"decompose", "builtin:UNITCUBE", "--format", "json", "--stable"},
            &out) == 0);
  CHECK(out.find("\"pieces\":") != std::string::npos);

  CHECK(cli({"adjoint", "builtin:BIGSIMPLEX"}, &out) == 0);
  CHECK(cli({"adjoint", "builtin:REEVE2"}, &out) == 1);  // empty interior

  CHECK(cli({"builtin", "REEVE2"}, &out) == 0);
  CHECK(parse_polytope(out) == builtin("REEVE2").polytope);
}

TEST_CASE("cli: fan subcommands read the divisor block") {
  std::string fan = write_temp("f2.fan",
                               "rays 4 2\n1 0\n0 1\n-1 2\n0 -1\n"
                               "cones 4\n0 1\n1 2\n2 3\n3 0\n"
                               "divisor\n0 0 0 1\n");
  std::string out;
  CHECK(cli({"nef", fan.c_str()}, &out) == 0);

  std::string fixed = write_temp("f2fix.fan",
                                 "rays 4 2\n1 0\n0 1\n-1 2\n0 -1\n"
                                 "cones 4\n0 1\n1 2\n2 3\n3 0\n"
                                 "divisor\n0 1 0 0\n");
  CHECK(cli({"fixed", fixed.c_str(), "--format", "json", "--stable"}, &out) ==
        0);
  CHECK(out.find("\"rays\":") != std::string::npos);
  CHECK(out.find("\"fixed\":") != std::string::npos);
  // exactly one ray carries a nonzero multiplicity, and it is 1
  size_t ones = 0, p = out.find("\"fixed\":");
  for (p = out.find('[', p); p < out.size() && out[p] != ']'; ++p)
    if (out[p] == '1') ++ones;
  CHECK(ones == 1);

  std::string nodiv = write_temp("nodiv.fan",
                                 "rays 4 2\n1 0\n0 1\n-1 2\n0 -1\n"
                                 "cones 4\n0 1\n1 2\n2 3\n3 0\n");
  std::string err;
  CHECK(cli({"nef", nodiv.c_str()}, &out, &err) == 2);
}

TEST_CASE("cli: gen is seeded and deterministic") {
  std::string a, b, c;
  CHECK(cli({"gen", "--dim", "3", "--seed", "42", "--box", "3", "--points",
             "6"},
            &a) == 0);
  CHECK(cli({"gen", "--dim", "3", "--seed", "42", "--box", "3", "--points",
             "6"},
            &b) == 0);
  CHECK(cli({"gen", "--dim", "3", "--seed", "43", "--box", "3", "--points",
             "6"},
            &c) == 0);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(parse_polytope(a).dim() == 3);

  std::string polys;
  CHECK(cli({"gen", "--reflexive-polygons", "--format", "json"}, &polys) == 0);
  size_t count = 0, pos = 0;
  // count the separators between top-level vertex lists
  while ((pos = polys.find("]],", pos)) != std::string::npos) {
    ++count;
    pos += 3;
  }
  CHECK(count + 1 == 16);  // 15 separators between 16 polygons
}

TEST_CASE("cli: suite subcommand and batch ks checking") {
  std::string out;
  CHECK(cli({"suite", "idp-polygons", "--seed", "7", "-n", "5", "--format",
             "json", "--stable"},
            &out) == 0);
  CHECK(out.find("\"suite\":\"idp-polygons\"") != std::string::npos);
  CHECK(out.find("\"passed\":5") != std::string::npos);

  CHECK(cli({"suite", "fano-minkowski", "--seed", "7", "-n", "10"}, &out) ==
        1);  // genuine counterexamples at this seed

  std::string ks = write_temp("blocks.ks",
                              "3 4\n0 0 1 1\n0 1 0 1\n0 0 0 2\n"
                              "\n"
                              "4 2\n0 0\n1 0\n0 1\n1 1\n");
  CHECK(cli({"check-idp", "--ks", ks.c_str(), "--format", "json", "--stable"},
            &out) == 1);  // first block is the non-idp simplex
  CHECK(out.find("\"passed\":1") != std::string::npos);
  CHECK(out.find("\"failed\":1") != std::string::npos);

  std::string badks = write_temp("bad.ks", "4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  std::string err;
  CHECK(cli({"check-idp", "--ks", badks.c_str()}, &out, &err) == 2);
}

TEST_CASE("cli: -o writes the output file") {
  std::string path = "/tmp/latfano_test_out.json";
  std::remove(path.c_str());
  std::string out;
  CHECK(cli({"check-idp", "builtin:CUBE3", "--format", "json", "--stable",
             "-o", path.c_str()},
            &out) == 0);
  CHECK(out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  CHECK(content.find("\"check\":\"idp\"") != std::string::npos);
  CHECK(content.find("\"holds\":true") != std::string::npos);
}
