#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "bitmetric/bar.hpp"
#include "bitmetric/bitstring.hpp"
#include "bitmetric/interval.hpp"
#include "bitmetric/io.hpp"
#include "bitmetric/rational.hpp"
#include "bitmetric/sat.hpp"
#include "cli_scenarios.hpp"

using cliutil::run_cli;
using cliutil::with_fixtures;
using json = nlohmann::json;

static std::string fixture(const std::string& name) {
  return std::string(BITMETRIC_FIXTURE_DIR) + "/" + name;
}

TEST_CASE("exit codes and pinned text output") {
  for (const auto& s : cliutil::scenarios()) {
    CAPTURE(s.name);
    const auto r = run_cli(with_fixtures(s.args));
    CHECK(r.exit_code == s.expect_exit);
    if (s.expect_out) CHECK(r.out == s.expect_out);
  }
}

TEST_CASE("error diagnostics name the offending token") {
  const auto bad_epb = run_cli("dist '10a(0)' '1(0)'", /*merge_stderr=*/true);
  CHECK(bad_epb.exit_code == 2);
  CHECK(bad_epb.out.find("10a(0)") != std::string::npos);

  const auto bad_file = run_cli(with_fixtures("bar check {FIX}/bad_prefix.txt"), true);
  CHECK(bad_file.exit_code == 2);
  CHECK(bad_file.out.find("01a") != std::string::npos);

  const auto unknown = run_cli("frobnicate", true);
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.find("--help") != std::string::npos);  // usage hint
}

TEST_CASE("quiet mode silences stdout but keeps the exit code") {
  const auto r = run_cli(with_fixtures("bar check {FIX}/nonbar3.txt --quiet"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  const auto ok = run_cli(with_fixtures("cover verify {FIX}/cover_two.txt --quiet"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.empty());
}

TEST_CASE("json golden outputs") {
  const auto check = [](const std::string& args, const std::string& expect, int code) {
    CAPTURE(args);
    const auto r = run_cli(with_fixtures(args));
    CHECK(r.exit_code == code);
    CHECK(r.out == expect + "\n");
  };
  check("dist '101(0)' '1011(1)' --json", "\"1/8\"", 0);
  check("ball cyl '0110(0)@1/4' --json", "\"011\"", 0);
  check("bar check {FIX}/bar2.txt --json", R"json({"is_bar":true})json", 0);
  check("bar check {FIX}/nonbar3.txt --json", R"json({"is_bar":false,"escape":"11(0)"})json", 1);
  check("bar min {FIX}/antichain_shadow.txt --json", R"json(["0","1"])json", 0);
  check("bar escape {FIX}/bar2.txt --json", "null", 0);
  check("bar escape {FIX}/nonbar3.txt --json", R"json({"witness":"11(0)","checked_depth":2})json", 1);
  check("bar extract {FIX}/bar3.txt --depth 4 --json", R"json(["0","10","11"])json", 0);
  check("bar extract {FIX}/nonbar3.txt --depth 5 --json",
        R"json({"fuel_exceeded":{"unresolved":"11000","depth":5}})json", 1);
  check("cnf emit {FIX}/bar3.txt --json", R"json({"var_count":2,"clauses":[[1],[-1,2],[-1,-2]]})json", 0);
  check("cnf solve {FIX}/nonbar3.txt --json", R"json({"result":"SAT","model":"11"})json", 0);
  check("cnf solve {FIX}/unsat.cnf --json", R"json({"result":"UNSAT"})json", 0);
  check("iota '(01)' --json", "\"1/3\"", 0);
  check("iota-inv 1/2 --json", "\"1(0)\"", 0);
  check("cover cantor {FIX}/balls_cover.txt --json", "[0,1]", 0);
  check("cover cantor {FIX}/balls_nocover.txt --json",
        R"json({"not_covered":{"stem":"11","depth":2}})json", 1);
  check("cover cantor {FIX}/balls_nocover.txt --depth 1 --json",
        R"json({"fuel_exceeded":{"stem":"0","depth":1}})json", 1);
  check("cover interval {FIX}/cover_two.txt --depth 4 --json", R"json({"indices":[0,1]})json", 0);
  check("cover interval {FIX}/cover_punctured.txt --depth 6 --json",
        R"json({"not_covered":{"stem":"011111","point":"63/128","depth":6}})json", 1);
  check("cover verify {FIX}/cover_two.txt --json", "true", 0);
  check("cover verify {FIX}/cover_punctured.txt --json", "false", 1);
}

TEST_CASE("json output parses back to the library values") {
  // distance
  {
    const auto r = run_cli("dist '101(0)' '1011(1)' --json");
    const auto j = json::parse(r.out);
    CHECK(bitmetric::Rational::parse(j.get<std::string>()) ==
          beta(bitmetric::Epb::parse("101(0)"), bitmetric::Epb::parse("1011(1)")));
  }
  // escape witness
  {
    const auto r = run_cli(with_fixtures("bar escape {FIX}/nonbar3.txt --json"));
    const auto j = json::parse(r.out);
    const auto esc = find_escape(bitmetric::load_prefix_set_file(fixture("nonbar3.txt")));
    REQUIRE(esc.has_value());
    CHECK(bitmetric::Epb::parse(j["witness"].get<std::string>()) == esc->witness);
    CHECK(j["checked_depth"].get<std::size_t>() == esc->checked_depth);
  }
  // interval subcover
  {
    const auto r = run_cli(with_fixtures("cover interval {FIX}/cover_two.txt --depth 4 --json"));
    const auto j = json::parse(r.out);
    const auto lib = bitmetric::heine_borel_subcover(
        bitmetric::load_intervals_file(fixture("cover_two.txt")), 4);
    REQUIRE(lib.covered());
    CHECK(j["indices"].get<std::vector<std::size_t>>() == *lib.indices);
  }
  // cnf emission
  {
    const auto r = run_cli(with_fixtures("cnf emit {FIX}/bar3.txt --json"));
    const auto j = json::parse(r.out);
    const auto lib = bitmetric::encode_bar_cnf(
        bitmetric::load_prefix_set_file(fixture("bar3.txt")));
    CHECK(j["var_count"].get<int>() == lib.var_count);
    CHECK(j["clauses"].get<std::vector<std::vector<int>>>() == lib.clauses);
  }
}

TEST_CASE("dimacs text on stdout round-trips through the parser") {
  const auto r = run_cli(with_fixtures("cnf emit {FIX}/bar3.txt"));
  REQUIRE(r.exit_code == 0);
  const auto parsed = bitmetric::dimacs_parse(r.out);
  CHECK(parsed == bitmetric::encode_bar_cnf(
                      bitmetric::load_prefix_set_file(fixture("bar3.txt"))));
}
