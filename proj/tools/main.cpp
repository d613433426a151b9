// bitmetric: exact computation on the space of infinite binary sequences
// under the bit-metric, and certified finite subcovers of Cantor space and
// of [0,1]. See README.md for formats and exit conventions.
//
// Exit status: 0 mathematical success (bar confirmed / cover reduced / SAT
// answered), 1 mathematical negative (not a bar / not covered), 2 input error.

#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bitmetric/balls.hpp"
#include "bitmetric/bar.hpp"
#include "bitmetric/bitstring.hpp"
#include "bitmetric/error.hpp"
#include "bitmetric/interval.hpp"
#include "bitmetric/io.hpp"
#include "bitmetric/rational.hpp"
#include "bitmetric/sat.hpp"

namespace {

using bitmetric::Ball;
using bitmetric::Epb;
using bitmetric::Prefix;
using bitmetric::PrefixSet;
using bitmetric::Rational;
using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool quiet = false;
  std::size_t depth = 32;
  bool depth_given = false;
};

void print(const Options& opt, const std::string& text) {
  if (!opt.quiet) std::cout << text;
}

void print_line(const Options& opt, const std::string& line) {
  print(opt, line + "\n");
}

void print_json(const Options& opt, const json& j) {
  print_line(opt, j.dump());
}

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::ostringstream out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out << ' ';
    out << indices[i];
  }
  return out.str();
}

json prefixes_json(const PrefixSet& set) {
  json arr = json::array();
  for (const Prefix& p : set.members()) arr.push_back(p.str());
  return arr;
}

int run_dist(const Options& opt, const std::string& a, const std::string& b) {
  const Rational d = beta(Epb::parse(a), Epb::parse(b));
  if (opt.json)
    print_json(opt, json(d.str()));
  else
    print_line(opt, d.str());
  return 0;
}

int run_ball_cyl(const Options& opt, const std::string& ball_text) {
  const auto cyl = ball_to_cylinder(Ball::parse(ball_text));
  if (opt.json)
    print_json(opt, json(cyl.stem.str()));
  else
    print_line(opt, cyl.stem.str());
  return 0;
}

int run_bar_check(const Options& opt, const std::string& file) {
  const PrefixSet set = bitmetric::load_prefix_set_file(file);
  if (bitmetric::is_bar(set)) {
    if (opt.json)
      print_json(opt, json{{"is_bar", true}});
    else
      print_line(opt, "bar");
    return 0;
  }
  const auto esc = bitmetric::find_escape(set);
  if (opt.json)
    print_json(opt, json{{"is_bar", false}, {"escape", esc->witness.str()}});
  else
    print_line(opt, "not a bar; escape " + esc->witness.str());
  return 1;
}

int run_bar_min(const Options& opt, const std::string& file) {
  const PrefixSet antichain =
      bitmetric::minimal_antichain(bitmetric::load_prefix_set_file(file));
  if (opt.json) {
    print_json(opt, prefixes_json(antichain));
  } else {
    std::string out;
    for (const Prefix& p : antichain.members()) out += p.str() + "\n";
    print(opt, out);
  }
  return 0;
}

int run_bar_escape(const Options& opt, const std::string& file) {
  const auto esc = bitmetric::find_escape(bitmetric::load_prefix_set_file(file));
  if (!esc) {
    if (opt.json)
      print_json(opt, json(nullptr));
    else
      print_line(opt, "none");
    return 0;
  }
  if (opt.json)
    print_json(opt, json{{"witness", esc->witness.str()},
                         {"checked_depth", esc->checked_depth}});
  else
    print_line(opt, esc->witness.str());
  return 1;
}

int run_bar_extract(const Options& opt, const std::string& file) {
  const PrefixSet set = bitmetric::load_prefix_set_file(file);
  const auto result = bitmetric::extract_finite_subbar(
      [&set](const Prefix& p) { return set.contains(p); }, opt.depth);
  if (result.fuel_exceeded()) {
    if (opt.json)
      print_json(opt, json{{"fuel_exceeded", json{{"unresolved", result.unresolved.str()},
                                                  {"depth", opt.depth}}}});
    else
      print_line(opt, "fuel exceeded at depth " + std::to_string(opt.depth) +
                          "; unresolved " + result.unresolved.str());
    return 1;
  }
  if (opt.json) {
    print_json(opt, prefixes_json(*result.bar));
  } else {
    std::string out;
    for (const Prefix& p : result.bar->members()) out += p.str() + "\n";
    print(opt, out);
  }
  return 0;
}

int run_cnf_emit(const Options& opt, const std::string& file) {
  const auto formula = bitmetric::encode_bar_cnf(bitmetric::load_prefix_set_file(file));
  if (opt.json) {
    json clauses = json::array();
    for (const auto& c : formula.clauses) clauses.push_back(c);
    print_json(opt, json{{"var_count", formula.var_count}, {"clauses", clauses}});
  } else {
    print(opt, bitmetric::dimacs_emit(formula));
  }
  return 0;
}

int run_cnf_solve(const Options& opt, const std::string& file) {
  const std::string content = bitmetric::read_file(file);
  bitmetric::CnfFormula formula;
  if (bitmetric::looks_like_dimacs(content)) {
    formula = bitmetric::dimacs_parse(content);
  } else {
    std::istringstream in(content);
    const PrefixSet set = bitmetric::load_prefix_set(in, file);
    if (set.contains(Prefix{})) {
      // N(e) is the empty clause: unsatisfiable without any search.
      if (opt.json)
        print_json(opt, json{{"result", "UNSAT"}});
      else
        print_line(opt, "UNSAT");
      return 0;
    }
    formula = bitmetric::encode_bar_cnf(set);
  }
  const auto result = bitmetric::dpll_solve(formula);
  if (!result.satisfiable) {
    if (opt.json)
      print_json(opt, json{{"result", "UNSAT"}});
    else
      print_line(opt, "UNSAT");
    return 0;
  }
  const std::string bits = result.model.bit_string();
  if (opt.json)
    print_json(opt, json{{"result", "SAT"}, {"model", bits}});
  else
    print_line(opt, bits.empty() ? "SAT" : "SAT " + bits);
  return 0;
}

int run_iota(const Options& opt, const std::string& epb_text) {
  const Rational x = bitmetric::iota(Epb::parse(epb_text));
  if (opt.json)
    print_json(opt, json(x.str()));
  else
    print_line(opt, x.str());
  return 0;
}

int run_iota_inv(const Options& opt, const std::string& rational_text) {
  const Epb e = bitmetric::iota_inv(Rational::parse(rational_text));
  if (opt.json)
    print_json(opt, json(e.str()));
  else
    print_line(opt, e.str());
  return 0;
}

int run_cover_cantor(const Options& opt, const std::string& file) {
  const auto balls = bitmetric::load_balls_file(file);
  const auto fuel = opt.depth_given ? std::optional<std::size_t>(opt.depth) : std::nullopt;
  const auto result = bitmetric::subcover_cantor(balls, fuel);
  if (result.indices) {
    if (opt.json) {
      print_json(opt, json(*result.indices));
    } else {
      print_line(opt, join_indices(*result.indices));
    }
    return 0;
  }
  if (result.certified_noncover) {
    if (opt.json)
      print_json(opt, json{{"not_covered", json{{"stem", result.unresolved.str()},
                                                {"depth", result.fuel_used}}}});
    else
      print_line(opt, "not covered; unresolved " + result.unresolved.str());
  } else {
    if (opt.json)
      print_json(opt, json{{"fuel_exceeded", json{{"stem", result.unresolved.str()},
                                                  {"depth", result.fuel_used}}}});
    else
      print_line(opt, "not certified within depth " + std::to_string(result.fuel_used) +
                          "; unresolved " + result.unresolved.str());
  }
  return 1;
}

int run_cover_interval(const Options& opt, const std::string& file) {
  const auto intervals = bitmetric::load_intervals_file(file);
  const auto result = bitmetric::heine_borel_subcover(intervals, opt.depth);
  if (result.covered()) {
    if (opt.json)
      print_json(opt, json{{"indices", *result.indices}});
    else
      print_line(opt, join_indices(*result.indices));
    return 0;
  }
  const auto& d = result.diagnostic;
  if (opt.json)
    print_json(opt, json{{"not_covered", json{{"stem", d.unresolved_stem.str()},
                                              {"point", d.pinned_point.str()},
                                              {"depth", d.depth_reached}}}});
  else
    print_line(opt, "not covered; stem " + d.unresolved_stem.str() + " point " +
                        d.pinned_point.str() + " depth " + std::to_string(d.depth_reached));
  return 1;
}

int run_cover_verify(const Options& opt, const std::string& file,
                     const std::vector<std::size_t>& indices) {
  const auto intervals = bitmetric::load_intervals_file(file);
  std::vector<bitmetric::OpenInterval> chosen;
  if (indices.empty()) {
    chosen = intervals;
  } else {
    for (std::size_t i : indices) {
      if (i >= intervals.size())
        throw bitmetric::ParseError("bad index '" + std::to_string(i) + "': cover has " +
                                    std::to_string(intervals.size()) + " intervals");
      chosen.push_back(intervals[i]);
    }
  }
  const bool ok = bitmetric::verify_cover(chosen);
  if (opt.json)
    print_json(opt, json(ok));
  else
    print_line(opt, ok ? "covered" : "not covered");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bars, SAT bridges and finite subcovers under the bit-metric"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON");
  app.add_flag("--quiet", opt.quiet, "suppress stdout; rely on the exit status");
  auto* depth_opt =
      app.add_option("--depth", opt.depth, "BFS fuel depth (default 32)");

  int exit_code = 0;
  std::string arg_a, arg_b, arg_file;
  std::vector<std::size_t> arg_indices;

  auto* dist = app.add_subcommand("dist", "bit-metric distance between two bitstrings");
  dist->add_option("a", arg_a, "first bitstring, HEAD(PERIOD)")->required();
  dist->add_option("b", arg_b, "second bitstring")->required();
  dist->callback([&] { exit_code = run_dist(opt, arg_a, arg_b); });

  auto* ball = app.add_subcommand("ball", "ball algebra");
  auto* ball_cyl = ball->add_subcommand("cyl", "cylinder of a ball, CENTER@RADIUS");
  ball_cyl->add_option("ball", arg_a, "ball, e.g. 0110(0)@1/4")->required();
  ball_cyl->callback([&] { exit_code = run_ball_cyl(opt, arg_a); });

  auto* bar = app.add_subcommand("bar", "bars over finite prefix sets");
  auto* bar_check = bar->add_subcommand("check", "decide whether the set is a bar");
  auto* bar_min = bar->add_subcommand("min", "prefix-minimal members");
  auto* bar_escape = bar->add_subcommand("escape", "escaping point of a non-bar");
  auto* bar_extract = bar->add_subcommand("extract", "finite sub-bar by bounded BFS");
  for (auto* sub : {bar_check, bar_min, bar_escape, bar_extract})
    sub->add_option("file", arg_file, "prefix-set file")->required()->check(CLI::ExistingFile);
  bar_check->callback([&] { exit_code = run_bar_check(opt, arg_file); });
  bar_min->callback([&] { exit_code = run_bar_min(opt, arg_file); });
  bar_escape->callback([&] { exit_code = run_bar_escape(opt, arg_file); });
  bar_extract->callback([&] { exit_code = run_bar_extract(opt, arg_file); });

  auto* cnf = app.add_subcommand("cnf", "clause encoding of the bar condition");
  auto* cnf_emit = cnf->add_subcommand("emit", "prefix-set file to DIMACS on stdout");
  auto* cnf_solve = cnf->add_subcommand("solve", "DIMACS or prefix-set file to SAT/UNSAT");
  for (auto* sub : {cnf_emit, cnf_solve})
    sub->add_option("file", arg_file, "input file")->required()->check(CLI::ExistingFile);
  cnf_emit->callback([&] { exit_code = run_cnf_emit(opt, arg_file); });
  cnf_solve->callback([&] { exit_code = run_cnf_solve(opt, arg_file); });

  auto* iota_cmd = app.add_subcommand("iota", "binary-expansion value of a bitstring");
  iota_cmd->add_option("epb", arg_a, "bitstring, HEAD(PERIOD)")->required();
  iota_cmd->callback([&] { exit_code = run_iota(opt, arg_a); });

  auto* iota_inv_cmd = app.add_subcommand("iota-inv", "standard-form expansion of a rational");
  iota_inv_cmd->add_option("x", arg_a, "rational in [0,1]")->required();
  iota_inv_cmd->callback([&] { exit_code = run_iota_inv(opt, arg_a); });

  auto* cover = app.add_subcommand("cover", "finite subcover pipelines");
  auto* cover_cantor = cover->add_subcommand("cantor", "reduce a ball cover of Cantor space");
  auto* cover_interval = cover->add_subcommand("interval", "reduce an interval cover of [0,1]");
  auto* cover_verify = cover->add_subcommand("verify", "exact cover check for [0,1]");
  for (auto* sub : {cover_cantor, cover_interval, cover_verify})
    sub->add_option("file", arg_file, "cover file")->required()->check(CLI::ExistingFile);
  cover_verify->add_option("--indices", arg_indices, "restrict to these interval indices");
  cover_cantor->callback([&] {
    opt.depth_given = depth_opt->count() > 0;
    exit_code = run_cover_cantor(opt, arg_file);
  });
  cover_interval->callback([&] { exit_code = run_cover_interval(opt, arg_file); });
  cover_verify->callback([&] { exit_code = run_cover_verify(opt, arg_file, arg_indices); });

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bitmetric::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
