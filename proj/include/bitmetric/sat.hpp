#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitmetric/bar.hpp"
#include "bitmetric/bitstring.hpp"

namespace bitmetric {

/// CNF over variables a_1..a_var_count. Literals are DIMACS-style signed
/// indices: +i for a_i, -i for its negation. No clause is empty and no clause
/// holds a variable in both polarities.
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Total assignment to a_1..a_L; bits[i-1] holds a_i.
struct Assignment {
  std::vector<int> bits;
  int bit(std::size_t i) const { return bits.at(i - 1); }
  std::string bit_string() const;
};

struct SatResult {
  bool satisfiable = false;
  Assignment model;  // total on [1, var_count] iff satisfiable
};

/// One clause N(b) per member b: the De Morgan dual of "b is my initial
/// segment", i.e. { -i if b_i = 1 else +i }. Variable count is the longest
/// member length; clause order is trie preorder. Rejects a set containing the
/// empty prefix (its clause would be empty; {e} is a bar, handled by callers).
CnfFormula encode_bar_cnf(const PrefixSet& set);

/// Standard DIMACS text: "p cnf L C" header, one 0-terminated clause per line.
std::string dimacs_emit(const CnfFormula& f);

/// Parses DIMACS text ('c' comment lines ignored). Throws ParseError.
CnfFormula dimacs_parse(std::string_view text);

/// Direct evaluation of the formula under a total assignment.
bool satisfies(const CnfFormula& f, const Assignment& a);

/// Complete DPLL with unit propagation and pure-literal elimination,
/// branching on the lowest-indexed unassigned variable, 0 before 1.
/// Variables left unconstrained default to 0, so models are reproducible.
SatResult dpll_solve(const CnfFormula& f);

struct SatBarCheck {
  bool is_bar = false;
  std::optional<Epb> witness;  // model bits followed by 0^omega when not a bar
};

/// The bar decision routed through the clause encoding: the set is a bar iff
/// the CNF is unsatisfiable; a model yields an escaping point.
SatBarCheck check_bar_via_sat(const PrefixSet& set);

}  // namespace bitmetric
