#include "bitmetric/sat.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "bitmetric/error.hpp"

namespace bitmetric {

std::string Assignment::bit_string() const {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

CnfFormula encode_bar_cnf(const PrefixSet& set) {
  if (set.contains(Prefix{}))
    throw std::invalid_argument(
        "encode_bar_cnf: the empty prefix has an empty clause; {e} is a bar");
  CnfFormula f;
  f.var_count = static_cast<int>(set.max_length());
  for (const Prefix& b : set.members()) {
    std::vector<int> clause;
    clause.reserve(b.length());
    for (std::size_t i = 1; i <= b.length(); ++i)
      clause.push_back(b.bit(i) ? -static_cast<int>(i) : static_cast<int>(i));
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::string dimacs_emit(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

void validate(const CnfFormula& f) {
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw ParseError("bad cnf: empty clause");
    for (int lit : clause) {
      const int var = std::abs(lit);
      if (lit == 0 || var > f.var_count)
        throw ParseError("bad cnf: literal '" + std::to_string(lit) + "' out of range");
      for (int other : clause)
        if (other == -lit)
          throw ParseError("bad cnf: clause holds both polarities of variable " +
                           std::to_string(var));
    }
  }
}

}  // namespace

CnfFormula dimacs_parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  bool have_header = false;
  long expected_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream header(line);
      std::string p, fmt;
      if (!(header >> p >> fmt >> f.var_count >> expected_clauses) || fmt != "cnf")
        throw ParseError("bad cnf header '" + line + "'");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("bad cnf: clause before 'p cnf' header");
    std::istringstream body(line);
    std::string tok;
    while (body >> tok) {
      int lit = 0;
      try {
        std::size_t pos = 0;
        lit = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad cnf literal '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!have_header) throw ParseError("bad cnf: missing 'p cnf' header");
  if (!current.empty()) throw ParseError("bad cnf: unterminated clause");
  if (expected_clauses != static_cast<long>(f.clauses.size()))
    throw ParseError("bad cnf: header declares " + std::to_string(expected_clauses) +
                     " clauses, found " + std::to_string(f.clauses.size()));
  validate(f);
  return f;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const int value = a.bit(static_cast<std::size_t>(std::abs(lit)));
      if ((lit > 0 && value == 1) || (lit < 0 && value == 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Solver-local state; one instance per formula.
class Dpll {
 public:
  explicit Dpll(const CnfFormula& f) : f_(f), value_(f.var_count + 1, kUnassigned) {}

  SatResult run() {
    SatResult result;
    result.satisfiable = search();
    if (result.satisfiable) {
      result.model.bits.resize(f_.var_count);
      for (int v = 1; v <= f_.var_count; ++v)
        result.model.bits[v - 1] = value_[v] == kTrue ? 1 : 0;  // unassigned defaults to 0
    }
    return result;
  }

 private:
  static constexpr int kUnassigned = -1;
  static constexpr int kFalse = 0;
  static constexpr int kTrue = 1;

  const CnfFormula& f_;
  std::vector<int> value_;  // 1-based
  std::vector<int> trail_;

  bool lit_true(int lit) const {
    const int v = value_[std::abs(lit)];
    return v != kUnassigned && (v == kTrue) == (lit > 0);
  }
  bool lit_false(int lit) const {
    const int v = value_[std::abs(lit)];
    return v != kUnassigned && (v == kTrue) != (lit > 0);
  }

  void assign(int lit) {
    value_[std::abs(lit)] = lit > 0 ? kTrue : kFalse;
    trail_.push_back(std::abs(lit));
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  // False on conflict (a clause with every literal false).
  bool propagate_units() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : f_.clauses) {
        int unassigned_lit = 0;
        int unassigned_count = 0;
        bool sat = false;
        for (int lit : clause) {
          if (lit_true(lit)) {
            sat = true;
            break;
          }
          if (!lit_false(lit)) {
            unassigned_lit = lit;
            ++unassigned_count;
          }
        }
        if (sat) continue;
        if (unassigned_count == 0) return false;
        if (unassigned_count == 1) {
          assign(unassigned_lit);
          changed = true;
        }
      }
    }
    return true;
  }

  // Assigns variables occurring with a single polarity among clauses not yet
  // satisfied; such assignments only satisfy clauses, never falsify them.
  void assign_pures() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> pos(f_.var_count + 1, 0), neg(f_.var_count + 1, 0);
      for (const auto& clause : f_.clauses) {
        bool sat = false;
        for (int lit : clause)
          if (lit_true(lit)) {
            sat = true;
            break;
          }
        if (sat) continue;
        for (int lit : clause) {
          if (value_[std::abs(lit)] != kUnassigned) continue;
          (lit > 0 ? pos : neg)[std::abs(lit)]++;
        }
      }
      for (int v = 1; v <= f_.var_count; ++v) {
        if (value_[v] != kUnassigned) continue;
        if (pos[v] > 0 && neg[v] == 0) {
          assign(v);
          changed = true;
        } else if (neg[v] > 0 && pos[v] == 0) {
          assign(-v);
          changed = true;
        }
      }
    }
  }

  bool all_satisfied() const {
    for (const auto& clause : f_.clauses) {
      bool sat = false;
      for (int lit : clause)
        if (lit_true(lit)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  }

  int lowest_unassigned() const {
    for (int v = 1; v <= f_.var_count; ++v)
      if (value_[v] == kUnassigned) return v;
    return 0;
  }

  bool search() {
    const std::size_t mark = trail_.size();
    if (!propagate_units()) {
      undo_to(mark);
      return false;
    }
    assign_pures();
    if (all_satisfied()) return true;
    const int v = lowest_unassigned();
    if (v == 0) {
      undo_to(mark);
      return false;
    }
    const std::size_t branch_mark = trail_.size();
    assign(-v);  // 0 before 1
    if (search()) return true;
    undo_to(branch_mark);
    assign(v);
    if (search()) return true;
    undo_to(mark);
    return false;
  }
};

}  // namespace

SatResult dpll_solve(const CnfFormula& f) {
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw std::invalid_argument("dpll_solve: empty clause");
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > f.var_count)
        throw std::invalid_argument("dpll_solve: literal out of range");
  }
  return Dpll(f).run();
}

SatBarCheck check_bar_via_sat(const PrefixSet& set) {
  if (set.contains(Prefix{})) return SatBarCheck{true, std::nullopt};
  const CnfFormula f = encode_bar_cnf(set);
  const SatResult r = dpll_solve(f);
  if (!r.satisfiable) return SatBarCheck{true, std::nullopt};
  return SatBarCheck{false, Epb(Prefix(r.model.bit_string()), Prefix("0"))};
}

}  // namespace bitmetric
