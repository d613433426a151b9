#pragma once

// Shared test utilities: seeded generators plus the independent oracles the
// suites check against (raw bit expansion, exhaustive bar enumeration,
// exhaustive SAT enumeration). None of these reuse the library's decision
// paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bitmetric/bar.hpp"
#include "bitmetric/bitstring.hpp"
#include "bitmetric/sat.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline std::string random_bits(Rng& rng, std::size_t len) {
  std::string s(len, '0');
  for (auto& c : s)
    if (rng() & 1) c = '1';
  return s;
}

inline bitmetric::Prefix random_prefix(Rng& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  return bitmetric::Prefix(random_bits(rng, len(rng)));
}

inline bitmetric::Epb random_epb(Rng& rng, std::size_t max_head = 8, std::size_t max_period = 4) {
  std::uniform_int_distribution<std::size_t> head_len(0, max_head);
  std::uniform_int_distribution<std::size_t> period_len(1, max_period);
  return bitmetric::Epb(bitmetric::Prefix(random_bits(rng, head_len(rng))),
                        bitmetric::Prefix(random_bits(rng, period_len(rng))));
}

// Bit i (1-based) of head . period period ..., straight off the raw strings.
inline char raw_bit(const std::string& head, const std::string& period, std::uint64_t i) {
  if (i <= head.size()) return head[i - 1];
  return period[(i - head.size() - 1) % period.size()];
}

// Equality of the denoted sequences, decided by comparing bits up to
// |h1| + |h2| + lcm(|p1|, |p2|).
inline bool raw_equal(const std::string& h1, const std::string& p1,
                      const std::string& h2, const std::string& p2) {
  const std::uint64_t bound = h1.size() + h2.size() + std::lcm(p1.size(), p2.size());
  for (std::uint64_t i = 1; i <= bound; ++i)
    if (raw_bit(h1, p1, i) != raw_bit(h2, p2, i)) return false;
  return true;
}

// First disagreement position minus one, or -1 for equal sequences.
inline long long raw_lcp(const std::string& h1, const std::string& p1,
                         const std::string& h2, const std::string& p2) {
  const std::uint64_t bound = h1.size() + h2.size() + std::lcm(p1.size(), p2.size());
  for (std::uint64_t i = 1; i <= bound; ++i)
    if (raw_bit(h1, p1, i) != raw_bit(h2, p2, i)) return static_cast<long long>(i) - 1;
  return -1;
}

inline bitmetric::PrefixSet make_set(const std::vector<std::string>& members) {
  bitmetric::PrefixSet set;
  for (const auto& m : members) set.insert(bitmetric::Prefix::parse(m));
  return set;
}

// Exhaustive bar check: every length-L string must have some member among its
// truncations. Uses a plain sorted set of member strings, independent of the
// trie.
inline bool brute_force_is_bar(const std::vector<std::string>& members) {
  std::set<std::string> mem;
  std::size_t max_len = 0;
  for (const auto& m : members) {
    const std::string bits = (m == "e") ? std::string{} : m;
    mem.insert(bits);
    max_len = std::max(max_len, bits.size());
  }
  if (mem.empty()) return false;
  const std::uint64_t total = std::uint64_t{1} << max_len;
  std::string s(max_len, '0');
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < max_len; ++i)
      s[i] = (mask >> (max_len - 1 - i)) & 1 ? '1' : '0';
    bool covered = false;
    for (std::size_t j = 0; j <= max_len && !covered; ++j)
      covered = mem.count(s.substr(0, j)) > 0;
    if (!covered) return false;
  }
  return true;
}

// Exhaustive satisfiability check over all 2^L assignments.
inline bool enum_satisfiable(const bitmetric::CnfFormula& f) {
  const std::uint64_t total = std::uint64_t{1} << f.var_count;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bitmetric::Assignment a;
    a.bits.resize(f.var_count);
    for (int i = 0; i < f.var_count; ++i) a.bits[i] = (mask >> i) & 1;
    if (bitmetric::satisfies(f, a)) return true;
  }
  return false;
}

// Random maximal antichain that is a bar: every path gets marked between
// min_depth and max_depth.
inline void gen_antichain_bar(Rng& rng, const std::string& prefix, std::size_t min_depth,
                              std::size_t max_depth, double mark_prob,
                              std::vector<std::string>& out) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (prefix.size() == max_depth ||
      (prefix.size() >= min_depth && coin(rng) < mark_prob)) {
    out.push_back(prefix.empty() ? "e" : prefix);
    return;
  }
  gen_antichain_bar(rng, prefix + '0', min_depth, max_depth, mark_prob, out);
  gen_antichain_bar(rng, prefix + '1', min_depth, max_depth, mark_prob, out);
}

// Mixed corpus entry for the agreement suites: noisy antichain bars, sets of
// short prefixes (bars once both one-bit prefixes land), and sets of longer
// prefixes (almost never bars), with the empty prefix sprinkled in.
inline std::vector<std::string> random_prefix_set(Rng& rng, std::size_t max_len,
                                                  std::size_t max_size) {
  std::uniform_int_distribution<int> kind(0, 9);
  std::vector<std::string> members;
  const int k = kind(rng);
  if (k < 4) {
    std::uniform_int_distribution<std::size_t> depth(2, std::min<std::size_t>(8, max_len));
    do {
      members.clear();
      gen_antichain_bar(rng, "", 2, depth(rng), 0.45, members);
    } while (members.size() > max_size);
    std::uniform_int_distribution<std::size_t> extra(0, 10);
    for (std::size_t i = extra(rng); i > 0 && members.size() < max_size; --i)
      members.push_back(random_prefix(rng, 1, max_len).bits());
  } else {
    const std::size_t min_len = k < 7 ? 1 : 3;
    std::uniform_int_distribution<std::size_t> count(0, max_size);
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
      members.push_back(random_prefix(rng, min_len, max_len).bits());
    if (rng() % 50 == 0) members.push_back("e");
  }
  return members;
}

}  // namespace testutil
