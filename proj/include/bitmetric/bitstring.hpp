#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bitmetric/rational.hpp"

namespace bitmetric {

/// A finite bitstring. Doubles as a cylinder stem: the set of all infinite
/// extensions. The empty prefix denotes the whole space.
/// Text form: a string over {0,1}; the empty prefix renders as "e".
class Prefix {
 public:
  Prefix() = default;
  explicit Prefix(std::string_view bits);  // throws ParseError on a non-0/1 character

  /// Accepts "e" (empty) or a 0/1 string.
  static Prefix parse(std::string_view text);

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  /// 1-based bit access; returns 0 or 1.
  int bit(std::size_t i) const;

  Prefix extended(int bit) const;
  Prefix first(std::size_t n) const { return Prefix(std::string_view(bits_).substr(0, n)); }
  bool is_prefix_of(const Prefix& other) const;

  const std::string& bits() const { return bits_; }
  std::string str() const { return bits_.empty() ? "e" : bits_; }

  friend bool operator==(const Prefix&, const Prefix&) = default;
  friend auto operator<=>(const Prefix&, const Prefix&) = default;

 private:
  std::string bits_;  // chars '0'/'1'
};

/// Eventually periodic bitstring head·period^ω: the computable points of
/// Cantor space used throughout. Always held in canonical form (primitive
/// period, shortest head), so structural equality coincides with equality of
/// the denoted infinite sequences.
/// Text form: "HEAD(PERIOD)", e.g. "101(10)"; an empty head renders as "(01)".
class Epb {
 public:
  Epb(Prefix head, Prefix period);  // canonicalizes; throws on empty period

  static Epb parse(std::string_view text);

  const Prefix& head() const { return head_; }
  const Prefix& period() const { return period_; }

  /// 1-based bit of the denoted infinite sequence.
  int bit_at(std::uint64_t i) const;

  Prefix first_bits(std::size_t n) const;

  std::string str() const { return head_.bits() + "(" + period_.bits() + ")"; }

  friend bool operator==(const Epb&, const Epb&) = default;

 private:
  Prefix head_;
  Prefix period_;
};

/// Length of the longest common prefix of the denoted sequences; nullopt when
/// they are the same sequence (decided within |h1|+|h2|+lcm(|p1|,|p2|) bits).
/// Disagreement at the first bit gives 0.
std::optional<std::uint64_t> lcp_length(const Epb& a, const Epb& b);

/// The bit-metric: 2^(-lcp_length), and 0 for equal sequences.
Rational beta(const Epb& a, const Epb& b);

/// True iff the denoted sequence has infinitely many 0s, i.e. the canonical
/// period contains a 0.
bool is_standard_form(const Epb& e);

}  // namespace bitmetric
