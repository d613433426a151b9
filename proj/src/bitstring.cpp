#include "bitmetric/bitstring.hpp"

#include <numeric>
#include <stdexcept>

#include "bitmetric/error.hpp"

namespace bitmetric {

namespace {

// Shortest word w with p = w^k.
std::string primitive_root(const std::string& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (p[i] == p[i % d]);
    if (ok) return p.substr(0, d);
  }
  return p;
}

}  // namespace

Prefix::Prefix(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1')
      throw ParseError("bad prefix '" + std::string(bits) + "': invalid bit '" + std::string(1, c) + "'");
  }
}

Prefix Prefix::parse(std::string_view text) {
  if (text == "e") return Prefix{};
  return Prefix(text);
}

int Prefix::bit(std::size_t i) const {
  if (i < 1 || i > bits_.size()) throw std::out_of_range("Prefix::bit: index out of range");
  return bits_[i - 1] - '0';
}

Prefix Prefix::extended(int bit) const {
  Prefix p(*this);
  p.bits_.push_back(bit ? '1' : '0');
  return p;
}

bool Prefix::is_prefix_of(const Prefix& other) const {
  return other.bits_.starts_with(bits_);
}

Epb::Epb(Prefix head, Prefix period) {
  if (period.empty()) throw std::invalid_argument("Epb: empty period");
  std::string h = head.bits();
  std::string p = primitive_root(period.bits());
  // Absorb head bits that merely repeat the periodic tail one step early;
  // each absorption rotates the period right to keep the denoted sequence.
  while (!h.empty() && h.back() == p.back()) {
    h.pop_back();
    p = p.back() + p.substr(0, p.size() - 1);
  }
  head_ = Prefix(h);
  period_ = Prefix(p);
}

Epb Epb::parse(std::string_view text) {
  const std::string token(text);
  const auto open = text.find('(');
  if (text.empty() || open == std::string_view::npos || text.back() != ')')
    throw ParseError("bad bitstring '" + token + "': expected HEAD(PERIOD)");
  const auto head_part = text.substr(0, open);
  const auto period_part = text.substr(open + 1, text.size() - open - 2);
  if (period_part.empty())
    throw ParseError("bad bitstring '" + token + "': empty period");
  try {
    return Epb(Prefix(head_part), Prefix(period_part));
  } catch (const ParseError&) {
    throw ParseError("bad bitstring '" + token + "'");
  }
}

int Epb::bit_at(std::uint64_t i) const {
  if (i < 1) throw std::out_of_range("Epb::bit_at: index must be >= 1");
  if (i <= head_.length()) return head_.bit(i);
  const std::uint64_t j = (i - head_.length() - 1) % period_.length();
  return period_.bit(j + 1);
}

Prefix Epb::first_bits(std::size_t n) const {
  std::string bits;
  bits.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) bits.push_back(bit_at(i) ? '1' : '0');
  return Prefix(bits);
}

std::optional<std::uint64_t> lcp_length(const Epb& a, const Epb& b) {
  // Two eventually periodic sequences agreeing on |h_a|+|h_b|+lcm(|p_a|,|p_b|)
  // bits agree everywhere: past both heads they share a full lcm window.
  const std::uint64_t bound = a.head().length() + b.head().length() +
                              std::lcm<std::uint64_t>(a.period().length(), b.period().length());
  for (std::uint64_t i = 1; i <= bound; ++i) {
    if (a.bit_at(i) != b.bit_at(i)) return i - 1;
  }
  return std::nullopt;
}

Rational beta(const Epb& a, const Epb& b) {
  const auto k = lcp_length(a, b);
  if (!k) return Rational(0);
  return Rational::pow2(-static_cast<long>(*k));
}

bool is_standard_form(const Epb& e) {
  return e.period().bits().find('0') != std::string::npos;
}

}  // namespace bitmetric
