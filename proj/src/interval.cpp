#include "bitmetric/interval.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "bitmetric/bar.hpp"

namespace bitmetric {

OpenInterval::OpenInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw std::invalid_argument("OpenInterval: requires lo < hi");
}

Rational prefix_value(const Prefix& p) {
  Rational num(0);
  for (std::size_t i = 1; i <= p.length(); ++i) num = num + num + Rational(p.bit(i));
  return num * Rational::pow2(-static_cast<long>(p.length()));
}

Rational iota(const Epb& e) {
  const Rational head_part = prefix_value(e.head());
  const Rational tail = prefix_value(e.period()) /
                        (Rational(1) - Rational::pow2(-static_cast<long>(e.period().length())));
  return head_part + Rational::pow2(-static_cast<long>(e.head().length())) * tail;
}

Epb iota_inv(const Rational& x) {
  const Rational zero(0), one(1);
  if (x < zero || x > one)
    throw std::domain_error("iota_inv: '" + x.str() + "' outside [0,1]");
  if (x == one) return Epb(Prefix{}, Prefix("1"));  // the unique expansion of 1
  // Exact long division in base 2. A remainder determines the whole tail, so
  // the first repeated remainder marks the period start; the result is the
  // standard form (dyadic inputs terminate into the all-zero period).
  std::map<Rational, std::size_t> seen;
  std::string digits;
  Rational r = x;
  for (;;) {
    const auto [it, fresh] = seen.emplace(r, digits.size());
    if (!fresh) {
      const std::size_t start = it->second;
      return Epb(Prefix(digits.substr(0, start)), Prefix(digits.substr(start)));
    }
    r += r;
    if (r >= one) {
      digits.push_back('1');
      r -= one;
    } else {
      digits.push_back('0');
    }
  }
}

std::pair<Rational, Rational> cylinder_to_interval(const Cylinder& c) {
  const Rational lo = prefix_value(c.stem);
  return {lo, lo + Rational::pow2(-static_cast<long>(c.stem.length()))};
}

CoverResult heine_borel_subcover(const std::vector<OpenInterval>& intervals, std::size_t fuel) {
  if (intervals.empty())
    throw std::invalid_argument("heine_borel_subcover: empty interval list");
  // Strict containment of the closed cylinder image in an open interval keeps
  // success a rigorous certificate at dyadic endpoints, where two bitstrings
  // share one iota image.
  auto fits_some = [&intervals](const Rational& lo, const Rational& hi) {
    for (const OpenInterval& iv : intervals)
      if (iv.lo < lo && hi < iv.hi) return true;
    return false;
  };
  auto oracle = [&](const Prefix& s) {
    const auto [lo, hi] = cylinder_to_interval(Cylinder{s});
    return fits_some(lo, hi);
  };
  auto extraction = extract_finite_subbar(oracle, fuel);

  CoverResult result;
  if (extraction.fuel_exceeded()) {
    const auto [lo, hi] = cylinder_to_interval(Cylinder{extraction.unresolved});
    result.diagnostic =
        CoverDiagnostic{extraction.unresolved, (lo + hi) / Rational(2), fuel};
    return result;
  }
  std::set<std::size_t> used;
  for (const Prefix& s : extraction.bar->members()) {
    const auto [lo, hi] = cylinder_to_interval(Cylinder{s});
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (intervals[i].lo < lo && hi < intervals[i].hi) {
        used.insert(i);
        break;
      }
    }
  }
  result.indices = std::vector<std::size_t>(used.begin(), used.end());
  return result;
}

bool verify_cover(const std::vector<OpenInterval>& intervals) {
  const Rational zero(0), one(1);
  auto covered = [&intervals](const Rational& x) {
    for (const OpenInterval& iv : intervals)
      if (iv.contains(x)) return true;
    return false;
  };
  std::set<Rational> candidates{zero, one};
  for (const OpenInterval& iv : intervals) {
    if (zero <= iv.lo && iv.lo <= one) candidates.insert(iv.lo);
    if (zero <= iv.hi && iv.hi <= one) candidates.insert(iv.hi);
  }
  for (const Rational& x : candidates)
    if (!covered(x)) return false;
  return true;
}

}  // namespace bitmetric
