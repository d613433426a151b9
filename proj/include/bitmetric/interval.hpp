#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitmetric/balls.hpp"
#include "bitmetric/bitstring.hpp"
#include "bitmetric/rational.hpp"

namespace bitmetric {

/// Open interval (lo, hi) with rational endpoints; may extend beyond [0,1] so
/// that 0 and 1 can be interior to cover members.
struct OpenInterval {
  Rational lo;
  Rational hi;
  OpenInterval(Rational lo_, Rational hi_);  // throws unless lo < hi
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
};

/// Dyadic value of a finite bitstring: sum of bits_i * 2^-i.
Rational prefix_value(const Prefix& p);

/// The binary-expansion map into [0,1]:
/// iota(a_1 a_2 a_3 ...) = sum of a_i * 2^-i, evaluated exactly.
Rational iota(const Epb& e);

/// Standard-form expansion of x in [0,1) (infinitely many 0s, by exact long
/// division); x = 1 maps to the all-ones expansion "(1)". Rejects x outside
/// [0,1]. Always a right inverse: iota(iota_inv(x)) = x.
Epb iota_inv(const Rational& x);

/// iota image of a cylinder: the closed dyadic interval
/// [value(stem), value(stem) + 2^-|stem|].
std::pair<Rational, Rational> cylinder_to_interval(const Cylinder& c);

struct CoverDiagnostic {
  Prefix unresolved_stem;   // closed dyadic image fits in no single input interval
  Rational pinned_point;    // midpoint of that image
  std::size_t depth_reached = 0;
};

struct CoverResult {
  std::optional<std::vector<std::size_t>> indices;  // sorted, deduplicated
  CoverDiagnostic diagnostic;                       // valid when not covered
  bool covered() const { return indices.has_value(); }
};

/// Reduces an open-interval cover of [0,1] to a certified finite subcover.
/// A prefix qualifies when the closed image of its cylinder lies strictly
/// inside some input interval; the qualifying prefixes are extracted as a
/// finite sub-bar and mapped to lowest qualifying interval indices. Failure
/// at the fuel depth reports the unresolved stem and its midpoint; with a
/// genuine cover a large enough depth always succeeds, so a persistent
/// failure pins an uncovered point ever more tightly.
CoverResult heine_borel_subcover(const std::vector<OpenInterval>& intervals, std::size_t fuel);

/// Independent certificate checker: exact sweep deciding whether the
/// intervals cover all of [0,1]. The minimum of the uncovered set, if any, is
/// 0, 1 or an interval endpoint, so membership is tested at exactly those
/// candidate points.
bool verify_cover(const std::vector<OpenInterval>& intervals);

}  // namespace bitmetric
