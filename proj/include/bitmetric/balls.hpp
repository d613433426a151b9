#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "bitmetric/bitstring.hpp"
#include "bitmetric/rational.hpp"

namespace bitmetric {

/// Open ball {b : beta(center, b) < radius} under the bit-metric.
/// Text form: "CENTER@RADIUS", e.g. "0110(0)@1/4".
class Ball {
 public:
  Ball(Epb center, Rational radius);  // throws unless radius > 0

  static Ball parse(std::string_view text);

  const Epb& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  std::string str() const { return center_.str() + "@" + radius_.str(); }

 private:
  Epb center_;
  Rational radius_;
};

/// Cylinder set: all infinite bitstrings extending the stem. The empty stem
/// denotes the whole space. Rendered as its stem.
struct Cylinder {
  Prefix stem;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

enum class BallRelation { disjoint, subset, superset, equal };

/// Stem length prescribed for an open ball of the given radius:
/// max(0, floor(log2(radius^-1)) + 1), i.e. the least m with 2^-m < radius,
/// computed by exact doubling comparisons.
std::size_t stem_length_for_radius(const Rational& radius);

/// The cylinder with the same members as the ball.
Cylinder ball_to_cylinder(const Ball& b);

bool cylinder_contains(const Cylinder& c, const Epb& x);

bool ball_contains(const Ball& b, const Epb& x);

/// Relation of the two balls, computed on their cylinder images. There is no
/// partial-overlap outcome: incomparable stems mean disjoint balls.
BallRelation balls_relation(const Ball& b1, const Ball& b2);

}  // namespace bitmetric
