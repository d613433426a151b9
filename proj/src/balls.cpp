#include "bitmetric/balls.hpp"

#include <stdexcept>

#include "bitmetric/error.hpp"

namespace bitmetric {

Ball::Ball(Epb center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) throw std::invalid_argument("Ball: radius must be positive");
}

Ball Ball::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos)
    throw ParseError("bad ball '" + std::string(text) + "': expected CENTER@RADIUS");
  const Epb center = Epb::parse(text.substr(0, at));
  const Rational radius = Rational::parse(text.substr(at + 1));
  if (radius.sign() <= 0)
    throw ParseError("bad ball '" + std::string(text) + "': radius must be positive");
  return Ball(center, radius);
}

std::size_t stem_length_for_radius(const Rational& radius) {
  std::size_t m = 0;
  Rational t = radius;  // t = radius * 2^m
  const Rational one(1);
  while (t <= one) {
    t += t;
    ++m;
  }
  return m;
}

Cylinder ball_to_cylinder(const Ball& b) {
  const std::size_t m = stem_length_for_radius(b.radius());
  return Cylinder{b.center().first_bits(m)};
}

bool cylinder_contains(const Cylinder& c, const Epb& x) {
  for (std::size_t i = 1; i <= c.stem.length(); ++i) {
    if (x.bit_at(i) != c.stem.bit(i)) return false;
  }
  return true;
}

bool ball_contains(const Ball& b, const Epb& x) {
  return beta(b.center(), x) < b.radius();
}

BallRelation balls_relation(const Ball& b1, const Ball& b2) {
  const Prefix s1 = ball_to_cylinder(b1).stem;
  const Prefix s2 = ball_to_cylinder(b2).stem;
  if (s1 == s2) return BallRelation::equal;
  if (s2.is_prefix_of(s1)) return BallRelation::subset;    // longer stem, smaller cylinder
  if (s1.is_prefix_of(s2)) return BallRelation::superset;
  return BallRelation::disjoint;
}

}  // namespace bitmetric
