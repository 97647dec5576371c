#pragma once

#include "solidtorus/numeric.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace solidtorus {

/// Primitive class on the boundary torus in the (longitude, meridian) basis, oriented so
/// its intersection with the meridian is non-negative: x >= 0, and y = 1 when x = 0.
class Slope {
 public:
  Slope() : x_(1), y_(0) {}
  /// Normalizes sign; throws std::invalid_argument unless gcd(|x|,|y|) = 1.
  Slope(Integer x, Integer y);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.x_ != b.x_ ? a.x_ < b.x_ : a.y_ < b.y_;
  }

 private:
  Integer x_;
  Integer y_;
};

/// Normalizes a nonzero integer vector to a slope, dividing by its gcd.
Slope primitive_slope(Integer x, Integer y);

/// |a.x b.y - a.y b.x|
Integer intersection(const Slope& a, const Slope& b);

/// s_0 = (1,0), s_1 = (1,1), s_{i+2} = s_i + s_{i+1}.
Slope slope_seq(long i);

/// Recursion value of y_i compared against the rounded closed form
/// (phi^i - psi^i)/sqrt5, evaluated with high-precision floating point.
bool binet_check(long i);

/// Three boundary edge slopes of a one-vertex torus triangulation.
class SlopeTriple {
 public:
  /// Throws std::invalid_argument if pairwise intersections are not all 1.
  SlopeTriple(Slope a, Slope b, Slope c);

  const std::array<Slope, 3>& slopes() const { return slopes_; }
  bool contains(const Slope& s) const;
  /// Sorted copy, for set comparison.
  std::array<Slope, 3> sorted() const;
  std::string str() const;

  friend bool operator==(const SlopeTriple& a, const SlopeTriple& b) { return a.sorted() == b.sorted(); }

 private:
  std::array<Slope, 3> slopes_;
};

class SlopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flip of the one-vertex torus triangulation: `removed` is replaced by the other
/// diagonal of the square formed by the two triangles, i.e. the sum of the two
/// remaining slopes with the sign that is not the removed one.
SlopeTriple elementary_move(const SlopeTriple& t, const Slope& removed);

/// The slope that elementary_move would insert.
Slope flipped_slope(const SlopeTriple& t, const Slope& removed);

/// Some (a,b) with a*q - b*p = 1, for primitive (p,q).
std::array<Integer, 2> dual_vector(const Integer& p, const Integer& q);

}  // namespace solidtorus
