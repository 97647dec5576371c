#include "solidtorus/slope.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>

namespace solidtorus {

Slope::Slope(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
  if (boost::multiprecision::gcd(abs(x_), abs(y_)) != 1)
    throw SlopeError("slope (" + x_.str() + "," + y_.str() + ") is not primitive");
  if (x_ < 0 || (x_ == 0 && y_ < 0)) {
    x_ = -x_;
    y_ = -y_;
  }
}

Slope primitive_slope(Integer x, Integer y) {
  Integer g = boost::multiprecision::gcd(abs(x), abs(y));
  if (g == 0) throw SlopeError("zero vector has no slope");
  return Slope(x / g, y / g);
}

std::string Slope::str() const { return "(" + x_.str() + "," + y_.str() + ")"; }

Integer intersection(const Slope& a, const Slope& b) { return abs(a.x() * b.y() - a.y() * b.x()); }

Slope slope_seq(long i) {
  if (i < 0) throw std::invalid_argument("slope_seq index must be non-negative");
  Integer x0 = 1, y0 = 0, x1 = 1, y1 = 1;
  for (long k = 0; k < i; ++k) {
    Integer x2 = x0 + x1, y2 = y0 + y1;
    x0 = std::move(x1);
    y0 = std::move(y1);
    x1 = std::move(x2);
    y1 = std::move(y2);
  }
  return Slope(x0, y0);
}

bool binet_check(long i) {
  using Float = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>>;
  Integer recursion = slope_seq(i).y();
  Float root5 = boost::multiprecision::sqrt(Float(5));
  Float phi = (1 + root5) / 2;
  Float psi = (1 - root5) / 2;
  Float closed = (boost::multiprecision::pow(phi, i) - boost::multiprecision::pow(psi, i)) / root5;
  Float rounded = boost::multiprecision::round(closed);
  return rounded == Float(recursion);
}

SlopeTriple::SlopeTriple(Slope a, Slope b, Slope c) : slopes_{std::move(a), std::move(b), std::move(c)} {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (intersection(slopes_[i], slopes_[j]) != 1)
        throw SlopeError("slopes " + slopes_[i].str() + " and " + slopes_[j].str() +
                         " do not meet exactly once");
}

bool SlopeTriple::contains(const Slope& s) const {
  return std::find(slopes_.begin(), slopes_.end(), s) != slopes_.end();
}

std::array<Slope, 3> SlopeTriple::sorted() const {
  auto out = slopes_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string SlopeTriple::str() const {
  auto s = sorted();
  return "{" + s[0].str() + "," + s[1].str() + "," + s[2].str() + "}";
}

Slope flipped_slope(const SlopeTriple& t, const Slope& removed) {
  const auto& s = t.slopes();
  int idx = -1;
  for (int i = 0; i < 3; ++i)
    if (s[i] == removed) idx = i;
  if (idx < 0) throw SlopeError("slope " + removed.str() + " is not in triple " + t.str());
  const Slope& p = s[(idx + 1) % 3];
  const Slope& q = s[(idx + 2) % 3];
  // the removed slope is +-(p + q) or +-(p - q); the new diagonal is the other one
  Integer sx = p.x() + q.x(), sy = p.y() + q.y();
  Integer dx = p.x() - q.x(), dy = p.y() - q.y();
  bool removed_is_sum = (sx == removed.x() && sy == removed.y()) || (sx == -removed.x() && sy == -removed.y());
  return removed_is_sum ? Slope(dx, dy) : Slope(sx, sy);
}

SlopeTriple elementary_move(const SlopeTriple& t, const Slope& removed) {
  Slope inserted = flipped_slope(t, removed);
  std::array<Slope, 3> out = t.slopes();
  for (auto& s : out)
    if (s == removed) s = inserted;
  return SlopeTriple(out[0], out[1], out[2]);
}

std::array<Integer, 2> dual_vector(const Integer& p, const Integer& q) {
  // extended Euclid on (q, p): q*s + p*t = 1, then a = s, b = -t
  Integer old_r = q, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer quo = old_r / r;
    Integer tmp = old_r - quo * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quo * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quo * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_s, -old_t};
}

}  // namespace solidtorus
