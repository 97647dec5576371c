#include "solidtorus/numeric.hpp"

#include <stdexcept>

namespace solidtorus {

std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

Integer fibonacci(long k) {
  if (k < 0) {
    Integer f = fibonacci(-k);
    return ((-k) % 2 == 0) ? Integer(-f) : f;
  }
  Integer a = 0, b = 1;
  for (long i = 0; i < k; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

namespace {

// sign of (x - b*sqrt5) for rational x, integer b
int sign_minus_sqrt5(const Rational& x, const Integer& b) {
  // compare x with b*sqrt(5)
  if (b == 0) return x > 0 ? 1 : (x < 0 ? -1 : 0);
  if (b > 0) {
    if (x <= 0) return -1;
    Rational lhs = x * x;
    Rational rhs = Rational(5 * b * b);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  }
  // b < 0: rhs negative
  if (x >= 0) return 1;
  Rational lhs = x * x;
  Rational rhs = Rational(5 * b * b);
  // x < 0, b*sqrt5 < 0: x >= b sqrt5 iff |x| <= |b| sqrt5
  return lhs < rhs ? 1 : (lhs > rhs ? -1 : 0);
}

}  // namespace

bool at_least_phi_power(const Rational& n, long k) {
  // phi^k = a + b*phi, a = F(k-1), b = F(k); phi = (1 + sqrt5)/2
  Integer a = fibonacci(k - 1);
  Integer b = fibonacci(k);
  // n >= a + b/2 + (b/2) sqrt5  <=>  2(n - a) - b >= b sqrt5
  Rational x = 2 * (n - Rational(a)) - Rational(b);
  return sign_minus_sqrt5(x, b) >= 0;
}

Integer ceil_phi_power(long k) {
  Integer a = fibonacci(k - 1);
  Integer b = fibonacci(k);
  Integer root = boost::multiprecision::sqrt(Integer(5 * b * b));
  if (b < 0) root = -root - 1;
  Integer guess = (2 * a + b + root) / 2 - 1;
  if (guess < 0) guess = 0;
  while (!at_least_phi_power(Rational(guess), k)) ++guess;
  while (guess > 0 && at_least_phi_power(Rational(guess - 1), k)) --guess;
  return guess;
}

}  // namespace solidtorus
