#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace solidtorus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

Rational parse_rational(const std::string& text);

/// Compares n against phi^k exactly, phi the golden ratio. k may be negative.
/// Uses phi^k = F(k-1) + F(k) phi with the negafibonacci extension.
bool at_least_phi_power(const Rational& n, long k);

/// Fibonacci numbers F(0)=0, F(1)=1, extended to negative indices.
Integer fibonacci(long k);

/// Smallest integer n with n >= phi^k.
Integer ceil_phi_power(long k);

}  // namespace solidtorus
