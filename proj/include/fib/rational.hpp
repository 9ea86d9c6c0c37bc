#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fib {

// Exact scalars. cpp_rational keeps gcd-reduced numerator/denominator with a
// positive denominator, which is exactly the Rational invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Integer int_abs(const Integer& a) { return boost::multiprecision::abs(a); }

inline std::string to_string(const Integer& a) { return a.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace fib
