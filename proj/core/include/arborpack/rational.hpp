#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace arborpack {

// Exact rational arithmetic. Comparisons throughout the library are done on
// these values; floating point never enters any decision.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" with q > 0, always including the denominator ("2/1", "-3/2")
inline std::string rational_to_string(const Rational& r) {
  return rational_num(r).str() + "/" + rational_den(r).str();
}

}  // namespace arborpack
