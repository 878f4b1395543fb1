#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace orichain {

// Exact arithmetic used by all geometric and algebraic kernels.  Chain
// coefficients stay in machine integers; barycentric coordinates and
// region witnesses are arbitrary-precision rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace orichain
