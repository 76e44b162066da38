#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cosets {

/// Arbitrary-precision integer used for group orders and all exact arithmetic.
using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const ExactRational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace cosets
