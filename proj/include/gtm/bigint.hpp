#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gtm {

// Expression templates off: values behave like plain value types in
// conditionals, auto and member calls.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Canonical reduced fraction with positive denominator; ordering and equality
// follow the rational value.
using ExactRational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt numerator(const ExactRational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const ExactRational& r) {
  return boost::multiprecision::denominator(r);
}

}  // namespace gtm
