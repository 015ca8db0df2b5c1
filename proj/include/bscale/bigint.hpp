#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bscale {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(big_abs(a), big_abs(b));
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return big_abs(a) / big_gcd(a, b) * big_abs(b);
}

inline BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Floor division: returns (q, r) with x = q*d + r and 0 <= r < |d|.
inline std::pair<BigInt, BigInt> floor_divmod(const BigInt& x, const BigInt& d) {
  BigInt ad = big_abs(d);
  BigInt r = x % ad;
  if (r < 0) r += ad;
  BigInt q = (x - r) / d;
  return {q, r};
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace bscale
