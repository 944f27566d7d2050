#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "anclab/errors.hpp"

namespace anclab {

/// Unsigned big integer with a fixed 16384-bit cap, enough for every power
/// the schemes compare: exponents stay below 4*64^2 = 16384, so 2^k and the
/// z-th powers tested against it always fit. Overflow throws.
using BigUint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    16384, 16384, boost::multiprecision::unsigned_magnitude,
    boost::multiprecision::checked, void>>;

/// Largest node count the schemes accept (keeps z = ceil(lg n) <= 62).
inline constexpr std::uint64_t kMaxNodeCount = std::uint64_t{1} << 62;

/// ceil(lg n) for n >= 1; defined as 0 for n = 1. Integer-exact.
constexpr unsigned ceil_lg(std::uint64_t n) {
  return n <= 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1));
}

/// max(ceil(lg n), 1): the clamped field width used by both schemes.
constexpr unsigned clamped_ceil_lg(std::uint64_t n) {
  return std::max(ceil_lg(n), 1u);
}

/// ceil(2 lg z) = ceil(lg z^2), exact for z in [1, 2^31].
constexpr unsigned ceil_2lg(std::uint64_t z) { return ceil_lg(z * z); }

/// ceil(lg lg n) for n >= 2: the smallest t with 2^(2^t) >= n.
constexpr unsigned ceil_lglg(std::uint64_t n) {
  unsigned t = 0;
  while (true) {
    const unsigned e = 1u << t;
    if (e >= 64 || (std::uint64_t{1} << e) >= n) return t;
    ++t;
  }
}

inline BigUint big_pow(const BigUint& base, unsigned exp) {
  return BigUint(boost::multiprecision::pow(base, exp));
}

inline BigUint big_pow(std::uint64_t base, unsigned exp) {
  return big_pow(BigUint(base), exp);
}

/// 2^k as a big integer; k <= 16383.
inline BigUint big_pow2(unsigned k) { return BigUint(1) << k; }

/// Number of bits in x (0 for x = 0).
inline unsigned big_bit_length(const BigUint& x) {
  return x == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
}

inline bool fits_uint64(const BigUint& x) {
  return x <= BigUint(UINT64_MAX);
}

}  // namespace anclab
