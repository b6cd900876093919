#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qrank {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<signed long>(v)); }
inline BigInt big_u(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Floor division, rounding toward negative infinity (GMP's `/` truncates).
BigInt floor_div(const BigInt& a, const BigInt& b);

bool fits_i64(const BigInt& n);
std::int64_t to_i64(const BigInt& n);  // throws Error(OutOfRange)
std::uint64_t to_u64(const BigInt& n);  // throws Error(OutOfRange)

std::string to_string(const BigInt& n);

/// Parses a decimal integer, optional leading '-'. Throws Error(ParseError).
BigInt parse_bigint(const std::string& text);

inline int sign(const BigInt& n) { return sgn(n); }

}  // namespace qrank
