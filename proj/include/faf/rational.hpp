#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace faf {

using BigInt = mpz_class;
using BigRational = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0

BigInt parse_integer(std::string_view text);

/// Accepts "p", "p/q" and plain decimals such as "-1.25".
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

BigInt floor(const BigRational& value);
BigInt ceil(const BigRational& value);

inline int sign(const BigRational& value) { return sgn(value); }
inline int sign(const BigInt& value) { return sgn(value); }

BigRational abs(const BigRational& value);

/// 2^exponent as an exact rational (negative exponents allowed).
BigRational pow2(long exponent);

/// floor(log2 |q|) up to one: returns k with 2^k <= |q| * 2 (q != 0).
long log2_lower(const BigRational& value);

/// Outward rounding to a dyadic grid. The grid step is 2^(max(k,0) - bits)
/// where k ~ floor(log2 |q|); so the error is at most 2^-bits * max(1, |q|).
BigRational round_down(const BigRational& value, unsigned bits);
BigRational round_up(const BigRational& value, unsigned bits);

bool fits_int64(const BigInt& value);

}  // namespace faf
