#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "faf/rational.hpp"

namespace faf {

/// Dense coefficient vectors, lowest degree first: c0 + c1 x + ... + cd x^d.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<BigRational>;

/// Degree of a polynomial after dropping zero leading terms; -1 for the zero polynomial.
int degree(const IntPoly& p);
int degree(const RatPoly& p);

BigRational evaluate(const IntPoly& p, const BigRational& x);
int sign_at(const IntPoly& p, const BigRational& x);

RatPoly to_rational(const IntPoly& p);
RatPoly derivative(const RatPoly& p);
/// Remainder of a divided by b (b nonzero).
RatPoly remainder(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);

bool is_squarefree(const IntPoly& p);

/// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const IntPoly& p);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const std::vector<RatPoly>& chain, const BigRational& lo, const BigRational& hi);

enum class Irreducibility { verified, reducible, unverified };

/// Decides irreducibility over Q of a monic squarefree integer polynomial of
/// degree <= 6 by testing every candidate monic factor of degree <= d/2 for
/// exact divisibility. Candidates come from numerically computed complex
/// roots. Degree > 6 returns `unverified`.
Irreducibility check_irreducible(const IntPoly& p);

/// Exact division of p by a monic q; true when q divides p over Z.
bool divides_exactly(const IntPoly& q, const IntPoly& p);

/// Parses "x^3-2", "x^2 - x - 1", "x^4-10*x^2+1"; variable name is x.
IntPoly parse_polynomial(std::string_view text);
std::string format_polynomial(const IntPoly& p);

}  // namespace faf
