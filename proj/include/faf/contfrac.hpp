#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "faf/rational.hpp"
#include "faf/real_scalar.hpp"

namespace faf {

/// Eventual periodicity detected from a repeated exact remainder:
/// digits[preperiod + k] == digits[preperiod + k + length] for all k.
struct Periodicity {
    std::size_t preperiod = 0;
    std::size_t length = 0;
    friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Regular continued fraction [b1; b2, b3, ...]. b1 is any integer, later
/// digits are >= 1, and a finite expansion of length >= 2 ends in a digit >= 2.
struct CFExpansion {
    std::vector<BigInt> digits;
    bool finite = false;
    std::optional<Periodicity> period;

    std::size_t depth() const { return digits.size(); }

    /// Builds a finite expansion from arbitrary valid digits, rewriting a
    /// trailing [..., b, 1] into [..., b + 1]. Throws DomainError on a
    /// nonpositive digit past the first.
    static CFExpansion finite_from_digits(std::vector<BigInt> digits);
};

struct Mat2Z {
    BigInt a = 1, b = 0, c = 0, d = 1;

    static Mat2Z identity() { return {}; }
    BigInt determinant() const { return a * d - b * c; }
    friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

struct EuclidResult {
    CFExpansion expansion;
    BigInt gcd;
};

/// Euclidean algorithm on a1 >= a2 >= 1: digits of a1/a2 and GCD(a1, a2).
EuclidResult euclid_cf(const BigInt& a1, const BigInt& a2);

/// Up to `depth` digits of x. Rational input stops when the expansion ends;
/// exact algebraic input records periodicity once a remainder repeats.
/// Interval input propagates Indeterminate once a floor is undecidable.
CFExpansion cf_expand(const RealScalar& x, std::size_t depth);

struct CFProduct {
    Mat2Z matrix;                           ///< prod_{i<=k} (0 1; 1 b_i)
    std::pair<BigInt, BigInt> image;        ///< matrix * (0, 1)^T
    std::optional<BigRational> convergent;  ///< image.second / image.first; absent for k = 0
};

CFProduct cf_matrix_product(const CFExpansion& e, std::size_t k);

/// (a x + b) / (c x + d) for a matrix of determinant +-1. Throws Pole when cx + d = 0.
RealScalar mobius_apply(const Mat2Z& m, const RealScalar& x);

struct TailReport {
    bool equivalent = false;
    /// True when both expansions are eventually periodic and their repeating
    /// cycles confirm the verdict; otherwise the verdict holds only up to depth.
    bool proven = false;
    std::optional<std::pair<std::size_t, std::size_t>> offsets;  ///< tails x[i..], y[j..] agree
    std::size_t depth = 0;
};

/// Searches offsets i, j <= max_offset (by increasing i + j, then i) such that
/// x[i + t] == y[j + t] for every compared t. Throws InsufficientDepth when
/// either expansion has fewer than max_offset + 3 digits.
TailReport cf_tail_equivalent(const CFExpansion& x, const CFExpansion& y, std::size_t max_offset);
TailReport cf_tail_equivalent(const RealScalar& x, const RealScalar& y, std::size_t depth, std::size_t max_offset);

}  // namespace faf
