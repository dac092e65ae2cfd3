#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "faf/interval.hpp"
#include "faf/polynomial.hpp"
#include "faf/rational.hpp"

namespace faf {

/// Q[x]/(p) together with a chosen real root alpha of p, fixed by an
/// isolating interval that contains exactly one real root.
class RealNumberField {
public:
    /// Throws DomainError for a non-monic or non-squarefree polynomial, or one
    /// found reducible; RootIsolationError unless [lo, hi] isolates exactly one root.
    static std::shared_ptr<const RealNumberField> create(IntPoly min_poly, const BigRational& lo,
                                                        const BigRational& hi);

    /// Q itself (min_poly x, alpha = 0).
    static std::shared_ptr<const RealNumberField> rationals();

    std::size_t degree() const { return static_cast<std::size_t>(faf::degree(min_poly_)); }
    const IntPoly& min_poly() const { return min_poly_; }
    /// The interval supplied at construction.
    std::pair<BigRational, BigRational> embedding() const { return {given_lo_, given_hi_}; }
    /// False when the degree is too high for the irreducibility check.
    bool irreducibility_verified() const { return irreducibility_verified_; }

    /// Closed rational interval around alpha of width <= 2^-bits.
    std::pair<BigRational, BigRational> enclose_generator(unsigned bits) const;

    /// Same polynomial and the two embedding intervals pick the same root.
    bool same_as(const RealNumberField& other) const;

    std::string describe() const;

private:
    RealNumberField() = default;

    IntPoly min_poly_;
    BigRational given_lo_, given_hi_;
    BigRational lo_, hi_;  // refined at construction
    unsigned cached_bits_ = 0;
    bool irreducibility_verified_ = false;
};

using FieldPtr = std::shared_ptr<const RealNumberField>;

/// Element sum c_i alpha^i of a real number field.
class NumberFieldElement {
public:
    NumberFieldElement(FieldPtr field, std::vector<BigRational> coords);

    static NumberFieldElement generator(FieldPtr field);
    static NumberFieldElement constant(FieldPtr field, const BigRational& value);

    const FieldPtr& field() const { return field_; }
    const std::vector<BigRational>& coords() const { return coords_; }

    bool is_zero() const;
    /// True when the element lies in Q (all coordinates above degree 0 vanish).
    bool is_rational() const;
    BigRational rational_value() const;

    bool compatible(const NumberFieldElement& other) const;

    NumberFieldElement operator-() const;
    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
    /// Throws Pole for division by zero.
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b);
    NumberFieldElement inverse() const;

    /// Exact coordinate equality (the fields must be compatible).
    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

    /// Exact rational interval containing the value; alpha refined to 2^-bits.
    std::pair<BigRational, BigRational> enclose(unsigned bits) const;

    /// -1, 0 or +1, certified.
    int sign() const;
    /// Certified floor.
    BigInt floor() const;

    /// Enclosure of width <= 2^(1-precision) * max(1, |x|).
    IntervalReal to_interval(unsigned precision) const;

private:
    FieldPtr field_;
    std::vector<BigRational> coords_;
};

/// Refinement ceiling for certified sign/floor; beyond it Indeterminate is raised.
inline constexpr unsigned kMaxRefinementBits = 1u << 16;

}  // namespace faf
