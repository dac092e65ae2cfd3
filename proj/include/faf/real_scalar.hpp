#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "faf/interval.hpp"
#include "faf/number_field.hpp"
#include "faf/rational.hpp"

namespace faf {

/// A real number carried exactly (rational or number-field element with a
/// fixed real embedding) or approximately (certified interval).
///
/// Mixed arithmetic promotes rational -> number field -> interval. Elements of
/// two different fields never combine (IncompatibleFields).
class RealScalar {
public:
    enum class Kind { rational, algebraic, interval };

    RealScalar() : value_(BigRational(0)) {}
    RealScalar(BigRational q) : value_(std::move(q)) {}
    RealScalar(const BigInt& z) : value_(BigRational(z)) {}
    RealScalar(long z) : value_(BigRational(z)) {}
    RealScalar(int z) : value_(BigRational(z)) {}
    RealScalar(NumberFieldElement x) : value_(std::move(x)) {}
    RealScalar(IntervalReal x) : value_(std::move(x)) {}

    Kind kind() const { return static_cast<Kind>(value_.index()); }
    bool is_exact() const { return kind() != Kind::interval; }

    const BigRational* as_rational() const { return std::get_if<BigRational>(&value_); }
    const NumberFieldElement* as_algebraic() const { return std::get_if<NumberFieldElement>(&value_); }
    const IntervalReal* as_interval() const { return std::get_if<IntervalReal>(&value_); }

    /// Exact zero test; an interval is zero only if it is the point 0.
    bool is_exact_zero() const;

    RealScalar operator-() const;
    friend RealScalar operator+(const RealScalar& a, const RealScalar& b);
    friend RealScalar operator-(const RealScalar& a, const RealScalar& b);
    friend RealScalar operator*(const RealScalar& a, const RealScalar& b);
    /// Pole on exact division by zero, Indeterminate for an interval divisor holding 0.
    friend RealScalar operator/(const RealScalar& a, const RealScalar& b);

    std::string to_string() const;

private:
    std::variant<BigRational, NumberFieldElement, IntervalReal> value_;
};

/// Interval containing x with width <= 2^(1-precision) * max(1, |x|). precision >= 8.
IntervalReal to_interval(const RealScalar& x, unsigned precision);

/// Certified floor. Indeterminate for an interval straddling an integer.
BigInt floor_exact(const RealScalar& x);

/// Exact ordering for exact operands; intervals compare only when disjoint
/// (or equal points). Throws Indeterminate otherwise.
std::strong_ordering compare(const RealScalar& x, const RealScalar& y);

int sign(const RealScalar& x);

/// Exact equality of two exact scalars (DomainError for intervals).
bool exactly_equal(const RealScalar& x, const RealScalar& y);

/// Brings every exact entry into one common field when any entry is
/// algebraic; rationals stay rational otherwise. Intervals are left alone.
std::vector<RealScalar> unify_fields(const std::vector<RealScalar>& xs);

}  // namespace faf
