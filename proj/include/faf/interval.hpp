#pragma once

#include <string>

#include "faf/rational.hpp"

namespace faf {

/// Closed interval [lo, hi] with dyadic endpoints. Every arithmetic result
/// encloses the exact result (outward rounding at the working precision).
class IntervalReal {
public:
    /// Rounds lo down and hi up to `precision` bits. Throws DomainError if lo > hi.
    IntervalReal(const BigRational& lo, const BigRational& hi, unsigned precision);

    static IntervalReal point(const BigRational& value, unsigned precision) {
        return IntervalReal(value, value, precision);
    }

    const BigRational& lo() const { return lo_; }
    const BigRational& hi() const { return hi_; }
    unsigned precision() const { return precision_; }

    BigRational width() const { return hi_ - lo_; }
    BigRational midpoint() const { return (lo_ + hi_) / 2; }
    /// Smallest absolute value over the interval (0 if it straddles zero).
    BigRational magnitude_lower() const;
    /// Largest absolute value over the interval.
    BigRational magnitude_upper() const;

    bool contains(const BigRational& value) const { return lo_ <= value && value <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool is_point() const { return lo_ == hi_; }

    IntervalReal operator-() const;
    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    /// Throws Indeterminate when the divisor contains zero.
    friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);

    /// Same endpoints, and same precision.
    friend bool operator==(const IntervalReal& a, const IntervalReal& b) = default;

    std::string to_string() const;

private:
    BigRational lo_;
    BigRational hi_;
    unsigned precision_;
};

/// Exact product of two closed rational intervals, without rounding.
void exact_interval_mul(const BigRational& alo, const BigRational& ahi, const BigRational& blo,
                        const BigRational& bhi, BigRational& lo, BigRational& hi);

}  // namespace faf
