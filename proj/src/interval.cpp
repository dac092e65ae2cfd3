#include "faf/interval.hpp"

#include <algorithm>
#include <array>

#include "faf/errors.hpp"

namespace faf {

IntervalReal::IntervalReal(const BigRational& lo, const BigRational& hi, unsigned precision)
    : precision_(precision) {
    if (lo > hi) throw DomainError("interval with lo > hi: [" + faf::to_string(lo) + ", " + faf::to_string(hi) + "]");
    // One guard bit: the two roundings together add at most 2^-precision * max(1, |x|).
    lo_ = round_down(lo, precision + 1);
    hi_ = round_up(hi, precision + 1);
}

BigRational IntervalReal::magnitude_lower() const {
    if (contains_zero()) return 0;
    return lo_ > 0 ? lo_ : BigRational(-hi_);
}

BigRational IntervalReal::magnitude_upper() const {
    BigRational a = abs(lo_);
    BigRational b = abs(hi_);
    return a > b ? a : b;
}

IntervalReal IntervalReal::operator-() const {
    return IntervalReal(BigRational(-hi_), BigRational(-lo_), precision_);
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal(a.lo_ + b.lo_, a.hi_ + b.hi_, std::max(a.precision_, b.precision_));
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal(a.lo_ - b.hi_, a.hi_ - b.lo_, std::max(a.precision_, b.precision_));
}

void exact_interval_mul(const BigRational& alo, const BigRational& ahi, const BigRational& blo,
                        const BigRational& bhi, BigRational& lo, BigRational& hi) {
    std::array<BigRational, 4> p = {alo * blo, alo * bhi, ahi * blo, ahi * bhi};
    lo = *std::min_element(p.begin(), p.end());
    hi = *std::max_element(p.begin(), p.end());
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    BigRational lo, hi;
    exact_interval_mul(a.lo_, a.hi_, b.lo_, b.hi_, lo, hi);
    return IntervalReal(lo, hi, std::max(a.precision_, b.precision_));
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
    if (b.contains_zero()) throw Indeterminate("interval division by an interval containing zero");
    BigRational rlo = 1 / b.hi_;
    BigRational rhi = 1 / b.lo_;
    BigRational lo, hi;
    exact_interval_mul(a.lo_, a.hi_, rlo, rhi, lo, hi);
    return IntervalReal(lo, hi, std::max(a.precision_, b.precision_));
}

std::string IntervalReal::to_string() const {
    return "[" + faf::to_string(lo_) + ", " + faf::to_string(hi_) + "]";
}

}  // namespace faf
