#include "faf/real_scalar.hpp"

#include <algorithm>

#include "faf/errors.hpp"

namespace faf {

namespace {

unsigned interval_precision(const RealScalar& a, const RealScalar& b) {
    unsigned p = 0;
    if (auto i = a.as_interval()) p = std::max(p, i->precision());
    if (auto i = b.as_interval()) p = std::max(p, i->precision());
    return p;
}

template <class Op>
RealScalar combine(const RealScalar& a, const RealScalar& b, Op op) {
    if (!a.is_exact() || !b.is_exact()) {
        const unsigned prec = interval_precision(a, b);
        return RealScalar(op(to_interval(a, prec), to_interval(b, prec)));
    }
    const BigRational* qa = a.as_rational();
    const BigRational* qb = b.as_rational();
    if (qa && qb) return RealScalar(BigRational(op(*qa, *qb)));
    if (qa) {
        const NumberFieldElement& xb = *b.as_algebraic();
        return RealScalar(op(NumberFieldElement::constant(xb.field(), *qa), xb));
    }
    if (qb) {
        const NumberFieldElement& xa = *a.as_algebraic();
        return RealScalar(op(xa, NumberFieldElement::constant(xa.field(), *qb)));
    }
    return RealScalar(op(*a.as_algebraic(), *b.as_algebraic()));
}

}  // namespace

bool RealScalar::is_exact_zero() const {
    if (auto q = as_rational()) return *q == 0;
    if (auto x = as_algebraic()) return x->is_zero();
    const IntervalReal& i = *as_interval();
    return i.lo() == 0 && i.hi() == 0;
}

RealScalar RealScalar::operator-() const {
    if (auto q = as_rational()) return RealScalar(BigRational(-*q));
    if (auto x = as_algebraic()) return RealScalar(-*x);
    return RealScalar(-*as_interval());
}

RealScalar operator+(const RealScalar& a, const RealScalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

RealScalar operator-(const RealScalar& a, const RealScalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

RealScalar operator*(const RealScalar& a, const RealScalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

RealScalar operator/(const RealScalar& a, const RealScalar& b) {
    if (b.is_exact() && b.is_exact_zero()) throw Pole("division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

std::string RealScalar::to_string() const {
    if (auto q = as_rational()) return faf::to_string(*q);
    if (auto i = as_interval()) return i->to_string();
    const NumberFieldElement& x = *as_algebraic();
    std::string out = "alg(" + format_polynomial(x.field()->min_poly()) + ";" +
                      faf::to_string(x.field()->embedding().first) + "," +
                      faf::to_string(x.field()->embedding().second) + ";";
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (i) out += ",";
        out += faf::to_string(x.coords()[i]);
    }
    return out + ")";
}

IntervalReal to_interval(const RealScalar& x, unsigned precision) {
    if (precision < 8) throw DomainError("precision must be at least 8 bits");
    if (auto q = x.as_rational()) return IntervalReal::point(*q, precision);
    if (auto a = x.as_algebraic()) return a->to_interval(precision);
    const IntervalReal& i = *x.as_interval();
    if (i.precision() == precision) return i;
    return IntervalReal(i.lo(), i.hi(), std::max(precision, i.precision()));
}

BigInt floor_exact(const RealScalar& x) {
    if (auto q = x.as_rational()) return floor(*q);
    if (auto a = x.as_algebraic()) return a->floor();
    const IntervalReal& i = *x.as_interval();
    BigInt lo = floor(i.lo());
    if (lo != floor(i.hi())) throw Indeterminate("interval " + i.to_string() + " straddles an integer");
    return lo;
}

int sign(const RealScalar& x) {
    if (auto q = x.as_rational()) return sgn(*q);
    if (auto a = x.as_algebraic()) return a->sign();
    const IntervalReal& i = *x.as_interval();
    if (i.lo() > 0) return 1;
    if (i.hi() < 0) return -1;
    if (i.lo() == 0 && i.hi() == 0) return 0;
    throw Indeterminate("sign of interval " + i.to_string() + " is undetermined");
}

std::strong_ordering compare(const RealScalar& x, const RealScalar& y) {
    if (!x.is_exact() || !y.is_exact()) {
        const unsigned prec = std::max(interval_precision(x, y), 8u);
        IntervalReal a = to_interval(x, prec);
        IntervalReal b = to_interval(y, prec);
        if (a.hi() < b.lo()) return std::strong_ordering::less;
        if (b.hi() < a.lo()) return std::strong_ordering::greater;
        if (a.is_point() && b.is_point() && a.lo() == b.lo()) return std::strong_ordering::equal;
        throw Indeterminate("overlapping intervals " + a.to_string() + " and " + b.to_string());
    }
    const int s = sign(x - y);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool exactly_equal(const RealScalar& x, const RealScalar& y) {
    if (!x.is_exact() || !y.is_exact()) throw DomainError("exact equality needs exact operands");
    return (x - y).is_exact_zero();
}

std::vector<RealScalar> unify_fields(const std::vector<RealScalar>& xs) {
    const NumberFieldElement* anchor = nullptr;
    for (const auto& x : xs)
        if (auto a = x.as_algebraic()) {
            if (!anchor) anchor = a;
            else if (!anchor->compatible(*a))
                throw IncompatibleFields("entries live in different number fields");
        }
    if (!anchor) return xs;
    std::vector<RealScalar> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        if (auto q = x.as_rational()) out.emplace_back(NumberFieldElement::constant(anchor->field(), *q));
        else if (auto a = x.as_algebraic()) out.emplace_back(NumberFieldElement(anchor->field(), a->coords()));
        else out.push_back(x);
    }
    return out;
}

}  // namespace faf
