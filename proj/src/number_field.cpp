#include "faf/number_field.hpp"

#include <algorithm>

#include "faf/errors.hpp"

namespace faf {

namespace {

struct Bracket {
    BigRational lo, hi;
};

// Bisects [lo, hi] (holding the single root of p) until hi - lo <= target.
void bisect(const IntPoly& p, Bracket& b, const BigRational& target) {
    if (b.lo == b.hi) return;
    int slo = sign_at(p, b.lo);
    if (slo == 0) {
        b.hi = b.lo;
        return;
    }
    if (sign_at(p, b.hi) == 0) {
        b.lo = b.hi;
        return;
    }
    std::size_t guard = 0;
    while (b.hi - b.lo > target) {
        if (++guard > 4u * kMaxRefinementBits) throw RootIsolationError("root refinement did not converge");
        BigRational mid = (b.lo + b.hi) / 2;
        int s = sign_at(p, mid);
        if (s == 0) {
            b.lo = b.hi = mid;
            return;
        }
        if (s == slo) b.lo = mid;
        else b.hi = mid;
    }
}

}  // namespace

std::shared_ptr<const RealNumberField> RealNumberField::create(IntPoly min_poly, const BigRational& lo,
                                                               const BigRational& hi) {
    while (!min_poly.empty() && min_poly.back() == 0) min_poly.pop_back();
    const int d = faf::degree(min_poly);
    if (d < 1) throw DomainError("minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1) throw DomainError("minimal polynomial must be monic: " + format_polynomial(min_poly));
    if (lo > hi) throw RootIsolationError("embedding interval has lo > hi");
    if (!is_squarefree(min_poly)) throw DomainError("minimal polynomial is not squarefree: " + format_polynomial(min_poly));
    const Irreducibility irr = check_irreducible(min_poly);
    if (irr == Irreducibility::reducible)
        throw DomainError("minimal polynomial is reducible over Q: " + format_polynomial(min_poly));

    const std::vector<RatPoly> chain = sturm_chain(min_poly);
    int roots = count_real_roots(chain, lo, hi) + (sign_at(min_poly, lo) == 0 ? 1 : 0);
    if (roots != 1)
        throw RootIsolationError("interval [" + to_string(lo) + ", " + to_string(hi) + "] holds " +
                                 std::to_string(roots) + " roots of " + format_polynomial(min_poly));

    std::shared_ptr<RealNumberField> field(new RealNumberField());
    field->min_poly_ = std::move(min_poly);
    field->given_lo_ = lo;
    field->given_hi_ = hi;
    field->irreducibility_verified_ = irr == Irreducibility::verified;
    Bracket b{lo, hi};
    field->cached_bits_ = 128;
    bisect(field->min_poly_, b, pow2(-static_cast<long>(field->cached_bits_)));
    field->lo_ = b.lo;
    field->hi_ = b.hi;
    return field;
}

std::shared_ptr<const RealNumberField> RealNumberField::rationals() {
    static const std::shared_ptr<const RealNumberField> q = create(IntPoly{BigInt(0), BigInt(1)}, 0, 0);
    return q;
}

std::pair<BigRational, BigRational> RealNumberField::enclose_generator(unsigned bits) const {
    if (bits <= cached_bits_ || lo_ == hi_) return {lo_, hi_};
    Bracket b{lo_, hi_};
    bisect(min_poly_, b, pow2(-static_cast<long>(bits)));
    return {b.lo, b.hi};
}

bool RealNumberField::same_as(const RealNumberField& other) const {
    if (this == &other) return true;
    if (min_poly_ != other.min_poly_) return false;
    BigRational lo = std::max(lo_, other.lo_);
    BigRational hi = std::min(hi_, other.hi_);
    if (lo > hi) return false;
    const std::vector<RatPoly> chain = sturm_chain(min_poly_);
    return count_real_roots(chain, lo, hi) + (sign_at(min_poly_, lo) == 0 ? 1 : 0) >= 1;
}

std::string RealNumberField::describe() const {
    return "Q[x]/(" + format_polynomial(min_poly_) + ") at root in [" + to_string(given_lo_) + ", " +
           to_string(given_hi_) + "]";
}

// ---------------------------------------------------------------------------

NumberFieldElement::NumberFieldElement(FieldPtr field, std::vector<BigRational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw DomainError("number field element without a field");
    if (coords_.size() > field_->degree())
        throw DimensionMismatch("coordinate vector longer than the field degree");
    coords_.resize(field_->degree(), BigRational(0));
}

NumberFieldElement NumberFieldElement::generator(FieldPtr field) {
    std::vector<BigRational> c(field->degree(), BigRational(0));
    if (field->degree() == 1) {
        c[0] = BigRational(-field->min_poly()[0]);
    } else {
        c[1] = 1;
    }
    return NumberFieldElement(std::move(field), std::move(c));
}

NumberFieldElement NumberFieldElement::constant(FieldPtr field, const BigRational& value) {
    std::vector<BigRational> c(field->degree(), BigRational(0));
    c[0] = value;
    return NumberFieldElement(std::move(field), std::move(c));
}

bool NumberFieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigRational& c) { return c == 0; });
}

bool NumberFieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const BigRational& c) { return c == 0; });
}

BigRational NumberFieldElement::rational_value() const {
    if (!is_rational()) throw DomainError("element is not rational");
    return coords_[0];
}

bool NumberFieldElement::compatible(const NumberFieldElement& other) const {
    return field_ == other.field_ || field_->same_as(*other.field_);
}

namespace {

void require_compatible(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (!a.compatible(b))
        throw IncompatibleFields("elements of different fields: " + a.field()->describe() + " vs " +
                                 b.field()->describe());
}

}  // namespace

NumberFieldElement NumberFieldElement::operator-() const {
    std::vector<BigRational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return NumberFieldElement(field_, std::move(c));
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    require_compatible(a, b);
    std::vector<BigRational> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return NumberFieldElement(a.field_, std::move(c));
}

NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    require_compatible(a, b);
    std::vector<BigRational> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return NumberFieldElement(a.field_, std::move(c));
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    require_compatible(a, b);
    const std::size_t d = a.field_->degree();
    const IntPoly& p = a.field_->min_poly();
    std::vector<BigRational> prod(2 * d - 1, BigRational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    // x^d = -(p_0 + ... + p_{d-1} x^{d-1})
    for (std::size_t k = prod.size(); k-- > d;) {
        if (prod[k] == 0) continue;
        BigRational t = prod[k];
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= t * BigRational(p[i]);
    }
    prod.resize(d);
    return NumberFieldElement(a.field_, std::move(prod));
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw Pole("division by zero in number field");
    const std::size_t d = field_->degree();
    if (is_rational()) return constant(field_, 1 / coords_[0]);
    // Columns of m are the coordinates of alpha^j * this.
    std::vector<std::vector<BigRational>> m(d, std::vector<BigRational>(d + 1, BigRational(0)));
    NumberFieldElement power = constant(field_, 1);
    const NumberFieldElement alpha = generator(field_);
    for (std::size_t j = 0; j < d; ++j) {
        NumberFieldElement col = power * *this;
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
        power = power * alpha;
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pivot = c;
        while (pivot < d && m[pivot][c] == 0) ++pivot;
        if (pivot == d) throw DomainError("zero divisor: minimal polynomial is not irreducible");
        std::swap(m[c], m[pivot]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            BigRational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<BigRational> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = m[i][d] / m[i][i];
    return NumberFieldElement(field_, std::move(out));
}

NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    require_compatible(a, b);
    return a * b.inverse();
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    require_compatible(a, b);
    return a.coords_ == b.coords_;
}

std::pair<BigRational, BigRational> NumberFieldElement::enclose(unsigned bits) const {
    if (is_rational()) return {coords_[0], coords_[0]};
    auto [alo, ahi] = field_->enclose_generator(bits);
    BigRational lo = coords_.back(), hi = coords_.back();
    for (std::size_t i = coords_.size() - 1; i-- > 0;) {
        BigRational plo, phi;
        exact_interval_mul(lo, hi, alo, ahi, plo, phi);
        lo = plo + coords_[i];
        hi = phi + coords_[i];
    }
    return {lo, hi};
}

int NumberFieldElement::sign() const {
    if (is_rational()) return sgn(coords_[0]);
    for (unsigned bits = 64; bits <= kMaxRefinementBits; bits *= 2) {
        auto [lo, hi] = enclose(bits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw Indeterminate("sign of number field element not resolved within refinement limit");
}

BigInt NumberFieldElement::floor() const {
    if (is_rational()) return faf::floor(coords_[0]);
    // Irrational: never equal to an integer, so refinement terminates.
    for (unsigned bits = 64; bits <= kMaxRefinementBits; bits *= 2) {
        auto [lo, hi] = enclose(bits);
        BigInt flo = faf::floor(lo);
        if (flo == faf::floor(hi)) return flo;
    }
    throw Indeterminate("floor of number field element not resolved within refinement limit");
}

IntervalReal NumberFieldElement::to_interval(unsigned precision) const {
    if (is_rational()) return IntervalReal::point(coords_[0], precision);
    for (unsigned bits = precision + 8; bits <= kMaxRefinementBits; bits *= 2) {
        auto [lo, hi] = enclose(bits);
        BigRational mag = lo > 0 ? lo : (hi < 0 ? BigRational(-hi) : BigRational(0));
        if (mag < 1) mag = 1;
        if (hi - lo <= pow2(-static_cast<long>(precision) - 1) * mag) return IntervalReal(lo, hi, precision);
    }
    throw RootIsolationError("embedding interval could not be refined to the requested precision");
}

}  // namespace faf
