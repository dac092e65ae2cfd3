#include "faf/contfrac.hpp"

#include <algorithm>
#include <map>

#include "faf/errors.hpp"

namespace faf {

CFExpansion CFExpansion::finite_from_digits(std::vector<BigInt> digits) {
    for (std::size_t i = 1; i < digits.size(); ++i)
        if (digits[i] < 1) throw DomainError("continued fraction digit " + std::to_string(i + 1) + " must be >= 1");
    if (digits.size() >= 2 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    CFExpansion e;
    e.digits = std::move(digits);
    e.finite = true;
    return e;
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
    return Mat2Z{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

EuclidResult euclid_cf(const BigInt& a1, const BigInt& a2) {
    if (!(a1 >= a2 && a2 >= 1)) throw DomainError("euclid_cf needs a1 >= a2 >= 1");
    EuclidResult out;
    BigInt x = a1, y = a2;
    while (y != 0) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        out.expansion.digits.push_back(q);
        x = std::move(y);
        y = std::move(r);
    }
    out.expansion.finite = true;
    out.gcd = x;
    return out;
}

CFExpansion cf_expand(const RealScalar& x, std::size_t depth) {
    CFExpansion e;
    RealScalar r = x;
    std::map<std::vector<BigRational>, std::size_t> seen;
    for (std::size_t i = 0; i < depth; ++i) {
        if (const NumberFieldElement* a = r.as_algebraic(); a && !a->is_rational()) {
            auto [it, inserted] = seen.emplace(a->coords(), i);
            if (!inserted) {
                e.period = Periodicity{it->second, i - it->second};
                for (std::size_t t = i; t < depth; ++t) e.digits.push_back(e.digits[t - e.period->length]);
                return e;
            }
        }
        BigInt b;
        try {
            b = floor_exact(r);
        } catch (const Indeterminate& err) {
            throw Indeterminate(err.what(), i);
        }
        e.digits.push_back(b);
        RealScalar frac = r - RealScalar(b);
        if (frac.is_exact_zero()) {
            e.finite = true;
            return e;
        }
        try {
            r = RealScalar(1) / frac;
        } catch (const Indeterminate& err) {
            throw Indeterminate(err.what(), i + 1);
        }
    }
    return e;
}

CFProduct cf_matrix_product(const CFExpansion& e, std::size_t k) {
    if (k > e.digits.size()) throw DomainError("cf_matrix_product: k exceeds the number of digits");
    CFProduct out;
    for (std::size_t i = 0; i < k; ++i) out.matrix = out.matrix * Mat2Z{0, 1, 1, e.digits[i]};
    out.image = {out.matrix.b, out.matrix.d};
    if (k >= 1) out.convergent = BigRational(out.matrix.d, out.matrix.b);
    if (out.convergent) out.convergent->canonicalize();
    return out;
}

RealScalar mobius_apply(const Mat2Z& m, const RealScalar& x) {
    const BigInt det = m.determinant();
    if (det != 1 && det != -1) throw DomainError("Mobius matrix must have determinant +-1");
    RealScalar num = RealScalar(m.a) * x + RealScalar(m.b);
    RealScalar den = RealScalar(m.c) * x + RealScalar(m.d);
    if (den.is_exact_zero()) throw Pole("Mobius transformation has a pole at x");
    return num / den;
}

namespace {

bool tails_match(const CFExpansion& x, const CFExpansion& y, std::size_t i, std::size_t j) {
    const std::size_t lx = x.digits.size() - i;
    const std::size_t ly = y.digits.size() - j;
    if (x.finite || y.finite) {
        if (!(x.finite && y.finite) || lx != ly) return false;
    }
    const std::size_t len = std::min(lx, ly);
    return std::equal(x.digits.begin() + static_cast<std::ptrdiff_t>(i),
                      x.digits.begin() + static_cast<std::ptrdiff_t>(i + len),
                      y.digits.begin() + static_cast<std::ptrdiff_t>(j));
}

std::vector<BigInt> cycle(const CFExpansion& e) {
    auto first = e.digits.begin() + static_cast<std::ptrdiff_t>(e.period->preperiod);
    return std::vector<BigInt>(first, first + static_cast<std::ptrdiff_t>(e.period->length));
}

bool is_rotation(const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t s = 0; s < u.size(); ++s) {
        bool ok = true;
        for (std::size_t t = 0; t < u.size() && ok; ++t) ok = u[(s + t) % u.size()] == v[t];
        if (ok) return true;
    }
    return false;
}

}  // namespace

TailReport cf_tail_equivalent(const CFExpansion& x, const CFExpansion& y, std::size_t max_offset) {
    const std::size_t need = max_offset + 3;
    if (x.digits.size() < need || y.digits.size() < need)
        throw InsufficientDepth("tail comparison needs at least " + std::to_string(need) + " digits");
    TailReport report;
    report.depth = std::min(x.digits.size(), y.digits.size());
    for (std::size_t s = 0; s <= 2 * max_offset && !report.offsets; ++s) {
        const std::size_t i_lo = s > max_offset ? s - max_offset : 0;
        const std::size_t i_hi = std::min(s, max_offset);
        for (std::size_t i = i_lo; i <= i_hi; ++i) {
            if (tails_match(x, y, i, s - i)) {
                report.offsets = std::make_pair(i, s - i);
                break;
            }
        }
    }
    report.equivalent = report.offsets.has_value();
    if (x.period && y.period) {
        // Both tails are purely periodic from their preperiods on; the verdict
        // holds forever iff the repeating cycles are rotations of each other.
        const bool by_cycles = is_rotation(cycle(x), cycle(y));
        report.proven = by_cycles == report.equivalent;
    }
    return report;
}

TailReport cf_tail_equivalent(const RealScalar& x, const RealScalar& y, std::size_t depth, std::size_t max_offset) {
    return cf_tail_equivalent(cf_expand(x, depth), cf_expand(y, depth), max_offset);
}

}  // namespace faf
