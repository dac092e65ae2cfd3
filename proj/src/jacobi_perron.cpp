#include "faf/jacobi_perron.hpp"

#include <algorithm>
#include <map>

#include "faf/errors.hpp"

namespace faf {

bool digit_admissible(const JPDigit& d, bool first) {
    for (const BigInt& b : d)
        if (b < 0) return false;
    if (first || d.empty()) return true;
    const BigInt& last = d.back();
    if (last < 1) return false;
    return std::all_of(d.begin(), d.end(), [&](const BigInt& b) { return b <= last; });
}

JPExpansion JPExpansion::from_digits(std::size_t n, std::vector<JPDigit> digits, bool terminated) {
    if (n < 2) throw DomainError("Jacobi-Perron dimension must be at least 2");
    JPExpansion e;
    e.n = n;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k].size() != n - 1)
            throw DimensionMismatch("digit " + std::to_string(k + 1) + " has length " +
                                    std::to_string(digits[k].size()) + ", expected " + std::to_string(n - 1));
        for (const BigInt& b : digits[k])
            if (b < 0) throw DomainError("digit " + std::to_string(k + 1) + " has a negative entry");
        e.admissible = e.admissible && digit_admissible(digits[k], k == 0);
    }
    e.digits = std::move(digits);
    e.terminated = terminated;
    return e;
}

JPStep jp_step(const std::vector<RealScalar>& theta) {
    if (theta.empty()) throw DimensionMismatch("jp_step needs at least one coordinate");
    JPStep s;
    std::vector<RealScalar> rem;
    for (const RealScalar& t : theta) {
        BigInt b = floor_exact(t);
        rem.push_back(t - RealScalar(b));
        s.digit.push_back(std::move(b));
    }
    if (rem[0].is_exact_zero()) {
        s.terminated = true;
        s.degenerate = std::any_of(rem.begin() + 1, rem.end(), [](const RealScalar& r) { return !r.is_exact_zero(); });
        return s;
    }
    std::vector<RealScalar> next;
    for (std::size_t i = 1; i < rem.size(); ++i) next.push_back(rem[i] / rem[0]);
    next.push_back(RealScalar(1) / rem[0]);
    s.next = std::move(next);
    return s;
}

namespace {

struct HomStep {
    JPDigit digit;
    std::vector<RealScalar> next;
    bool done = false;
};

// v = (v_0, ..., v_{n-1}) with v_0 in {0, 1}; returns b and v' with v = M(b) v'.
HomStep hom_step(const std::vector<RealScalar>& v) {
    const std::size_t n = v.size();
    HomStep s;
    s.digit.assign(n - 1, BigInt(0));
    if (v[0].is_exact_zero()) {
        s.next.assign(v.begin() + 1, v.end());
        s.next.emplace_back(0);
    } else {
        bool all_zero = true;
        for (std::size_t i = 1; i < n; ++i) {
            s.digit[i - 1] = floor_exact(v[i]);
            s.next.push_back(v[i] - RealScalar(s.digit[i - 1]));
            all_zero = all_zero && s.next.back().is_exact_zero();
        }
        s.next.push_back(v[0]);
        if (all_zero) {
            s.done = true;
            return s;
        }
    }
    if (!s.next[0].is_exact_zero()) {
        const RealScalar pivot = s.next[0];
        s.next[0] = RealScalar(1);
        for (std::size_t i = 1; i < n; ++i) s.next[i] = s.next[i] / pivot;
    }
    return s;
}

using StateKey = std::vector<std::vector<BigRational>>;

std::optional<StateKey> state_key(const std::vector<RealScalar>& v) {
    StateKey key;
    bool algebraic = false;
    for (const RealScalar& x : v) {
        if (const BigRational* q = x.as_rational()) {
            key.push_back({*q});
        } else if (const NumberFieldElement* a = x.as_algebraic()) {
            key.push_back(a->coords());
            algebraic = true;
        } else {
            return std::nullopt;
        }
    }
    if (!algebraic) return std::nullopt;
    return key;
}

}  // namespace

JPExpansion jp_expand(const std::vector<RealScalar>& theta, std::size_t depth) {
    if (theta.empty()) throw DimensionMismatch("jp_expand needs at least one coordinate");
    for (std::size_t i = 0; i < theta.size(); ++i)
        if (sign(theta[i]) < 0) throw DomainError("theta_" + std::to_string(i + 1) + " is negative");

    JPExpansion e;
    e.n = theta.size() + 1;
    e.source = theta;
    std::vector<RealScalar> v{RealScalar(1)};
    for (RealScalar& t : unify_fields(theta)) v.push_back(std::move(t));

    std::map<StateKey, std::size_t> seen;
    for (std::size_t k = 0; k < depth; ++k) {
        if (auto key = state_key(v)) {
            auto [it, inserted] = seen.emplace(std::move(*key), k);
            if (!inserted) {
                e.period = Periodicity{it->second, k - it->second};
                for (std::size_t t = k; t < depth; ++t) {
                    e.digits.push_back(e.digits[t - e.period->length]);
                    e.admissible = e.admissible && digit_admissible(e.digits.back(), false);
                }
                return e;
            }
        }
        HomStep s;
        try {
            s = hom_step(v);
        } catch (const Indeterminate& err) {
            throw Indeterminate(err.what(), k);
        }
        e.admissible = e.admissible && digit_admissible(s.digit, k == 0);
        e.digits.push_back(std::move(s.digit));
        if (s.done) {
            e.terminated = true;
            return e;
        }
        v = std::move(s.next);
    }
    return e;
}

IntMatrix jp_digit_matrix(const JPDigit& d, std::size_t n) {
    if (n < 2 || d.size() != n - 1)
        throw DimensionMismatch("digit of length " + std::to_string(d.size()) + " for dimension " + std::to_string(n));
    IntMatrix m(n, n);
    m(0, n - 1) = 1;
    for (std::size_t i = 1; i < n; ++i) {
        m(i, i - 1) = 1;
        m(i, n - 1) = d[i - 1];
    }
    return m;
}

std::vector<BigRational> JPConvergentState::ratios() const {
    const IntVector a = convergent();
    if (a[0] == 0) throw DomainError("A_0 vanishes at step " + std::to_string(nu));
    std::vector<BigRational> out;
    for (std::size_t i = 1; i < a.size(); ++i) {
        BigRational r(a[i], a[0]);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<JPConvergentState> jp_convergents(const JPExpansion& e, std::size_t upto) {
    if (upto > e.digits.size()) throw DomainError("jp_convergents: upto exceeds the number of digits");
    const std::size_t n = e.n;

    std::vector<JPConvergentState> states;
    IntMatrix p = IntMatrix::identity(n);
    states.push_back({0, p});
    for (std::size_t k = 0; k < upto; ++k) {
        p = p * jp_digit_matrix(e.digits[k], n);
        states.push_back({k + 1, p});
    }

    std::vector<IntVector> a;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector unit(n, BigInt(0));
        unit[j] = 1;
        a.push_back(std::move(unit));
    }
    for (std::size_t nu = 0; nu < upto; ++nu) {
        IntVector next = a[nu];
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) next[i] += e.digits[nu][j - 1] * a[nu + j][i];
        a.push_back(std::move(next));
    }

    for (const JPConvergentState& s : states)
        for (std::size_t j = 0; j < n; ++j)
            if (s.columns.column(j) != a[s.nu + j])
                throw ConsistencyFault("recurrence and matrix product disagree at step " + std::to_string(s.nu));
    return states;
}

JPLimitReport jp_limit_check(const JPExpansion& e, const std::vector<RealScalar>* theta, std::size_t depth,
                             const BigRational& tol, unsigned precision) {
    if (depth < 1 || depth > e.digits.size())
        throw DomainError("jp_limit_check: depth must lie in [1, " + std::to_string(e.digits.size()) + "]");
    if (tol <= 0) throw DomainError("tolerance must be positive");
    if (theta && theta->size() != e.n - 1) throw DimensionMismatch("theta has the wrong length");

    const std::vector<JPConvergentState> states = jp_convergents(e, depth);
    if (states[depth].convergent()[0] == 0)
        throw ConsistencyFault("A_0 vanishes at step " + std::to_string(depth));

    JPLimitReport r;
    r.depth = depth;
    r.tol = tol;
    r.exact = e.terminated && depth == e.digits.size();
    const std::vector<BigRational> cur = states[depth].ratios();
    if (states[depth - 1].convergent()[0] != 0) {
        const std::vector<BigRational> prev = states[depth - 1].ratios();
        BigRational gap = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) gap = std::max(gap, BigRational(abs(cur[i] - prev[i])));
        r.cauchy_gap = gap;
    }
    if (theta) {
        BigRational lo = 0, hi = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const IntervalReal d = to_interval(RealScalar(cur[i]) - (*theta)[i], precision);
            lo = std::max(lo, d.magnitude_lower());
            hi = std::max(hi, d.magnitude_upper());
        }
        r.error = IntervalReal(lo, hi, precision);
    }
    if (r.exact) {
        r.converged = true;
    } else {
        r.converged = r.cauchy_gap && *r.cauchy_gap < tol && (!r.error || r.error->hi() < tol);
    }
    return r;
}

PerronReport perron_condition(const JPExpansion& e, const BigRational& C) {
    PerronReport r;
    const std::size_t last = e.n - 1;
    for (std::size_t k = 0; k < e.digits.size(); ++k) {
        const JPDigit& d = e.digits[k];
        auto violate = [&](std::size_t i) {
            r.holds = false;
            r.first_violation = std::make_pair(k + 1, i);
            return r;
        };
        const BigInt& b_last = d[last - 1];
        if (b_last < 1 || BigRational(1, b_last) > C) return violate(last);
        for (std::size_t i = 1; i <= last; ++i) {
            BigRational ratio(d[i - 1], b_last);
            ratio.canonicalize();
            if (ratio < 0 || ratio >= C) return violate(i);
        }
    }
    return r;
}

ESDivergenceReport effros_shen_divergent(const std::vector<BigInt>& beta,
                                         const std::optional<BigRational>& tail_bound) {
    ESDivergenceReport r;
    r.pattern_ok = true;
    r.partial_sum = 0;
    r.tail_bound = tail_bound;
    for (const BigInt& b : beta) {
        if (b < 1) {
            r.pattern_ok = false;
            continue;
        }
        r.partial_sum += BigRational(1, b);
    }
    r.partial_sum.canonicalize();
    r.certified_divergent = r.pattern_ok && tail_bound && *tail_bound >= 0 && r.partial_sum + *tail_bound < 1;
    return r;
}

ESDivergenceReport effros_shen_divergent(const JPExpansion& e, const std::optional<BigRational>& tail_bound) {
    std::vector<BigInt> beta;
    bool shape = e.n == 3;
    if (shape) {
        for (const JPDigit& d : e.digits) {
            shape = shape && d[1] == 0;
            beta.push_back(d[0]);
        }
    }
    ESDivergenceReport r = effros_shen_divergent(beta, tail_bound);
    if (!shape) {
        r.pattern_ok = false;
        r.certified_divergent = false;
    }
    return r;
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::none: return "none";
        case CertificateKind::terminated: return "terminated";
        case CertificateKind::periodic: return "periodic";
        case CertificateKind::horizon: return "horizon";
        case CertificateKind::divergent: return "divergent";
    }
    return "none";
}

ConvergenceCertificate certify_convergence(const JPExpansion& e, const std::optional<JPLimitReport>& limit,
                                           const std::optional<BigRational>& es_tail_bound) {
    ConvergenceCertificate c;
    c.limit = limit;
    if (es_tail_bound && effros_shen_divergent(e, es_tail_bound).certified_divergent)
        c.kind = CertificateKind::divergent;
    else if (e.terminated)
        c.kind = CertificateKind::terminated;
    else if (e.period)
        c.kind = CertificateKind::periodic;
    else if (limit && limit->converged)
        c.kind = CertificateKind::horizon;
    return c;
}

}  // namespace faf
