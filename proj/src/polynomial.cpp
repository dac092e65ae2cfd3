#include "faf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numeric>

#include "faf/errors.hpp"

namespace faf {

int degree(const IntPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

int degree(const RatPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

namespace {

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigRational evaluate(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

BigRational evaluate(const IntPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

int sign_at(const IntPoly& p, const BigRational& x) { return sgn(evaluate(p, x)); }

RatPoly to_rational(const IntPoly& p) {
    RatPoly out(p.begin(), p.end());
    trim(out);
    return out;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    trim(out);
    return out;
}

RatPoly remainder(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    trim(r);
    RatPoly d = b;
    trim(d);
    if (d.empty()) throw DomainError("polynomial division by zero");
    const int db = static_cast<int>(d.size()) - 1;
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        const int shift = static_cast<int>(r.size()) - 1 - db;
        BigRational factor = r.back() / d.back();
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= factor * d[static_cast<std::size_t>(i)];
        r.pop_back();
        trim(r);
    }
    return r;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        RatPoly r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) {
        BigRational lead = x.back();
        for (auto& c : x) c /= lead;
    }
    return x;
}

bool is_squarefree(const IntPoly& p) {
    RatPoly rp = to_rational(p);
    return degree(gcd(rp, derivative(rp))) == 0;
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(to_rational(p));
    chain.push_back(derivative(chain.front()));
    while (!chain.back().empty()) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty()) chain.pop_back();
    return chain;
}

namespace {

int variations(const std::vector<RatPoly>& chain, const BigRational& x) {
    int count = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = sgn(evaluate(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int count_real_roots(const std::vector<RatPoly>& chain, const BigRational& lo, const BigRational& hi) {
    return variations(chain, lo) - variations(chain, hi);
}

bool divides_exactly(const IntPoly& q, const IntPoly& p) {
    const int dq = degree(q);
    if (dq < 0 || q[static_cast<std::size_t>(dq)] != 1) throw DomainError("divisor must be monic");
    IntPoly r(p.begin(), p.end());
    for (int top = degree(r); top >= dq; top = degree(r)) {
        BigInt factor = r[static_cast<std::size_t>(top)];
        for (int i = 0; i <= dq; ++i) r[static_cast<std::size_t>(top - dq + i)] -= factor * q[static_cast<std::size_t>(i)];
    }
    return degree(r) < 0;
}

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> complex_roots(const IntPoly& p) {
    const int d = degree(p);
    std::vector<long double> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].get_d();
    // Cauchy bound for the initial circle.
    long double bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(c[static_cast<std::size_t>(i)]));
    bound += 1;
    auto eval = [&](Complex z, Complex& dp) {
        Complex v = 0;
        dp = 0;
        for (int i = d; i >= 0; --i) {
            dp = dp * z + v;
            v = v * z + c[static_cast<std::size_t>(i)];
        }
        return v;
    };
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(bound * 0.5L, 0.4L + 2.0L * 3.14159265358979323846L * k / d);
    // Aberth-Ehrlich iteration.
    for (int iter = 0; iter < 2000; ++iter) {
        long double moved = 0;
        for (int k = 0; k < d; ++k) {
            Complex dp;
            Complex v = eval(z[static_cast<std::size_t>(k)], dp);
            if (v == Complex(0)) continue;
            Complex ratio = v / dp;
            Complex sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            Complex step = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(k)] -= step;
            moved = std::max(moved, std::abs(step) / (1 + std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (moved < 1e-18L) break;
    }
    return z;
}

}  // namespace

Irreducibility check_irreducible(const IntPoly& p) {
    const int d = degree(p);
    if (d < 1) throw DomainError("constant polynomial has no roots");
    if (d == 1) return Irreducibility::verified;
    if (d > 6) return Irreducibility::unverified;
    const std::vector<Complex> roots = complex_roots(p);
    for (int k = 1; k <= d / 2; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<Complex> coeffs{Complex(1)};
            for (int idx : pick) {
                std::vector<Complex> next(coeffs.size() + 1, Complex(0));
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    next[i + 1] += coeffs[i];
                    next[i] -= coeffs[i] * roots[static_cast<std::size_t>(idx)];
                }
                coeffs = std::move(next);
            }
            bool near_integer = true;
            IntPoly candidate(coeffs.size());
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                long double re = std::round(coeffs[i].real());
                long double tol = 1e-6L * (1 + std::fabs(re));
                if (std::fabs(coeffs[i].imag()) > tol || std::fabs(coeffs[i].real() - re) > tol ||
                    std::fabs(re) > 1e18L) {
                    near_integer = false;
                    break;
                }
                candidate[i] = BigInt(static_cast<long>(re));
            }
            if (near_integer && divides_exactly(candidate, p)) return Irreducibility::reducible;
            // next combination
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return Irreducibility::verified;
}

IntPoly parse_polynomial(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");
    IntPoly out;
    std::size_t pos = 0;
    auto fail = [&]() { throw ParseError("malformed polynomial: '" + std::string(text) + "'"); };
    auto read_digits = [&](std::string& into) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) into.push_back(s[pos++]);
    };
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail();
        }
        first = false;
        std::string coef_digits;
        read_digits(coef_digits);
        BigInt coef = coef_digits.empty() ? BigInt(1) : parse_integer(coef_digits);
        std::size_t exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (coef_digits.empty()) fail();
            ++pos;
            if (pos >= s.size() || s[pos] != 'x') fail();
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string exp_digits;
                read_digits(exp_digits);
                if (exp_digits.empty() || exp_digits.size() > 3) fail();
                exponent = static_cast<std::size_t>(std::stoul(exp_digits));
            }
        } else if (coef_digits.empty()) {
            fail();
        }
        if (out.size() <= exponent) out.resize(exponent + 1, BigInt(0));
        out[exponent] += sign * coef;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    if (out.empty()) throw ParseError("zero polynomial");
    return out;
}

std::string format_polynomial(const IntPoly& p) {
    std::string out;
    for (int i = degree(p); i >= 0; --i) {
        const BigInt& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (!out.empty()) out += c < 0 ? "-" : "+";
        else if (c < 0) out += "-";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace faf
