#include "faf/rational.hpp"

#include <cctype>

#include "faf/errors.hpp"

namespace faf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
    BigInt out;
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    if (out.set_str(buf, 10) != 0) throw ParseError("not an integer: '" + std::string(text) + "'");
    return out;
}

BigRational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
            throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
        BigInt den = parse_integer(den_text);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        BigRational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool negative = !ip.empty() && ip.front() == '-';
        std::string_view ip_digits = ip;
        if (!ip_digits.empty() && (ip_digits.front() == '-' || ip_digits.front() == '+')) ip_digits.remove_prefix(1);
        if ((ip_digits.empty() && fp.empty()) || (!ip_digits.empty() && !all_digits(ip_digits)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("not a number: '" + std::string(text) + "'");
        BigInt whole = ip_digits.empty() ? BigInt(0) : parse_integer(ip_digits);
        BigInt frac = fp.empty() ? BigInt(0) : parse_integer(fp);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        BigRational q(whole * scale + frac, scale);
        q.canonicalize();
        if (negative) q = -q;
        return q;
    }
    return BigRational(parse_integer(s));
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str(10);
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt floor(const BigRational& value) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

BigInt ceil(const BigRational& value) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

BigRational abs(const BigRational& value) { return value < 0 ? BigRational(-value) : value; }

BigRational pow2(long exponent) {
    BigInt p(1);
    if (exponent >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        return BigRational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
    return BigRational(BigInt(1), p);
}

long log2_lower(const BigRational& value) {
    long a = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
    long b = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
    return a - b - 1;
}

namespace {

BigRational grid_step(const BigRational& value, unsigned bits) {
    long k = value == 0 ? 0 : log2_lower(value);
    if (k < 0) k = 0;
    return pow2(k - static_cast<long>(bits));
}

}  // namespace

BigRational round_down(const BigRational& value, unsigned bits) {
    if (value.get_den() == 1) return value;
    BigRational step = grid_step(value, bits);
    BigRational scaled = value / step;
    BigRational out = BigRational(floor(scaled)) * step;
    out.canonicalize();
    return out;
}

BigRational round_up(const BigRational& value, unsigned bits) {
    if (value.get_den() == 1) return value;
    BigRational step = grid_step(value, bits);
    BigRational scaled = value / step;
    BigRational out = BigRational(ceil(scaled)) * step;
    out.canonicalize();
    return out;
}

bool fits_int64(const BigInt& value) {
    static_assert(sizeof(long) == 8);
    return mpz_fits_slong_p(value.get_mpz_t()) != 0;
}

}  // namespace faf
