#include "faf/serialize.hpp"

#include <sstream>

#include "faf/errors.hpp"
#include "faf/polynomial.hpp"

namespace faf {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

BigRational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRational(integer_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as an integer or a \"p/q\" string");
}

RealScalar make_algebraic(IntPoly poly, const BigRational& lo, const BigRational& hi, std::vector<BigRational> coords) {
    FieldPtr field = RealNumberField::create(std::move(poly), lo, hi);
    if (coords.empty()) return NumberFieldElement::generator(field);
    if (coords.size() > field->degree()) throw ParseError("more coordinates than the field degree");
    return NumberFieldElement(field, std::move(coords));
}

}  // namespace

Json integer_json(const BigInt& z) {
    if (fits_int64(z)) return Json(z.get_si());
    return Json(z.get_str());
}

BigInt integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer");
}

Json to_json(const RealScalar& x) {
    if (const BigRational* q = x.as_rational()) return to_string(*q);
    if (const IntervalReal* i = x.as_interval())
        return Json{{"interval", {to_string(i->lo()), to_string(i->hi())}}, {"precision", i->precision()}};
    const NumberFieldElement& a = *x.as_algebraic();
    Json poly = Json::array();
    for (const BigInt& c : a.field()->min_poly()) poly.push_back(integer_json(c));
    Json coords = Json::array();
    for (const BigRational& c : a.coords()) coords.push_back(to_string(c));
    const auto [lo, hi] = a.field()->embedding();
    return Json{{"min_poly", poly}, {"coords", coords}, {"embedding", {to_string(lo), to_string(hi)}}};
}

RealScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return RealScalar(integer_from_json(j));
    if (!j.is_object()) throw ParseError("expected a scalar string or object");
    if (j.contains("interval")) {
        const Json& iv = j.at("interval");
        if (!iv.is_array() || iv.size() != 2) throw ParseError("interval needs [lo, hi]");
        const unsigned prec = j.contains("precision") ? j.at("precision").get<unsigned>() : 128;
        return IntervalReal(rational_from_json(iv[0]), rational_from_json(iv[1]), prec);
    }
    if (!j.contains("min_poly") || !j.contains("embedding")) throw ParseError("algebraic scalar needs min_poly and embedding");
    IntPoly poly;
    for (const Json& c : j.at("min_poly")) poly.push_back(integer_from_json(c));
    const Json& emb = j.at("embedding");
    if (!emb.is_array() || emb.size() != 2) throw ParseError("embedding needs [lo, hi]");
    std::vector<BigRational> coords;
    if (j.contains("coords"))
        for (const Json& c : j.at("coords")) coords.push_back(rational_from_json(c));
    return make_algebraic(std::move(poly), rational_from_json(emb[0]), rational_from_json(emb[1]), std::move(coords));
}

RealScalar algebraic_scalar(std::string_view poly, std::string_view embed, std::string_view coords) {
    const std::vector<std::string> ends = split(embed, ',');
    if (ends.size() != 2) throw ParseError("embedding must be \"lo,hi\"");
    std::vector<BigRational> c;
    if (!trim(coords).empty())
        for (const std::string& s : split(coords, ',')) c.push_back(parse_rational(s));
    return make_algebraic(parse_polynomial(trim(poly)), parse_rational(ends[0]), parse_rational(ends[1]), std::move(c));
}

RealScalar parse_scalar(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.front() == '{') {
        Json j;
        try {
            j = Json::parse(s);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON scalar: ") + e.what());
        }
        return scalar_from_json(j);
    }
    if (s.rfind("alg(", 0) == 0) {
        if (s.back() != ')') throw ParseError("unterminated alg(...)");
        const std::vector<std::string> parts = split(std::string_view(s).substr(4, s.size() - 5), ';');
        if (parts.size() < 2 || parts.size() > 3) throw ParseError("alg(...) takes poly;lo,hi[;coords]");
        return algebraic_scalar(parts[0], parts[1], parts.size() == 3 ? parts[2] : "");
    }
    return RealScalar(parse_rational(s));
}

std::string decimal(const BigRational& q, int digits) {
    if (q == 0) return "0";
    mpf_class f(q, 4 * static_cast<mp_bitcnt_t>(digits) + 64);
    mp_exp_t exp = 0;
    std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    std::string sgn;
    if (!m.empty() && m[0] == '-') {
        sgn = "-";
        m.erase(0, 1);
    }
    std::string out = sgn + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    return out + "e" + std::to_string(exp - 1);
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const BigInt& x : v) out.push_back(integer_json(x));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const IntervalReal& x) {
    return Json{{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}, {"approx", decimal(x.midpoint())}};
}

namespace {

Json period_json(const std::optional<Periodicity>& p) {
    if (!p) return nullptr;
    return Json{{"preperiod", p->preperiod}, {"length", p->length}};
}

}  // namespace

Json to_json(const CFExpansion& e) {
    return Json{{"digits", to_json(e.digits)}, {"finite", e.finite}, {"period", period_json(e.period)}};
}

Json to_json(const TailReport& r) {
    Json offsets = nullptr;
    if (r.offsets) offsets = Json::array({r.offsets->first, r.offsets->second});
    return Json{{"equivalent", r.equivalent}, {"proven", r.proven}, {"offsets", offsets}, {"depth", r.depth}};
}

Json to_json(const JPExpansion& e) {
    Json digits = Json::array();
    for (const JPDigit& d : e.digits) digits.push_back(to_json(d));
    return Json{{"n", e.n},
                {"digits", digits},
                {"terminated", e.terminated},
                {"admissible", e.admissible},
                {"period", period_json(e.period)}};
}

Json to_json(const JPLimitReport& r) {
    Json out{{"depth", r.depth}, {"tol", to_string(r.tol)}};
    out["cauchy_gap"] = r.cauchy_gap ? Json(to_string(*r.cauchy_gap)) : Json(nullptr);
    out["cauchy_gap_approx"] = r.cauchy_gap ? Json(decimal(*r.cauchy_gap, 6)) : Json(nullptr);
    out["error_upper"] = r.error ? Json(decimal(r.error->hi(), 6)) : Json(nullptr);
    out["exact"] = r.exact;
    out["converged"] = r.converged;
    return out;
}

Json to_json(const PerronReport& r) {
    Json v = nullptr;
    if (r.first_violation) v = Json::array({r.first_violation->first, r.first_violation->second});
    return Json{{"holds", r.holds}, {"first_violation", v}};
}

Json to_json(const ESDivergenceReport& r) {
    return Json{{"pattern_ok", r.pattern_ok},
                {"partial_sum", to_string(r.partial_sum)},
                {"tail_bound", r.tail_bound ? Json(to_string(*r.tail_bound)) : Json(nullptr)},
                {"certified_divergent", r.certified_divergent}};
}

Json to_json(const ConvergenceCertificate& c) {
    return Json{{"kind", to_string(c.kind)}, {"limit", c.limit ? to_json(*c.limit) : Json(nullptr)}};
}

Json to_json(const BratteliDiagram& d) {
    Json mu = Json::array();
    for (const IntMatrix& m : d.mu()) mu.push_back(to_json(m));
    return Json{{"n", d.n()}, {"root_edges", to_json(d.root_edges())}, {"mu", mu}};
}

Json to_json(const TraceEstimate& t) {
    Json state = Json::array();
    for (const IntervalReal& s : t.state) state.push_back(to_json(s));
    return Json{{"level", t.level}, {"state", state}, {"diameter", to_json(t.diameter)}};
}

Json to_json(const ProjectivePseudoLattice& p) {
    Json theta = Json::array();
    for (const RealScalar& t : p.theta) theta.push_back(to_json(t));
    return Json{{"n", p.n()}, {"theta", theta}};
}

Json to_json(const FunctorBundle& b) {
    Json digits = Json::array();
    for (const JPDigit& d : b.expansion.digits) digits.push_back(to_json(d));
    return Json{{"ppl", to_json(b.ppl)},
                {"digits", digits},
                {"expansion", to_json(b.expansion)},
                {"diagram", to_json(b.diagram)},
                {"convergence", to_json(b.convergence)},
                {"toric", b.toric}};
}

std::vector<JPDigit> digits_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("digits must be a JSON array of arrays");
    std::vector<JPDigit> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("each digit must be a JSON array");
        JPDigit d;
        for (const Json& x : row) d.push_back(integer_from_json(x));
        out.push_back(std::move(d));
    }
    return out;
}

BratteliDiagram diagram_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("root_edges") || !j.contains("mu"))
        throw ParseError("diagram needs n, root_edges and mu");
    const std::size_t n = j.at("n").get<std::size_t>();
    IntVector root;
    for (const Json& x : j.at("root_edges")) root.push_back(integer_from_json(x));
    std::vector<IntMatrix> mu;
    for (const Json& m : j.at("mu")) {
        IntMatrix mat(m.size(), n);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (m[r].size() != n) throw ParseError("multiplicity matrix row of the wrong length");
            for (std::size_t c = 0; c < n; ++c) mat(r, c) = integer_from_json(m[r][c]);
        }
        mu.push_back(std::move(mat));
    }
    return BratteliDiagram(n, std::move(root), std::move(mu));
}

}  // namespace faf
