// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "faf/errors.hpp"
#include "faf/lattice.hpp"
#include "faf/polynomial.hpp"
#include "faf/serialize.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace faf;
using namespace faf::testing;

namespace {

// Pinned limits and tolerances.
constexpr double kRoundTripSeconds = 5.0;
constexpr double kJPTerminationSeconds = 10.0;
constexpr double kPerronSeconds = 30.0;
constexpr double kModuleSeconds = 30.0;
const BigRational kPerronGap(1, 100000000);      // 1e-8
const BigRational kCauchyTol(1, 10000);          // 1e-4
const BigRational kConvergedDiameter(1, 1000000);  // 1e-6
const BigRational kDivergentDiameter(1, 1000);   // 1e-3
constexpr std::size_t kTailDepth = 200;
constexpr std::size_t kTailOffset = 40;
// Regression fixtures for the (2^(k+1), 0) digits, produced by the recurrence.
const char* const kDoublingGap40 = "2.2393650655e2";
const char* const kDoublingDiameter40 = "8.57517895719e-1";

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

Outcome fail(const std::string& why) { return {false, why}; }

Outcome rational_round_trip() {
    const auto t0 = Clock::now();
    Rng rng(1001);
    for (int t = 0; t < 1000; ++t) {
        BigInt p = rng.uniform(1, 1000000), q = rng.uniform(1, 1000000);
        if (p < q) std::swap(p, q);
        const EuclidResult e = euclid_cf(p, q);
        BigRational expected(p, q);
        expected.canonicalize();
        const CFProduct prod = cf_matrix_product(e.expansion, e.expansion.digits.size());
        if (!prod.convergent || *prod.convergent != expected) return fail("mismatch at " + to_string(expected));
    }
    const double s = seconds_since(t0);
    if (s >= kRoundTripSeconds) return fail("too slow: " + fmt_seconds(s));
    return {true, "1000 rationals, " + fmt_seconds(s)};
}

Outcome jp_rational_termination() {
    const auto t0 = Clock::now();
    Rng rng(1002);
    std::size_t longest = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = t % 2 == 0 ? 3 : 4;
        std::vector<RealScalar> theta;
        std::vector<BigRational> exact;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            exact.push_back(random_rational(rng, 10000, 10000, true));
            theta.emplace_back(exact.back());
        }
        const JPExpansion e = jp_expand(theta, 1000000);
        if (!e.terminated) return fail("no termination for case " + std::to_string(t));
        longest = std::max(longest, e.digits.size());
        const IntVector a = jp_convergents(e, e.digits.size()).back().convergent();
        if (a[0] <= 0) return fail("non-positive scale in case " + std::to_string(t));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            BigRational r(a[i + 1], a[0]);
            r.canonicalize();
            if (r != exact[i]) return fail("product does not reproduce case " + std::to_string(t));
        }
    }
    const double s = seconds_since(t0);
    if (s >= kJPTerminationSeconds) return fail("too slow: " + fmt_seconds(s));
    return {true, "500 vectors, longest " + std::to_string(longest) + " digits, " + fmt_seconds(s)};
}

Outcome n2_degeneration() {
    Rng rng(1003);
    for (int t = 0; t < 500; ++t) {
        const RealScalar x(random_rational(rng, 1000000, 1000000, true));
        const JPExpansion e = jp_expand({x}, 50);
        const CFExpansion c = cf_expand(x, 50);
        if (e.digits.size() != c.digits.size()) return fail("length mismatch for " + x.to_string());
        for (std::size_t k = 0; k < c.digits.size(); ++k)
            if (e.digits[k][0] != c.digits[k]) return fail("digit mismatch for " + x.to_string());
    }
    for (int t = 0; t < 50; ++t) {
        const QuadSurd s = random_surd(rng, 500);
        const JPExpansion e = jp_expand({s.scalar()}, 50);
        const CFExpansion c = cf_expand(s.scalar(), 50);
        const std::vector<BigInt> oracle = surd_cf_oracle(s, 50);
        if (e.digits.size() != 50 || c.digits != oracle) return fail("surd expansion mismatch");
        for (std::size_t k = 0; k < 50; ++k)
            if (e.digits[k][0] != c.digits[k]) return fail("surd digit mismatch");
    }
    return {true, "500 rationals and 50 surds to depth 50"};
}

Outcome perron_convergence() {
    const auto t0 = Clock::now();
    Rng rng(1004);
    BigRational worst = 0;
    for (int t = 0; t < 100; ++t) {
        const JPExpansion e = JPExpansion::from_digits(3, random_admissible_digits(rng, 60, 5));
        if (!e.admissible) return fail("generator produced inadmissible digits");
        const JPLimitReport r = jp_limit_check(e, nullptr, 60, kPerronGap);
        if (!r.cauchy_gap || *r.cauchy_gap >= kPerronGap) return fail("gap too large in case " + std::to_string(t));
        worst = std::max(worst, *r.cauchy_gap);
    }
    const double s = seconds_since(t0);
    if (s >= kPerronSeconds) return fail("too slow: " + fmt_seconds(s));
    return {true, "worst gap " + decimal(worst, 3) + ", " + fmt_seconds(s)};
}

Outcome effros_shen_divergence() {
    const JPExpansion doubling = JPExpansion::from_digits(3, doubling_digits(40));
    // Sum over k > 40 of 2^-(k+1) is exactly 2^-41.
    const ESDivergenceReport es = effros_shen_divergent(doubling, pow2(-41));
    if (!es.pattern_ok || !es.certified_divergent) return fail("not certified divergent");
    if (es.partial_sum + *es.tail_bound != BigRational(1, 2)) return fail("sum is not 1/2");
    const JPLimitReport r = jp_limit_check(doubling, nullptr, 40, kCauchyTol);
    if (r.converged || !r.cauchy_gap || *r.cauchy_gap < kCauchyTol) return fail("passes the Cauchy test");
    if (decimal(*r.cauchy_gap, 12) != kDoublingGap40) return fail("gap drifted: " + decimal(*r.cauchy_gap, 12));

    Rng rng(1005);
    for (int t = 0; t < 50; ++t) {
        const JPExpansion c = JPExpansion::from_digits(3, random_admissible_digits(rng, 40, 5));
        if (!perron_condition(c, 6).holds) return fail("control does not satisfy Perron's condition");
        if (!jp_limit_check(c, nullptr, 40, kCauchyTol).converged) return fail("Perron control fails the Cauchy test");
    }
    return {true, "sum 1/2, gap " + decimal(*r.cauchy_gap, 6) + " at depth 40, 50 controls pass"};
}

Outcome module_invariance() {
    const auto t0 = Clock::now();
    Rng rng(1006);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        const PseudoLattice pl = random_sextic_lattice(rng, n);
        const MappingClassElement m(random_nonneg_unimodular(rng, n));
        if (!module_equal(pl, basis_change(pl, m))) return fail("basis change altered the module in case " + std::to_string(t));
        std::vector<RealScalar> doubled = pl.lambda();
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        doubled[i] = doubled[i] * RealScalar(2);
        if (module_equal(pl, PseudoLattice(doubled))) return fail("index-2 control judged equal in case " + std::to_string(t));
    }
    const double s = seconds_since(t0);
    if (s >= kModuleSeconds) return fail("too slow: " + fmt_seconds(s));
    return {true, "500 basis changes, 500 controls, " + fmt_seconds(s)};
}

Outcome scaling_kernel() {
    Rng rng(1007);
    for (int t = 0; t < 200; ++t) {
        const PseudoLattice pl = random_sextic_lattice(rng, static_cast<std::size_t>(rng.uniform(2, 6)));
        const RealScalar c(random_rational(rng, 1000000, 1000000, true));
        std::vector<RealScalar> scaled;
        for (const RealScalar& x : pl.lambda()) scaled.push_back(c * x);
        const auto a = projectivize(PseudoLattice(scaled)).theta, b = projectivize(pl).theta;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!exactly_equal(a[i], b[i])) return fail("scaling changed theta in case " + std::to_string(t));
    }
    return {true, "200 positive rational scalings"};
}

Outcome observation() {
    Rng rng(1008);
    std::size_t widest = 0;
    for (int t = 0; t < 200; ++t) {
        const QuadSurd s = random_surd(rng, 200, rng.coin());
        const TailReport r = observation_check(s.scalar(), random_sl2(rng, 10), kTailDepth, kTailOffset);
        if (!r.equivalent || !r.proven) return fail("equivalent pair not proven in case " + std::to_string(t));
        widest = std::max({widest, r.offsets->first, r.offsets->second});
    }
    for (int t = 0; t < 100; ++t) {
        const QuadSurd a = random_surd(rng, 200, rng.coin());
        QuadSurd b = random_surd(rng, 200, rng.coin());
        // Different square classes of D put the two surds in different fields.
        auto squarefree = [](long d) {
            for (long p = 2; p * p <= d; ++p)
                while (d % (p * p) == 0) d /= p * p;
            return d;
        };
        while (squarefree(b.d.get_si()) == squarefree(a.d.get_si())) b = random_surd(rng, 200, rng.coin());
        const TailReport r = cf_tail_equivalent(a.scalar(), b.scalar(), kTailDepth, kTailOffset);
        if (r.equivalent) return fail("inequivalent pair judged equivalent in case " + std::to_string(t));
    }
    return {true, "200 SL2(Z) images proven, widest offset " + std::to_string(widest) + ", 100 inequivalent pairs"};
}

Outcome continuant_identity() {
    Rng rng(1009);
    for (int t = 0; t < 200; ++t) {
        const RealScalar x = t % 4 == 0 ? random_surd(rng, 500).scalar() : RealScalar(random_rational(rng, 1000000000, 1000, true));
        const CFExpansion e = cf_expand(x, 30);
        const BratteliDiagram d = effros_shen_diagram(e, 30);
        std::vector<BigInt> a{BigInt(1)};
        a.insert(a.end(), e.digits.begin(), e.digits.end());
        const std::vector<BigInt> q = continuant_denominators(a);
        const auto dims = dimension_vectors(d, d.levels());
        for (std::size_t k = 0; k < dims.size(); ++k)
            if (dims[k] != IntVector{q[k], q[k + 1]}) return fail("level " + std::to_string(k) + " differs for " + x.to_string());
    }
    return {true, "200 expansions, levels <= 30"};
}

Outcome unique_trace_dichotomy() {
    std::vector<std::pair<std::string, BratteliDiagram>> fixtures;
    const FieldPtr gold = RealNumberField::create(parse_polynomial("x^2-x-1"), 1, 2);
    fixtures.emplace_back("golden", effros_shen_diagram(cf_expand(RealScalar(NumberFieldElement::generator(gold)), 50), 50));
    const FieldPtr cube = RealNumberField::create(parse_polynomial("x^3-2"), 1, 2);
    const NumberFieldElement c = NumberFieldElement::generator(cube);
    fixtures.emplace_back("cubic", diagram_from_digits(jp_expand({RealScalar(c * c), RealScalar(c)}, 50)));
    Rng rng(1010);
    for (int t = 0; t < 20; ++t)
        fixtures.emplace_back("perron", diagram_from_digits(JPExpansion::from_digits(3, random_admissible_digits(rng, 50, 5))));
    BigRational worst = 0;
    for (const auto& [name, d] : fixtures) {
        const BigRational diam = unique_trace_estimate(d, 50, 64).diameter_exact;
        if (diam >= kConvergedDiameter) return fail(name + " diameter " + decimal(diam, 3));
        worst = std::max(worst, diam);
    }
    const BratteliDiagram doubling = diagram_from_digits(JPExpansion::from_digits(3, doubling_digits(40)));
    const BigRational diam = unique_trace_estimate(doubling, 40, 64).diameter_exact;
    if (diam <= kDivergentDiameter) return fail("divergent fixture contracted to " + decimal(diam, 3));
    if (decimal(diam, 12) != kDoublingDiameter40) return fail("divergent diameter drifted: " + decimal(diam, 12));
    return {true, "convergent worst " + decimal(worst, 3) + ", divergent " + decimal(diam, 6)};
}

Outcome functor_covariance() {
    Rng rng(1011);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        const PseudoLattice pl = random_sextic_lattice(rng, n);
        const MappingClassElement a(random_nonneg_unimodular(rng, n)), b(random_nonneg_unimodular(rng, n));
        if (!functor_covariance_check(pl, a, b)) return fail("covariance fails in case " + std::to_string(t));
    }
    return {true, "200 composable pairs"};
}

Outcome determinism() {
    const auto cases = golden_cases();
    for (const GoldenCase& c : cases) {
        const Transcript a = run_case(c), b = run_case(c);
        if (a.text != b.text) return fail(c.name + " differs between runs");
        if (a.exit_code != c.exit_code) return fail(c.name + " exit " + std::to_string(a.exit_code));
        if (a.text != read_text(golden_path(c))) return fail(c.name + " differs from its golden file");
    }
    return {true, std::to_string(cases.size()) + " golden transcripts"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"rational round-trip", rational_round_trip},
        {"JP rational termination", jp_rational_termination},
        {"n = 2 degeneration", n2_degeneration},
        {"Perron convergence", perron_convergence},
        {"Effros-Shen divergence", effros_shen_divergence},
        {"module invariance", module_invariance},
        {"scaling kernel", scaling_kernel},
        {"tail equivalence under SL2(Z)", observation},
        {"continuant identity", continuant_identity},
        {"unique-trace dichotomy", unique_trace_dichotomy},
        {"functor covariance", functor_covariance},
        {"CLI determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
                  << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
