#include <doctest.h>

#include "faf/errors.hpp"
#include "faf/jacobi_perron.hpp"
#include "faf/polynomial.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace faf;
using namespace faf::testing;

namespace {

JPDigit digit(std::initializer_list<long> xs) {
    JPDigit d;
    for (long x : xs) d.emplace_back(x);
    return d;
}

RealScalar q(long p, long r = 1) { return RealScalar(BigRational(p, r)); }

// sqrt 2 and sqrt 3 inside Q(a), a = sqrt 2 + sqrt 3.
struct Biquadratic {
    FieldPtr f = RealNumberField::create(parse_polynomial("x^4-10*x^2+1"), 3, 4);
    NumberFieldElement a = NumberFieldElement::generator(f);
    NumberFieldElement s2 = NumberFieldElement(f, {0, BigRational(-9, 2), 0, BigRational(1, 2)});
    NumberFieldElement s3 = NumberFieldElement(f, {0, BigRational(11, 2), 0, BigRational(-1, 2)});
};

std::vector<BigRational> last_column_ratios(const JPExpansion& e) {
    std::vector<std::vector<BigInt>> p(e.n, std::vector<BigInt>(e.n, BigInt(0)));
    for (std::size_t i = 0; i < e.n; ++i) p[i][i] = 1;
    for (const JPDigit& d : e.digits) {
        std::vector<std::vector<BigInt>> m(e.n, std::vector<BigInt>(e.n, BigInt(0)));
        m[0][e.n - 1] = 1;
        for (std::size_t i = 1; i < e.n; ++i) {
            m[i][i - 1] = 1;
            m[i][e.n - 1] = d[i - 1];
        }
        p = naive_mul(p, m);
    }
    std::vector<BigRational> out;
    for (std::size_t i = 1; i < e.n; ++i) {
        BigRational r(p[i][e.n - 1], p[0][e.n - 1]);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("jp_step examples") {
    const JPStep a = jp_step({q(7, 3), q(5, 3)});
    CHECK(a.digit == digit({2, 1}));
    REQUIRE(a.next);
    CHECK(exactly_equal((*a.next)[0], q(2)));
    CHECK(exactly_equal((*a.next)[1], q(3)));
    CHECK_FALSE(a.terminated);

    const JPStep b = jp_step({q(2), q(5)});
    CHECK(b.digit == digit({2, 5}));
    CHECK(b.terminated);
    CHECK_FALSE(b.degenerate);
    CHECK_FALSE(b.next);

    const JPStep c = jp_step({q(2), q(5, 2)});
    CHECK(c.terminated);
    CHECK(c.degenerate);

    CHECK_THROWS_AS(jp_step({}), DimensionMismatch);
}

TEST_CASE("jp_step on (sqrt 2, sqrt 3)") {
    const Biquadratic k;
    CHECK(k.s2 * k.s2 == NumberFieldElement::constant(k.f, 2));
    CHECK(k.s3 * k.s3 == NumberFieldElement::constant(k.f, 3));
    const JPStep s = jp_step({RealScalar(k.s2), RealScalar(k.s3)});
    CHECK(s.digit == digit({1, 1}));
    REQUIRE(s.next);
    // 1/(sqrt 2 - 1) = sqrt 2 + 1, so both entries are products in the field.
    const NumberFieldElement one = NumberFieldElement::constant(k.f, 1);
    CHECK(exactly_equal((*s.next)[0], RealScalar((k.s3 - one) * (k.s2 + one))));
    CHECK(exactly_equal((*s.next)[1], RealScalar(k.s2 + one)));
}

TEST_CASE("jp_expand examples") {
    const JPExpansion a = jp_expand({q(7, 3)}, 50);
    CHECK(a.digits == std::vector<JPDigit>{digit({2}), digit({3})});
    CHECK(a.terminated);

    const JPExpansion b = jp_expand({q(7, 3), q(5, 3)}, 50);
    CHECK(b.digits == std::vector<JPDigit>{digit({2, 1}), digit({2, 3})});
    CHECK(b.terminated);
    CHECK(b.admissible);

    CHECK_THROWS_AS(jp_expand({q(-1, 2)}, 5), DomainError);
    CHECK_THROWS_AS(jp_expand({}, 5), DimensionMismatch);
}

TEST_CASE("degenerate rational vectors still terminate and reproduce") {
    const JPExpansion e = jp_expand({q(2), q(5, 2)}, 50);
    CHECK(e.terminated);
    CHECK_FALSE(e.admissible);
    CHECK(last_column_ratios(e) == std::vector<BigRational>{BigRational(2), BigRational(5, 2)});
}

TEST_CASE("cubic vector is eventually periodic") {
    const FieldPtr f = RealNumberField::create(parse_polynomial("x^3-2"), 1, 2);
    const NumberFieldElement c = NumberFieldElement::generator(f);
    const std::vector<RealScalar> theta{RealScalar(c * c), RealScalar(c)};
    const JPExpansion e = jp_expand(theta, 100);
    REQUIRE(e.period);
    CHECK(e.digits.size() == 100);
    CHECK(e.admissible);

    // Oracle: iterate the affine step without any cycle bookkeeping and compare
    // the remainder vectors at the claimed cycle ends.
    std::vector<std::vector<RealScalar>> states{theta};
    for (std::size_t k = 0; k < e.period->preperiod + e.period->length; ++k) {
        const JPStep s = jp_step(states.back());
        REQUIRE(s.digit == e.digits[k]);
        REQUIRE(s.next);
        states.push_back(*s.next);
    }
    const auto& x = states[e.period->preperiod];
    const auto& y = states[e.period->preperiod + e.period->length];
    for (std::size_t i = 0; i < 2; ++i) CHECK(exactly_equal(x[i], y[i]));
    for (std::size_t k = e.period->preperiod; k + e.period->length < 100; ++k)
        CHECK(e.digits[k] == e.digits[k + e.period->length]);
}

TEST_CASE("interval input reports the failing step") {
    const RealScalar t = IntervalReal(BigRational(14142, 10000), BigRational(14143, 10000), 64);
    try {
        jp_expand({t}, 40);
        FAIL("expected Indeterminate");
    } catch (const Indeterminate& e) {
        REQUIRE(e.step());
        CHECK(*e.step() >= 2);
    }
}

TEST_CASE("jp_digit_matrix examples") {
    CHECK(jp_digit_matrix(digit({5}), 2) == IntMatrix{{0, 1}, {1, 5}});
    CHECK(jp_digit_matrix(digit({7, 0}), 3) == IntMatrix{{0, 0, 1}, {1, 0, 7}, {0, 1, 0}});
    for (std::size_t n = 2; n <= 7; ++n) {
        const IntMatrix m = jp_digit_matrix(JPDigit(n - 1, BigInt(0)), n);
        CHECK(abs(BigRational(m.determinant())) == 1);
    }
    CHECK_THROWS_AS(jp_digit_matrix(digit({1, 2}), 2), DimensionMismatch);
}

TEST_CASE("jp_convergents examples") {
    const JPExpansion ones = JPExpansion::from_digits(3, std::vector<JPDigit>(4, digit({1, 1})));
    const auto states = jp_convergents(ones, 4);
    CHECK(states[0].columns == IntMatrix::identity(3));
    std::vector<std::vector<BigInt>> p{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::vector<std::vector<BigInt>> m{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
    for (std::size_t k = 1; k <= 4; ++k) {
        p = naive_mul(p, m);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(states[k].columns(i, j) == p[i][j]);
    }
    // A_0 of the last column runs through the Tribonacci numbers 1, 1, 2, 4.
    CHECK(states[1].convergent()[0] == 1);
    CHECK(states[2].convergent()[0] == 1);
    CHECK(states[3].convergent()[0] == 2);
    CHECK(states[4].convergent()[0] == 4);

    const JPExpansion two = JPExpansion::from_digits(2, {digit({2}), digit({3})});
    const auto s2 = jp_convergents(two, 2);
    CHECK(s2[1].ratios() == std::vector<BigRational>{BigRational(2)});
    CHECK(s2[2].ratios() == std::vector<BigRational>{BigRational(7, 3)});
    CHECK_THROWS_AS(jp_convergents(two, 3), DomainError);
}

TEST_CASE("jp_limit_check examples") {
    const FieldPtr f = RealNumberField::create(parse_polynomial("x^2-x-1"), 1, 2);
    const std::vector<RealScalar> phi{RealScalar(NumberFieldElement::generator(f))};
    const JPExpansion g = jp_expand(phi, 30);
    const JPLimitReport r = jp_limit_check(g, &phi, 30, BigRational(1, 10000000000));
    CHECK(r.converged);
    CHECK(r.error->hi() < BigRational(1, 10000000000));

    const JPExpansion doubling = JPExpansion::from_digits(3, doubling_digits(40));
    const JPLimitReport d = jp_limit_check(doubling, nullptr, 40, BigRational(1, 10000));
    CHECK_FALSE(d.converged);
    REQUIRE(d.cauchy_gap);
    CHECK(*d.cauchy_gap > BigRational(1, 10000));

    const std::vector<RealScalar> th{q(7, 3), q(5, 3)};
    const JPExpansion t = jp_expand(th, 50);
    const JPLimitReport x = jp_limit_check(t, &th, t.digits.size(), BigRational(1, 10000000000));
    CHECK(x.exact);
    CHECK(x.converged);
    CHECK(x.error->hi() == 0);

    CHECK_THROWS_AS(jp_limit_check(t, &th, 3, BigRational(1, 10)), DomainError);
}

TEST_CASE("perron_condition examples") {
    const JPExpansion ones = JPExpansion::from_digits(3, std::vector<JPDigit>(5, digit({1, 1})));
    const PerronReport a = perron_condition(ones, 1);
    CHECK_FALSE(a.holds);
    CHECK(*a.first_violation == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK(perron_condition(ones, BigRational(3, 2)).holds);

    const PerronReport b = perron_condition(JPExpansion::from_digits(3, doubling_digits(5)), 100);
    CHECK_FALSE(b.holds);
    CHECK(*b.first_violation == std::make_pair(std::size_t{1}, std::size_t{2}));

    CHECK(perron_condition(JPExpansion::from_digits(3, {}), 1).holds);
}

TEST_CASE("effros_shen_divergent examples") {
    const JPExpansion ten = JPExpansion::from_digits(3, doubling_digits(10));
    const ESDivergenceReport a = effros_shen_divergent(ten, pow2(-10));
    CHECK(a.pattern_ok);
    CHECK(a.partial_sum == BigRational(1, 2) - pow2(-11));
    CHECK(a.certified_divergent);
    CHECK_FALSE(effros_shen_divergent(ten, std::nullopt).certified_divergent);

    const ESDivergenceReport b = effros_shen_divergent(std::vector<BigInt>(5, BigInt(1)), BigRational(0));
    CHECK(b.partial_sum == 5);
    CHECK_FALSE(b.certified_divergent);

    std::vector<BigInt> squares;
    for (long k = 1; k <= 50; ++k) squares.emplace_back((k + 1) * (k + 1));
    const ESDivergenceReport c = effros_shen_divergent(squares, BigRational(1, 51));
    CHECK(c.certified_divergent);
    CHECK(c.partial_sum > BigRational(62, 100));
    CHECK(c.partial_sum < BigRational(63, 100));

    const JPExpansion ones = JPExpansion::from_digits(3, std::vector<JPDigit>(3, digit({1, 1})));
    CHECK_FALSE(effros_shen_divergent(ones, BigRational(0)).pattern_ok);
}

TEST_CASE("certify_convergence precedence") {
    const JPExpansion doubling = JPExpansion::from_digits(3, doubling_digits(40));
    CHECK(certify_convergence(doubling, std::nullopt, pow2(-41)).kind == CertificateKind::divergent);
    CHECK(certify_convergence(doubling, std::nullopt).kind == CertificateKind::none);
    CHECK(certify_convergence(jp_expand({q(7, 3), q(5, 3)}, 10), std::nullopt).kind == CertificateKind::terminated);
}

TEST_CASE("property: digit matrices and partial products are unimodular") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        std::vector<JPDigit> ds;
        for (int k = 0; k < 8; ++k) {
            JPDigit d;
            for (std::size_t i = 0; i + 1 < n; ++i) d.emplace_back(rng.uniform(0, 9));
            ds.push_back(d);
        }
        const auto states = jp_convergents(JPExpansion::from_digits(n, ds), ds.size());
        for (const auto& s : states) REQUIRE(s.columns.is_unimodular());
    }
}

TEST_CASE("property: rational vectors terminate and reproduce theta") {
    Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
        std::vector<RealScalar> theta;
        std::vector<BigRational> exact;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            exact.push_back(random_rational(rng, 10000, 10000, true));
            theta.emplace_back(exact.back());
        }
        const JPExpansion e = jp_expand(theta, 100000);
        REQUIRE(e.terminated);
        REQUIRE(last_column_ratios(e) == exact);
        REQUIRE(jp_convergents(e, e.digits.size()).back().ratios() == exact);
    }
}

TEST_CASE("property: n = 2 agrees with the regular continued fraction") {
    Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        const RealScalar x(random_rational(rng, 100000, 1000, true));
        const JPExpansion e = jp_expand({x}, 50);
        const CFExpansion c = cf_expand(x, 50);
        REQUIRE(e.digits.size() == c.digits.size());
        for (std::size_t k = 0; k < c.digits.size(); ++k) REQUIRE(e.digits[k][0] == c.digits[k]);
    }
    for (int t = 0; t < 20; ++t) {
        const QuadSurd s = random_surd(rng, 300);
        const JPExpansion e = jp_expand({s.scalar()}, 50);
        const std::vector<BigInt> oracle = surd_cf_oracle(s, 50);
        REQUIRE(e.digits.size() == 50);
        for (std::size_t k = 0; k < 50; ++k) REQUIRE(e.digits[k][0] == oracle[k]);
    }
}

TEST_CASE("property: Perron-admissible digits converge") {
    Rng rng(34);
    for (int t = 0; t < 30; ++t) {
        const JPExpansion e = JPExpansion::from_digits(3, random_admissible_digits(rng, 60));
        REQUIRE(perron_condition(e, 6).holds);
        const JPLimitReport r = jp_limit_check(e, nullptr, 60, BigRational(1, 100000000));
        REQUIRE(r.converged);
    }
}
