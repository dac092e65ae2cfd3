#include "faf/lattice.hpp"

#include "faf/errors.hpp"

namespace faf {

std::size_t genus_dimension(long g) {
    if (g < 1) throw DomainError("genus must be at least 1");
    return g == 1 ? 2 : static_cast<std::size_t>(6 * g - 6);
}

PseudoLattice::PseudoLattice(std::vector<RealScalar> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw DomainError("a pseudo-lattice needs at least one period");
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        if (sign(lambda_[i]) <= 0) throw NonpositivePeriod("lambda_" + std::to_string(i + 1) + " is not positive");
}

MappingClassElement::MappingClassElement(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DomainError("mapping class matrix must be square");
    if (!m_.is_unimodular()) throw DomainError("mapping class matrix must have determinant +-1");
}

PseudoLattice basis_change(const PseudoLattice& pl, const MappingClassElement& phi) {
    const std::size_t n = pl.n();
    if (phi.n() != n) throw DimensionMismatch("matrix size does not match the lattice rank");
    std::vector<RealScalar> out;
    for (std::size_t j = 0; j < n; ++j) {
        RealScalar s(0);
        for (std::size_t i = 0; i < n; ++i) {
            const BigInt& a = phi.matrix()(i, j);
            if (a != 0) s = s + RealScalar(a) * pl.lambda()[i];
        }
        if (sign(s) <= 0) throw NonpositivePeriod("lambda'_" + std::to_string(j + 1) + " is not positive");
        out.push_back(std::move(s));
    }
    return PseudoLattice(std::move(out));
}

namespace {

std::vector<std::vector<BigRational>> coordinate_rows(const std::vector<RealScalar>& xs) {
    std::size_t degree = 1;
    for (const RealScalar& x : xs) {
        if (!x.is_exact()) throw DomainError("module equality needs exact entries");
        if (const NumberFieldElement* a = x.as_algebraic()) degree = a->coords().size();
    }
    std::vector<std::vector<BigRational>> rows;
    for (const RealScalar& x : xs) {
        std::vector<BigRational> row(degree, BigRational(0));
        if (const NumberFieldElement* a = x.as_algebraic())
            row = a->coords();
        else
            row[0] = *x.as_rational();
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix scaled(const std::vector<std::vector<BigRational>>& rows, std::size_t first, std::size_t count,
                 const BigInt& denom) {
    const std::size_t d = rows[0].size();
    IntMatrix m(count, d);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            BigRational v = rows[first + r][c] * denom;
            m(r, c) = v.get_num();
        }
    return m;
}

}  // namespace

bool module_equal(const PseudoLattice& a, const PseudoLattice& b) {
    std::vector<RealScalar> all = a.lambda();
    all.insert(all.end(), b.lambda().begin(), b.lambda().end());
    const auto rows = coordinate_rows(unify_fields(all));

    BigInt denom = 1;
    for (const auto& row : rows)
        for (const BigRational& q : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());

    return hermite_normal_form(scaled(rows, 0, a.n(), denom)) == hermite_normal_form(scaled(rows, a.n(), b.n(), denom));
}

ProjectivePseudoLattice projectivize(const PseudoLattice& pl) {
    ProjectivePseudoLattice p;
    for (std::size_t i = 1; i < pl.n(); ++i) p.theta.push_back(pl.lambda()[i] / pl.lambda()[0]);
    return p;
}

PseudoLattice lift(const ProjectivePseudoLattice& ppl, const RealScalar& lambda1) {
    std::vector<RealScalar> lambda{lambda1};
    for (const RealScalar& t : ppl.theta) lambda.push_back(lambda1 * t);
    return PseudoLattice(std::move(lambda));
}

FunctorBundle functor_map(const PseudoLattice& pl, long genus, std::size_t depth, const BigRational& tol,
                          unsigned precision) {
    const std::size_t n = genus_dimension(genus);
    if (pl.n() != n)
        throw DimensionMismatch("genus " + std::to_string(genus) + " needs " + std::to_string(n) + " periods, got " +
                                std::to_string(pl.n()));
    ProjectivePseudoLattice ppl = projectivize(pl);
    JPExpansion e = jp_expand(ppl.theta, depth);
    std::optional<JPLimitReport> limit;
    if (!e.digits.empty()) limit = jp_limit_check(e, &ppl.theta, e.digits.size(), tol, precision);
    ConvergenceCertificate cert = certify_convergence(e, limit);
    BratteliDiagram diagram = diagram_from_digits(e);
    bool toric = false;
    if (cert.supports_toric()) {
        diagram = toric_diagram(e, genus, cert);
        toric = true;
    }
    return FunctorBundle{std::move(ppl), std::move(e), std::move(diagram), std::move(cert), toric};
}

bool functor_covariance_check(const PseudoLattice& pl, const MappingClassElement& phi1,
                              const MappingClassElement& phi2) {
    const PseudoLattice stepwise = basis_change(basis_change(pl, phi1), phi2);
    const PseudoLattice composed = basis_change(pl, phi1 * phi2);
    for (std::size_t i = 0; i < pl.n(); ++i)
        if (!exactly_equal(stepwise.lambda()[i], composed.lambda()[i])) return false;
    return module_equal(pl, stepwise) && module_equal(pl, composed) && module_equal(stepwise, composed);
}

TailReport observation_check(const RealScalar& theta, const Mat2Z& m, std::size_t depth, std::size_t max_offset) {
    if (m.determinant() != 1) throw DomainError("the Observation needs a matrix of determinant 1");
    return cf_tail_equivalent(theta, mobius_apply(m, theta), depth, max_offset);
}

}  // namespace faf
