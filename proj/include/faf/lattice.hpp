#pragma once

#include <optional>
#include <vector>

#include "faf/bratteli.hpp"
#include "faf/contfrac.hpp"
#include "faf/int_matrix.hpp"
#include "faf/jacobi_perron.hpp"
#include "faf/real_scalar.hpp"

namespace faf {

/// 2 for g = 1, 6g - 6 for g >= 2. DomainError for g < 1.
std::size_t genus_dimension(long g);

/// Positive periods (lambda_1, ..., lambda_n).
class PseudoLattice {
public:
    /// Throws DomainError for an empty vector, NonpositivePeriod for an entry <= 0.
    explicit PseudoLattice(std::vector<RealScalar> lambda);

    std::size_t n() const { return lambda_.size(); }
    const std::vector<RealScalar>& lambda() const { return lambda_; }

private:
    std::vector<RealScalar> lambda_;
};

/// (1, theta_1, ..., theta_{n-1}); only the thetas are stored.
struct ProjectivePseudoLattice {
    std::vector<RealScalar> theta;
    std::size_t n() const { return theta.size() + 1; }
};

/// Element of GL_n(Z).
class MappingClassElement {
public:
    /// Throws DomainError unless m is square with determinant +-1.
    explicit MappingClassElement(IntMatrix m);

    std::size_t n() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }

    friend MappingClassElement operator*(const MappingClassElement& a, const MappingClassElement& b) {
        return MappingClassElement(a.m_ * b.m_);
    }

private:
    IntMatrix m_;
};

/// lambda'_j = sum_i a_ij lambda_i. NonpositivePeriod if some lambda'_j <= 0.
/// This is a right action: basis_change(basis_change(pl, a), b) = basis_change(pl, a * b).
PseudoLattice basis_change(const PseudoLattice& pl, const MappingClassElement& phi);

/// Decides Z lambda_1 + ... + Z lambda_n = Z lambda'_1 + ... + Z lambda'_m for
/// exact entries of one number field, by comparing Hermite normal forms of the
/// coordinate rows over a common denominator. DomainError for interval entries,
/// IncompatibleFields for entries of different fields.
bool module_equal(const PseudoLattice& a, const PseudoLattice& b);

/// theta_i = lambda_{i+1} / lambda_1.
ProjectivePseudoLattice projectivize(const PseudoLattice& pl);

/// Inverse of (projectivize, lambda_1): lambda = lambda_1 * (1, theta).
PseudoLattice lift(const ProjectivePseudoLattice& ppl, const RealScalar& lambda1);

struct FunctorBundle {
    ProjectivePseudoLattice ppl;
    JPExpansion expansion;
    BratteliDiagram diagram;
    ConvergenceCertificate convergence;
    /// Set only when the convergence certificate supports the toric label.
    bool toric = false;
};

/// projectivize -> jp_expand -> jp_limit_check -> diagram. The diagram is built
/// from the digits either way; `toric` reports whether toric_diagram accepted it.
FunctorBundle functor_map(const PseudoLattice& pl, long genus, std::size_t depth, const BigRational& tol,
                          unsigned precision = 128);

/// basis_change(basis_change(pl, phi1), phi2) == basis_change(pl, phi1 * phi2)
/// entrywise, and all three lattices generate the same module.
bool functor_covariance_check(const PseudoLattice& pl, const MappingClassElement& phi1,
                              const MappingClassElement& phi2);

/// theta' = (a theta + b)/(c theta + d) for det = 1, then tail equivalence of
/// theta and theta'. Throws DomainError unless det(m) = 1.
TailReport observation_check(const RealScalar& theta, const Mat2Z& m, std::size_t depth,
                             std::size_t max_offset = 40);

}  // namespace faf
