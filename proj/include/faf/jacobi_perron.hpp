#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "faf/contfrac.hpp"
#include "faf/int_matrix.hpp"
#include "faf/interval.hpp"
#include "faf/rational.hpp"
#include "faf/real_scalar.hpp"

namespace faf {

/// One Jacobi-Perron digit (b_1, ..., b_{n-1}), entries >= 0.
using JPDigit = std::vector<BigInt>;

struct JPExpansion {
    std::size_t n = 2;
    std::vector<JPDigit> digits;
    bool terminated = false;
    /// 0 <= b_i <= b_{n-1} and b_{n-1} >= 1 for every digit after the first.
    bool admissible = true;
    std::optional<Periodicity> period;
    std::vector<RealScalar> source;

    std::size_t depth() const { return digits.size(); }

    /// Wraps an externally supplied digit sequence. Throws DimensionMismatch on a
    /// digit of the wrong length and DomainError on a negative entry.
    static JPExpansion from_digits(std::size_t n, std::vector<JPDigit> digits, bool terminated = false);
};

bool digit_admissible(const JPDigit& d, bool first);

struct JPStep {
    JPDigit digit;
    std::optional<std::vector<RealScalar>> next;  ///< absent once terminated
    bool terminated = false;
    /// theta_1 was integral while some other remainder was not; the affine
    /// step cannot continue (jp_expand handles this case homogeneously).
    bool degenerate = false;
};

/// b_i = floor(theta_i), theta' = ((theta_2 - b_2)/(theta_1 - b_1), ..., 1/(theta_1 - b_1)).
JPStep jp_step(const std::vector<RealScalar>& theta);

/// Iterates the Jacobi-Perron map on (1, theta) for up to `depth` digits.
///
/// When theta_1 becomes integral with other remainders nonzero, the iteration
/// continues on the homogeneous vector: a zero pivot contributes the digit 0
/// and rotates the vector, so every rational input terminates and the digit
/// product still reproduces (1, theta). Such expansions are not admissible.
/// Exact algebraic input records periodicity once a remainder vector repeats.
/// Requires every theta_i >= 0.
JPExpansion jp_expand(const std::vector<RealScalar>& theta, std::size_t depth);

/// First row (0, ..., 0, 1), identity in rows 2..n x columns 1..n-1, last
/// column (1, b_1, ..., b_{n-1}).
IntMatrix jp_digit_matrix(const JPDigit& d, std::size_t n);

/// Columns A^(nu), ..., A^(nu+n-1) after nu digits.
struct JPConvergentState {
    std::size_t nu = 0;
    IntMatrix columns;

    /// A^(nu+n-1): the last column, the one acting on (0, ..., 0, 1).
    IntVector convergent() const { return columns.column(columns.cols() - 1); }
    /// A_i / A_0 for i = 1..n-1; throws DomainError when A_0 = 0.
    std::vector<BigRational> ratios() const;
};

/// States nu = 0..upto, computed by the digit-matrix product and by the
/// recurrence A^(nu+n) = A^(nu) + sum_j b_j A^(nu+j). Any disagreement raises
/// ConsistencyFault.
std::vector<JPConvergentState> jp_convergents(const JPExpansion& e, std::size_t upto);

struct JPLimitReport {
    std::size_t depth = 0;
    BigRational tol;
    /// max_i |A_i^(k)/A_0^(k) - A_i^(k-1)/A_0^(k-1)|; absent for k = 1 or a vanishing A_0^(k-1).
    std::optional<BigRational> cauchy_gap;
    /// Enclosure of max_i |A_i^(k)/A_0^(k) - theta_i|, when theta was supplied.
    std::optional<IntervalReal> error;
    bool exact = false;  ///< terminated expansion read to its end: error is exactly 0
    bool converged = false;
};

/// Convergence diagnostic at k = depth. converged requires the Cauchy gap and,
/// if theta is given, the certified error bound to be below tol. Throws
/// ConsistencyFault if A_0^(k) = 0.
JPLimitReport jp_limit_check(const JPExpansion& e, const std::vector<RealScalar>* theta, std::size_t depth,
                             const BigRational& tol, unsigned precision = 128);

struct PerronReport {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;  ///< (k, i), both 1-based
};

/// For every k and i = 1..n-1: b_{n-1} >= 1, 1/b_{n-1} <= C and b_i/b_{n-1} < C.
PerronReport perron_condition(const JPExpansion& e, const BigRational& C);

struct ESDivergenceReport {
    bool pattern_ok = false;
    BigRational partial_sum;
    std::optional<BigRational> tail_bound;
    bool certified_divergent = false;
};

/// Sum of 1/beta_k over the prefix; divergence is certified only with a tail
/// bound and prefix sum + tail bound < 1.
ESDivergenceReport effros_shen_divergent(const std::vector<BigInt>& beta,
                                         const std::optional<BigRational>& tail_bound);
/// Same test on an n = 3 expansion whose digits must have the shape (beta_k, 0).
ESDivergenceReport effros_shen_divergent(const JPExpansion& e, const std::optional<BigRational>& tail_bound);

enum class CertificateKind { none, terminated, periodic, horizon, divergent };

struct ConvergenceCertificate {
    CertificateKind kind = CertificateKind::none;
    std::optional<JPLimitReport> limit;

    bool supports_toric() const {
        return kind == CertificateKind::terminated || kind == CertificateKind::periodic ||
               kind == CertificateKind::horizon;
    }
};

const char* to_string(CertificateKind kind);

/// divergent (certified Effros-Shen pattern) > terminated > periodic >
/// horizon (limit report converged) > none.
ConvergenceCertificate certify_convergence(const JPExpansion& e, const std::optional<JPLimitReport>& limit,
                                           const std::optional<BigRational>& es_tail_bound = std::nullopt);

}  // namespace faf
