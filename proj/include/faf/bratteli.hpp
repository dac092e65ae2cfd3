#pragma once

#include <string>
#include <vector>

#include "faf/contfrac.hpp"
#include "faf/int_matrix.hpp"
#include "faf/interval.hpp"
#include "faf/jacobi_perron.hpp"

namespace faf {

/// Leveled multigraph: a root, then levels 1, 2, ... of n vertices each.
/// mu[k](i, j) edges join vertex i of level k+1 to vertex j of level k+2, so a
/// level-(k+2) vertex j collects sum_i mu[k](i, j) copies of its predecessors.
class BratteliDiagram {
public:
    /// Throws DomainError for non-square or negative matrices, or one with a
    /// zero row or zero column; DimensionMismatch for inconsistent sizes.
    BratteliDiagram(std::size_t n, IntVector root_edges, std::vector<IntMatrix> mu);

    std::size_t n() const { return n_; }
    std::size_t levels() const { return mu_.size(); }
    const IntVector& root_edges() const { return root_edges_; }
    const std::vector<IntMatrix>& mu() const { return mu_; }

    friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;

private:
    std::size_t n_;
    IntVector root_edges_;
    std::vector<IntMatrix> mu_;
};

/// n = 2, mu_k = (0 1; 1 a_{k-1}), root edges (1, 1). Uses min(depth, digits)
/// levels of a finite expansion; InsufficientDepth if an infinite one is too short.
BratteliDiagram effros_shen_diagram(const CFExpansion& cf, std::size_t depth);

/// mu_k = jp_digit_matrix(b^(k)), root edges all ones, no validity checks on the digits.
BratteliDiagram diagram_from_digits(const JPExpansion& e);

/// Toric AF-algebra diagram of genus g. DimensionMismatch unless e.n fits the
/// genus; NotToric unless the certificate supports convergence.
BratteliDiagram toric_diagram(const JPExpansion& e, long genus, const ConvergenceCertificate& cert);

/// dims_0 = root_edges, dims_{k+1} = mu_{k+1}^T dims_k.
std::vector<IntVector> dimension_vectors(const BratteliDiagram& d, std::size_t upto);

/// mu_1 mu_2 ... mu_k (identity for k = 0).
IntMatrix positive_cone_generators(const BratteliDiagram& d, std::size_t level);

struct DimensionGroupTelescope {
    std::size_t n = 0;
    std::vector<IntMatrix> cone_generators;  ///< levels 0..upto
    std::vector<IntVector> dims;             ///< dims_k = cone_generators[k]^T root_edges
};

DimensionGroupTelescope telescope(const BratteliDiagram& d, std::size_t upto);

struct TraceEstimate {
    std::size_t level = 0;
    std::vector<IntervalReal> state;  ///< center of the image simplex
    IntervalReal diameter;            ///< sup-metric diameter of the image simplex
    BigRational diameter_exact;
};

/// Image of the standard simplex under mu_1 ... mu_k: the sum-normalized
/// columns of the product. Reports the componentwise midpoint of their range
/// and the largest coordinate spread.
TraceEstimate unique_trace_estimate(const BratteliDiagram& d, std::size_t level, unsigned precision);

/// Deterministic graphviz text.
std::string export_dot(const BratteliDiagram& d);

}  // namespace faf
