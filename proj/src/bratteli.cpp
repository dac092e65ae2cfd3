#include "faf/bratteli.hpp"

#include <algorithm>
#include <sstream>

#include "faf/errors.hpp"
#include "faf/lattice.hpp"

namespace faf {

BratteliDiagram::BratteliDiagram(std::size_t n, IntVector root_edges, std::vector<IntMatrix> mu)
    : n_(n), root_edges_(std::move(root_edges)), mu_(std::move(mu)) {
    if (n_ == 0) throw DomainError("a Bratteli diagram needs at least one vertex per level");
    if (root_edges_.size() != n_) throw DimensionMismatch("root edge vector has the wrong length");
    for (const BigInt& r : root_edges_)
        if (r < 0) throw DomainError("negative root edge multiplicity");
    for (std::size_t k = 0; k < mu_.size(); ++k) {
        const IntMatrix& m = mu_[k];
        const std::string where = "multiplicity matrix " + std::to_string(k + 1);
        if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch(where + " is not " + std::to_string(n_) + "x" + std::to_string(n_));
        if (!m.is_nonnegative()) throw DomainError(where + " has a negative entry");
        for (std::size_t i = 0; i < n_; ++i) {
            bool row = false, col = false;
            for (std::size_t j = 0; j < n_; ++j) {
                row = row || m(i, j) != 0;
                col = col || m(j, i) != 0;
            }
            if (!row) throw DomainError(where + " has a zero row");
            if (!col) throw DomainError(where + " has a zero column");
        }
    }
}

BratteliDiagram effros_shen_diagram(const CFExpansion& cf, std::size_t depth) {
    if (!cf.finite && cf.digits.size() < depth)
        throw InsufficientDepth("expansion has " + std::to_string(cf.digits.size()) + " digits, need " +
                                std::to_string(depth));
    const std::size_t levels = std::min(depth, cf.digits.size());
    std::vector<IntMatrix> mu;
    for (std::size_t k = 0; k < levels; ++k) {
        const BigInt& a = cf.digits[k];
        if (a < 0) throw DomainError("negative continued fraction digit at position " + std::to_string(k + 1));
        IntMatrix m{{0, 1}, {1, 0}};
        m(1, 1) = a;
        mu.push_back(std::move(m));
    }
    return BratteliDiagram(2, IntVector(2, BigInt(1)), std::move(mu));
}

BratteliDiagram diagram_from_digits(const JPExpansion& e) {
    std::vector<IntMatrix> mu;
    for (const JPDigit& d : e.digits) mu.push_back(jp_digit_matrix(d, e.n));
    return BratteliDiagram(e.n, IntVector(e.n, BigInt(1)), std::move(mu));
}

BratteliDiagram toric_diagram(const JPExpansion& e, long genus, const ConvergenceCertificate& cert) {
    const std::size_t n = genus_dimension(genus);
    if (e.n != n)
        throw DimensionMismatch("genus " + std::to_string(genus) + " needs dimension " + std::to_string(n) +
                                ", expansion has " + std::to_string(e.n));
    if (cert.kind == CertificateKind::divergent)
        throw NotToric("the Jacobi-Perron fraction is certified divergent");
    if (!cert.supports_toric()) throw NotToric("no convergence certificate for the Jacobi-Perron fraction");
    return diagram_from_digits(e);
}

std::vector<IntVector> dimension_vectors(const BratteliDiagram& d, std::size_t upto) {
    if (upto > d.levels()) throw DomainError("dimension_vectors: level beyond the diagram");
    std::vector<IntVector> dims{d.root_edges()};
    for (std::size_t k = 0; k < upto; ++k) dims.push_back(d.mu()[k].transpose() * dims.back());
    return dims;
}

IntMatrix positive_cone_generators(const BratteliDiagram& d, std::size_t level) {
    if (level > d.levels()) throw DomainError("positive_cone_generators: level beyond the diagram");
    IntMatrix p = IntMatrix::identity(d.n());
    for (std::size_t k = 0; k < level; ++k) p = p * d.mu()[k];
    return p;
}

DimensionGroupTelescope telescope(const BratteliDiagram& d, std::size_t upto) {
    DimensionGroupTelescope t;
    t.n = d.n();
    t.dims = dimension_vectors(d, upto);
    IntMatrix p = IntMatrix::identity(d.n());
    t.cone_generators.push_back(p);
    for (std::size_t k = 0; k < upto; ++k) {
        p = p * d.mu()[k];
        t.cone_generators.push_back(p);
    }
    return t;
}

TraceEstimate unique_trace_estimate(const BratteliDiagram& d, std::size_t level, unsigned precision) {
    if (level < 1) throw DomainError("unique_trace_estimate needs level >= 1");
    const IntMatrix p = positive_cone_generators(d, level);
    const std::size_t n = d.n();

    std::vector<BigRational> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        const IntVector c = p.column(j);
        BigInt total = 0;
        for (const BigInt& x : c) total += x;
        if (total == 0) throw DomainError("zero column in the level-" + std::to_string(level) + " product");
        for (std::size_t i = 0; i < n; ++i) {
            BigRational q(c[i], total);
            q.canonicalize();
            if (j == 0 || q < lo[i]) lo[i] = q;
            if (j == 0 || q > hi[i]) hi[i] = q;
        }
    }

    TraceEstimate t{level, {}, IntervalReal::point(0, precision), 0};
    for (std::size_t i = 0; i < n; ++i) {
        t.state.push_back(IntervalReal::point((lo[i] + hi[i]) / 2, precision));
        t.diameter_exact = std::max(t.diameter_exact, BigRational(hi[i] - lo[i]));
    }
    t.diameter = IntervalReal::point(t.diameter_exact, precision);
    return t;
}

std::string export_dot(const BratteliDiagram& d) {
    std::ostringstream out;
    out << "digraph bratteli { rankdir=LR; node [shape=circle,label=\"\"]; r [shape=point];\n";
    const std::size_t levels = d.levels();
    if (levels >= 1) {
        auto vertex = [](std::size_t level, std::size_t i) {
            return "v" + std::to_string(level) + "_" + std::to_string(i + 1);
        };
        for (std::size_t l = 1; l <= levels + 1; ++l) {
            out << "  { rank=same;";
            for (std::size_t i = 0; i < d.n(); ++i) out << ' ' << vertex(l, i) << ';';
            out << " }\n";
        }
        for (std::size_t i = 0; i < d.n(); ++i)
            if (d.root_edges()[i] != 0)
                out << "  r -> " << vertex(1, i) << " [label=\"" << d.root_edges()[i].get_str() << "\"];\n";
        for (std::size_t k = 0; k < levels; ++k)
            for (std::size_t i = 0; i < d.n(); ++i)
                for (std::size_t j = 0; j < d.n(); ++j)
                    if (d.mu()[k](i, j) != 0)
                        out << "  " << vertex(k + 1, i) << " -> " << vertex(k + 2, j) << " [label=\""
                            << d.mu()[k](i, j).get_str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace faf
