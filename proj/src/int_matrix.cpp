#include "faf/int_matrix.hpp"

#include <utility>

#include "faf/errors.hpp"

namespace faf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    IntVector out(a.rows_, BigInt(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a(i, k) != 0) out[i] += a(i, k) * v[k];
    return out;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    BigInt d = determinant();
    return d == 1 || d == -1;
}

bool IntMatrix::is_nonnegative() const {
    for (const auto& v : data_)
        if (v < 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r ? "; " : "";
        for (std::size_t c = 0; c < cols_; ++c) out += (c ? " " : "") + (*this)(r, c).get_str();
    }
    return out + "]";
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < input.rows(); ++r) rows.push_back(input.row(r));
    const std::size_t cols = input.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        // gcd-eliminate column c below pivot_row using unimodular 2x2 row operations
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[pivot_row][c].get_mpz_t(),
                       rows[r][c].get_mpz_t());
            BigInt a = rows[pivot_row][c] / g;
            BigInt b = rows[r][c] / g;
            for (std::size_t k = 0; k < cols; ++k) {
                BigInt top = s * rows[pivot_row][k] + t * rows[r][k];
                BigInt bottom = a * rows[r][k] - b * rows[pivot_row][k];
                rows[pivot_row][k] = std::move(top);
                rows[r][k] = std::move(bottom);
            }
        }
        if (rows[pivot_row][c] == 0) continue;
        if (rows[pivot_row][c] < 0)
            for (auto& v : rows[pivot_row]) v = -v;
        const BigInt& p = rows[pivot_row][c];
        for (std::size_t r = 0; r < pivot_row; ++r) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), p.get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    IntMatrix out(pivot_row, cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t k = 0; k < cols; ++k) out(r, k) = rows[r][k];
    return out;
}

}  // namespace faf
