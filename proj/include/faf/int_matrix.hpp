#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "faf/rational.hpp"

namespace faf {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Exact determinant (Bareiss fraction-free elimination).
    BigInt determinant() const;
    bool is_unimodular() const;
    bool is_nonnegative() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Row-style Hermite normal form: zero rows dropped, pivots positive and
/// strictly increasing in column, entries above each pivot reduced into
/// [0, pivot). Two integer matrices span the same row lattice iff their
/// Hermite normal forms are equal.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace faf
