#pragma once

#include <vector>

#include "avalanche/bigint.hpp"

namespace avalanche {

// Dense matrix of arbitrary-precision integers. Used for graph Laplacians;
// all eliminations are fraction-free so results stay exact.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    // Determinant by fraction-free Bareiss elimination. Square matrices only;
    // the 0x0 matrix has determinant 1.
    BigInt determinant() const;

    // Smith-normal-form diagonal d_1 | d_2 | ... | d_n (non-negative, each
    // dividing the next). Requires a square matrix with nonzero determinant.
    std::vector<BigInt> invariant_factors() const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_;
    int cols_;
    std::vector<BigInt> a_;
};

}  // namespace avalanche
