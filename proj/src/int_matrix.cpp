#include "avalanche/int_matrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace avalanche {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant requires a square matrix");
    const int n = rows_;
    if (n == 0) return 1;

    IntMatrix m = *this;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss update: exact division keeps entries integral.
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

namespace {

// Position of a minimal-magnitude nonzero entry in the trailing submatrix,
// or {-1,-1} if it is all zero.
std::pair<int, int> min_nonzero(const IntMatrix& m, int t) {
    std::pair<int, int> best{-1, -1};
    BigInt best_abs;
    for (int i = t; i < m.rows(); ++i) {
        for (int j = t; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            BigInt a = abs(m.at(i, j));
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

std::vector<BigInt> IntMatrix::invariant_factors() const {
    if (rows_ != cols_) throw std::invalid_argument("invariant factors require a square matrix");
    const int n = rows_;
    IntMatrix m = *this;
    std::vector<BigInt> diag;
    diag.reserve(n);

    for (int t = 0; t < n; ++t) {
        auto [pi, pj] = min_nonzero(m, t);
        if (pi < 0) throw std::invalid_argument("invariant factors require a nonsingular matrix");
        for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (int i = 0; i < n; ++i) std::swap(m.at(i, t), m.at(i, pj));

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear column t; a nonzero remainder becomes the smaller pivot.
            for (int i = t + 1; i < n; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                if (q != 0)
                    for (int j = t; j < n; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(i, j));
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (int i = t; i < n; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (int i = 0; i < n; ++i) std::swap(m.at(i, t), m.at(i, j));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the submatrix; fold a violating
            // row into row t and keep reducing.
            for (int i = t + 1; i < n && !dirty; ++i) {
                for (int j = t + 1; j < n && !dirty; ++j) {
                    if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t())) {
                        for (int k = t; k < n; ++k) m.at(t, k) += m.at(i, k);
                        dirty = true;
                    }
                }
            }
        }
        diag.push_back(abs(m.at(t, t)));
    }
    return diag;
}

}  // namespace avalanche
