#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace sympair {

/// inv[a] = a^-1 mod p for a in [1, p), linear-time recurrence.
inline std::vector<u64> inverse_table(const PrimeField& F) {
    const u64 p = F.modulus();
    std::vector<u64> inv(p, 0);
    if (p > 1) inv[1] = 1;
    for (u64 a = 2; a < p; ++a) inv[a] = F.mul(p - p / a, inv[p % a]);
    return inv;
}

/// In-place reduced row echelon form of a rows x cols row-major matrix.
/// Returns the pivot column indices (rank = number of pivots).
inline std::vector<std::size_t> rref_inplace(const PrimeField& F, std::vector<u64>& m,
                                             std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m[pr * cols + j], m[r * cols + j]);
        const u64 pv = m[r * cols + c];
        if (pv != 1) {
            const u64 pi = F.inv(pv);
            for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = F.mul(m[r * cols + j], pi);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const u64 f = m[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = F.sub(m[i * cols + j], F.mul(f, m[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Canonical null space basis of a rows x cols row-major matrix: one vector
/// per free column, with a 1 in that column (RREF back-substitution).
inline std::vector<std::vector<u64>> null_space(const PrimeField& F, std::vector<u64> m,
                                                std::size_t rows, std::size_t cols) {
    const auto pivots = rref_inplace(F, m, rows, cols);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<u64>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<u64> v(cols, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m[i * cols + fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reusable rank probe for the pattern search hot loop: row-reduces only far
/// enough to find the first free column, avoiding all per-call allocation.
class NullProbe {
public:
    explicit NullProbe(const PrimeField& F) : F_(F), inv_(inverse_table(F)) {}

    const PrimeField& field() const { return F_; }

    /// Destroys mat (rows x cols row-major).  If the null space is nontrivial,
    /// writes the canonical first basis vector into null_out and returns true.
    bool first_null_vector(std::vector<u64>& mat, std::size_t rows, std::size_t cols,
                           std::vector<u64>& null_out) {
        piv_.clear();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t pr = r;
            while (pr < rows && mat[pr * cols + c] == 0) ++pr;
            if (pr == rows) {
                emit(mat, cols, c, null_out);
                return true;
            }
            if (pr != r)
                for (std::size_t j = c; j < cols; ++j)
                    std::swap(mat[pr * cols + j], mat[r * cols + j]);
            const u64 pv = mat[r * cols + c];
            if (pv != 1) {
                const u64 pi = inv_[pv];
                for (std::size_t j = c; j < cols; ++j)
                    mat[r * cols + j] = F_.mul(mat[r * cols + j], pi);
            }
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r) continue;
                const u64 f = mat[i * cols + c];
                if (f == 0) continue;
                for (std::size_t j = c; j < cols; ++j)
                    mat[i * cols + j] = F_.sub(mat[i * cols + j], F_.mul(f, mat[r * cols + j]));
            }
            piv_.push_back(c);
            if (++r == rows) {
                if (c + 1 < cols) {
                    emit(mat, cols, c + 1, null_out);
                    return true;
                }
                return false;
            }
        }
        return false;
    }

private:
    void emit(const std::vector<u64>& mat, std::size_t cols, std::size_t free_col,
              std::vector<u64>& out) const {
        out.assign(cols, 0);
        out[free_col] = 1;
        for (std::size_t i = 0; i < piv_.size(); ++i)
            out[piv_[i]] = F_.neg(mat[i * cols + free_col]);
    }

    PrimeField F_;
    std::vector<u64> inv_;
    std::vector<std::size_t> piv_;
};

}  // namespace sympair
