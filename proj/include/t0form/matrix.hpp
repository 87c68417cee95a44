#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "t0form/group.hpp"

namespace t0form {

// Dense row-major m x n matrix over T0 for a fixed group order k.
// m = 0 or n = 0 are first-class values.
class T0Matrix {
  public:
    T0Matrix() : k_(1), rows_(0), cols_(0) {}

    // Zero-filled.
    T0Matrix(int k, std::size_t m, std::size_t n)
        : k_(GroupSpec(k).k), rows_(m), cols_(n), entries_(m * n) {}

    int k() const { return k_; }
    GroupSpec group() const { return GroupSpec(k_); }
    std::size_t num_rows() const { return rows_; }
    std::size_t num_cols() const { return cols_; }

    UnitEntry& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    UnitEntry operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const UnitEntry> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    std::span<UnitEntry> row(std::size_t i) {
        return {entries_.data() + i * cols_, cols_};
    }

    // Rows [r0, r1) and columns [c0, c1) as a copy.
    T0Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

    // [*this | right], matching row counts.
    T0Matrix concat_cols(const T0Matrix& right) const;

    bool all_zero() const;
    std::size_t nonzero_count() const;

    static T0Matrix identity(int k, std::size_t n);

    friend bool operator==(const T0Matrix&, const T0Matrix&) = default;

  private:
    int k_;
    std::size_t rows_, cols_;
    std::vector<UnitEntry> entries_;
};

// Monomial matrix of size s over T = <zeta_k>: exactly one unit entry per
// row and column. Stored as a bijection perm on [0, s) and unit scales diag,
// with the represented matrix pinned entrywise by
//
//     M[perm[i]][i] = diag[perm[i]],      all other entries zero,
//
// i.e. diag is indexed by the row of the represented matrix. Acting on the
// left, row i of the operand lands at row perm[i] scaled by diag[perm[i]];
// acting on the right, column perm[c] of the operand lands at column c with
// the same scale.
class MonomialMatrix {
  public:
    MonomialMatrix() : k_(1) {}

    MonomialMatrix(int k, std::vector<std::size_t> perm, std::vector<UnitEntry> diag);

    static MonomialMatrix identity(int k, std::size_t s);

    // Pure permutation: index i maps to image[i], all scales 1.
    static MonomialMatrix permutation(int k, std::vector<std::size_t> image);

    // Pure diagonal: position i scaled by scales[i].
    static MonomialMatrix diagonal(int k, std::vector<UnitEntry> scales);

    int k() const { return k_; }
    std::size_t size() const { return perm_.size(); }
    const std::vector<std::size_t>& perm() const { return perm_; }
    const std::vector<UnitEntry>& diag() const { return diag_; }

    bool is_identity() const;
    bool is_pure_permutation() const;

    // Dense T0Matrix with the represented entries.
    T0Matrix to_dense() const;

    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  private:
    int k_;
    std::vector<std::size_t> perm_;
    std::vector<UnitEntry> diag_;
};

// Lexicographic comparison of row vectors: decided by compare() at the
// first differing index. Throws LengthMismatch.
std::strong_ordering row_lex_compare(const OrderSpec& order,
                                     std::span<const UnitEntry> a,
                                     std::span<const UnitEntry> b);

// M1 * A (left action). Requires M1.size() == A.num_rows().
T0Matrix apply_row_transform(const MonomialMatrix& m1, const T0Matrix& a);

// A * M2 (right action). Requires M2.size() == A.num_cols().
T0Matrix apply_col_transform(const T0Matrix& a, const MonomialMatrix& m2);

// Matrix product ma * mb as a monomial matrix.
MonomialMatrix monomial_compose(const MonomialMatrix& ma, const MonomialMatrix& mb);

MonomialMatrix monomial_inverse(const MonomialMatrix& m);

// Block-diagonal composition diag(blocks...); sizes add up.
MonomialMatrix monomial_block_diag(int k, std::span<const MonomialMatrix> blocks);

// M embedded as diag(I_offset, M, I_rest) of total size `total`.
MonomialMatrix monomial_embed(const MonomialMatrix& m, std::size_t total, std::size_t offset);

// Certificate check: true iff M1 * A * M2 == B entrywise.
bool equivalent_by(const T0Matrix& a, const T0Matrix& b,
                   const MonomialMatrix& m1, const MonomialMatrix& m2);

}  // namespace t0form
