#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "t0form/matrix.hpp"
#include "t0form/standard_form.hpp"

namespace t0form {

// Transformation witness: equivalent_by(input, output, m1, m2) holds for
// the pair it accompanies.
struct Certificate {
    MonomialMatrix m1;  // size = row count
    MonomialMatrix m2;  // size = column count

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Column split [A1 | A2] at split_col, plus the maximal runs of equal rows
// of the left block. When the left block is sorted, consecutive blocks carry
// strictly increasing rows.
struct SplitView {
    std::size_t split_col = 0;
    std::vector<std::size_t> block_sizes;
};

SplitView make_split_view(const T0Matrix& a, std::size_t split_col);

// Monomial M with b * M = [1 ... 1 0 ... 0], the number of ones equal to the
// number of nonzeros of b. Stable: nonzero columns keep their relative
// order, as do zero columns; each moved column is scaled by the inverse of
// the corresponding entry.
MonomialMatrix leading_ones_transform(GroupSpec spec, std::span<const UnitEntry> b);

struct RightBlockTransform {
    MonomialMatrix row_perm;  // pure permutation, size m
    MonomialMatrix col_transform;  // size = a2 column count
};

// Given [A1 | A2] with A1 sorted (S4), produces a pure row permutation P and
// a column monomial M such that P*A2*M satisfies S2 and S3', and
// [P*A1 | P*A2*M] satisfies S4. P permutes rows only within runs of equal
// A1-rows, so P*A1 == A1. Throws NotSorted if A1 violates S4.
RightBlockTransform normalize_right_block(const T0Matrix& a1, const T0Matrix& a2,
                                          const OrderSpec& order);

// Given [A1 | A2], produces (M1, M2) such that [M1*A1 | M1*A2*M2] satisfies
// S1 and S4, and M1*A2*M2 satisfies S2 and S3'.
Certificate standardize_split(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order);

struct StandardizeResult {
    T0Matrix standard;
    Certificate cert;
};

// Reduces any T0-matrix to standard form (S1-S4) under the given order,
// with a verified certificate standard = m1 * input * m2. Deterministic.
// Self-checks the certificate and the standard-form predicate before
// returning; InternalCheckFailure indicates a bug.
StandardizeResult standardize(const T0Matrix& w, const OrderSpec& order);

// The four-step row/column normalization:
//   (1) scale each row by the inverse of its first nonzero entry,
//   (2) scale each column by the inverse of its first nonzero entry,
//   (3) stable-permute columns so the nonzeros of row 0 come first,
//   (4) stable-sort rows lexicographically.
// All intermediate stages are exposed. The certificate maps the input to
// stage[3]; the output is NOT guaranteed to be in standard form.
struct LegacyResult {
    std::array<T0Matrix, 4> stage;
    Certificate cert;

    const T0Matrix& result() const { return stage[3]; }
};

LegacyResult legacy_standardize(const T0Matrix& w, const OrderSpec& order);

}  // namespace t0form
