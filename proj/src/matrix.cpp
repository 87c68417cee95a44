#include "t0form/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace t0form {

namespace {

void require_same_k(int ka, int kb) {
    if (ka != kb) throw MixedModulus("group orders differ");
}

}  // namespace

T0Matrix T0Matrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    T0Matrix out(k_, r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = (*this)(i, j);
    return out;
}

T0Matrix T0Matrix::concat_cols(const T0Matrix& right) const {
    require_same_k(k_, right.k_);
    if (rows_ != right.rows_) throw DimensionMismatch("row counts differ in concat");
    T0Matrix out(k_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
}

bool T0Matrix::all_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](UnitEntry e) { return e.is_zero(); });
}

std::size_t T0Matrix::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](UnitEntry e) { return e.is_unit(); }));
}

T0Matrix T0Matrix::identity(int k, std::size_t n) {
    T0Matrix out(k, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = UnitEntry::one();
    return out;
}

MonomialMatrix::MonomialMatrix(int k, std::vector<std::size_t> perm, std::vector<UnitEntry> diag)
    : k_(GroupSpec(k).k), perm_(std::move(perm)), diag_(std::move(diag)) {
    if (perm_.size() != diag_.size()) throw DimensionMismatch("perm/diag size mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t p : perm_) {
        if (p >= perm_.size() || seen[p]) throw std::invalid_argument("perm is not a permutation");
        seen[p] = true;
    }
    for (UnitEntry d : diag_) {
        if (d.is_zero()) throw std::invalid_argument("diagonal entries must be units");
        if (d.exponent() >= k_) throw std::invalid_argument("diagonal exponent out of range");
    }
}

MonomialMatrix MonomialMatrix::identity(int k, std::size_t s) {
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return MonomialMatrix(k, std::move(perm), std::vector<UnitEntry>(s, UnitEntry::one()));
}

MonomialMatrix MonomialMatrix::permutation(int k, std::vector<std::size_t> image) {
    std::size_t s = image.size();
    return MonomialMatrix(k, std::move(image), std::vector<UnitEntry>(s, UnitEntry::one()));
}

MonomialMatrix MonomialMatrix::diagonal(int k, std::vector<UnitEntry> scales) {
    std::vector<std::size_t> perm(scales.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return MonomialMatrix(k, std::move(perm), std::move(scales));
}

bool MonomialMatrix::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != i || !diag_[i].is_one()) return false;
    return true;
}

bool MonomialMatrix::is_pure_permutation() const {
    return std::all_of(diag_.begin(), diag_.end(), [](UnitEntry d) { return d.is_one(); });
}

T0Matrix MonomialMatrix::to_dense() const {
    T0Matrix out(k_, size(), size());
    for (std::size_t i = 0; i < size(); ++i) out(perm_[i], i) = diag_[perm_[i]];
    return out;
}

std::strong_ordering row_lex_compare(const OrderSpec& order,
                                     std::span<const UnitEntry> a,
                                     std::span<const UnitEntry> b) {
    if (a.size() != b.size()) throw LengthMismatch("row lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = compare(order, a[i], b[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

T0Matrix apply_row_transform(const MonomialMatrix& m1, const T0Matrix& a) {
    require_same_k(m1.k(), a.k());
    if (m1.size() != a.num_rows()) throw DimensionMismatch("row transform size mismatch");
    GroupSpec g = a.group();
    T0Matrix out(a.k(), a.num_rows(), a.num_cols());
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
        std::size_t r = m1.perm()[i];
        UnitEntry d = m1.diag()[r];
        for (std::size_t c = 0; c < a.num_cols(); ++c) out(r, c) = mul(g, d, a(i, c));
    }
    return out;
}

T0Matrix apply_col_transform(const T0Matrix& a, const MonomialMatrix& m2) {
    require_same_k(m2.k(), a.k());
    if (m2.size() != a.num_cols()) throw DimensionMismatch("column transform size mismatch");
    GroupSpec g = a.group();
    T0Matrix out(a.k(), a.num_rows(), a.num_cols());
    for (std::size_t c = 0; c < a.num_cols(); ++c) {
        std::size_t j = m2.perm()[c];
        UnitEntry d = m2.diag()[j];
        for (std::size_t r = 0; r < a.num_rows(); ++r) out(r, c) = mul(g, a(r, j), d);
    }
    return out;
}

MonomialMatrix monomial_compose(const MonomialMatrix& ma, const MonomialMatrix& mb) {
    require_same_k(ma.k(), mb.k());
    if (ma.size() != mb.size()) throw DimensionMismatch("compose size mismatch");
    GroupSpec g(ma.k());
    std::size_t s = ma.size();
    std::vector<std::size_t> perm(s);
    std::vector<UnitEntry> diag(s, UnitEntry::one());
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t rb = mb.perm()[i];
        std::size_t r = ma.perm()[rb];
        perm[i] = r;
        diag[r] = mul(g, ma.diag()[r], mb.diag()[rb]);
    }
    return MonomialMatrix(ma.k(), std::move(perm), std::move(diag));
}

MonomialMatrix monomial_inverse(const MonomialMatrix& m) {
    GroupSpec g(m.k());
    std::size_t s = m.size();
    std::vector<std::size_t> perm(s);
    std::vector<UnitEntry> diag(s, UnitEntry::one());
    for (std::size_t i = 0; i < s; ++i) {
        perm[m.perm()[i]] = i;
        diag[i] = inv(g, m.diag()[m.perm()[i]]);
    }
    return MonomialMatrix(m.k(), std::move(perm), std::move(diag));
}

MonomialMatrix monomial_block_diag(int k, std::span<const MonomialMatrix> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        require_same_k(k, b.k());
        total += b.size();
    }
    std::vector<std::size_t> perm(total);
    std::vector<UnitEntry> diag(total, UnitEntry::one());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            perm[off + i] = off + b.perm()[i];
            diag[off + i] = b.diag()[i];
        }
        off += b.size();
    }
    return MonomialMatrix(k, std::move(perm), std::move(diag));
}

MonomialMatrix monomial_embed(const MonomialMatrix& m, std::size_t total, std::size_t offset) {
    if (offset + m.size() > total) throw DimensionMismatch("embed does not fit");
    std::vector<std::size_t> perm(total);
    std::vector<UnitEntry> diag(total, UnitEntry::one());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = 0; i < m.size(); ++i) {
        perm[offset + i] = offset + m.perm()[i];
        diag[offset + i] = m.diag()[i];
    }
    return MonomialMatrix(m.k(), std::move(perm), std::move(diag));
}

bool equivalent_by(const T0Matrix& a, const T0Matrix& b,
                   const MonomialMatrix& m1, const MonomialMatrix& m2) {
    require_same_k(a.k(), b.k());
    if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols())
        throw DimensionMismatch("matrices have different shapes");
    return apply_col_transform(apply_row_transform(m1, a), m2) == b;
}

}  // namespace t0form
