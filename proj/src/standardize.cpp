#include "t0form/standardize.hpp"

#include <algorithm>
#include <numeric>

namespace t0form {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t first_nonzero(std::span<const UnitEntry> row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j].is_unit()) return j;
    return npos;
}

std::size_t nonzero_count(std::span<const UnitEntry> row) {
    std::size_t c = 0;
    for (UnitEntry e : row) c += e.is_unit();
    return c;
}

std::vector<std::size_t> invert_perm(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

// Row permutation whose output row r takes input row src[r].
MonomialMatrix row_gather(int k, const std::vector<std::size_t>& src) {
    return MonomialMatrix::permutation(k, invert_perm(src));
}

// Column permutation whose output column c takes input column src[c].
MonomialMatrix col_gather(int k, std::vector<std::size_t> src) {
    return MonomialMatrix::permutation(k, std::move(src));
}

std::strong_ordering compare_row_range(const OrderSpec& order, const T0Matrix& a,
                                        std::size_t ra, std::size_t rb,
                                        std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
        auto cmp = compare(order, a(ra, c), a(rb, c));
        if (cmp != std::strong_ordering::equal) return cmp;
    }
    return std::strong_ordering::equal;
}

// Stable sort of rows [r0, r1) keyed by columns [c0, c1); returns the full
// m-length gather (output row r takes input row src[r]), identity elsewhere.
std::vector<std::size_t> stable_row_sort(const OrderSpec& order, const T0Matrix& a,
                                         std::size_t r0, std::size_t r1,
                                         std::size_t c0, std::size_t c1) {
    std::vector<std::size_t> idx(r1 - r0);
    std::iota(idx.begin(), idx.end(), r0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return compare_row_range(order, a, x, y, c0, c1) == std::strong_ordering::less;
    });
    std::vector<std::size_t> src(a.num_rows());
    std::iota(src.begin(), src.end(), std::size_t{0});
    std::copy(idx.begin(), idx.end(), src.begin() + static_cast<std::ptrdiff_t>(r0));
    return src;
}

// Accumulates the equivalence transform alongside working copies:
// a1 = m1 * A1_in and a2 = m1 * A2_in * m2 at all times.
struct WorkState {
    T0Matrix a1, a2;
    MonomialMatrix m1, m2;

    WorkState(T0Matrix a1_, T0Matrix a2_)
        : a1(std::move(a1_)),
          a2(std::move(a2_)),
          m1(MonomialMatrix::identity(a1.k(), a1.num_rows())),
          m2(MonomialMatrix::identity(a2.k(), a2.num_cols())) {}

    void apply_rows(const MonomialMatrix& t) {
        a1 = apply_row_transform(t, a1);
        a2 = apply_row_transform(t, a2);
        m1 = monomial_compose(t, m1);
    }
    void apply_cols(const MonomialMatrix& t) {
        a2 = apply_col_transform(a2, t);
        m2 = monomial_compose(m2, t);
    }
};

RightBlockTransform nrb_impl(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order);
Certificate split_impl(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order);

// Core of normalize_right_block; a1 is assumed sorted.
RightBlockTransform nrb_impl(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order) {
    int k = a1.k();
    GroupSpec g(k);
    std::size_t m = a1.num_rows(), n1 = a1.num_cols(), n2 = a2.num_cols();
    RightBlockTransform out{MonomialMatrix::identity(k, m), MonomialMatrix::identity(k, n2)};
    if (m == 0 || n2 == 0) return out;

    // Runs of equal a1-rows; with n1 = 0 a single run covers everything.
    std::size_t m1 = 1;
    while (m1 < m &&
           compare_row_range(order, a1, m1 - 1, m1, 0, n1) == std::strong_ordering::equal)
        ++m1;

    bool b1_zero = true;
    for (std::size_t i = 0; i < m1 && b1_zero; ++i) b1_zero = nonzero_count(a2.row(i)) == 0;
    if (b1_zero) {
        // Nothing to normalize in the first block: solve the tail and keep
        // the leading rows in place.
        auto sub = nrb_impl(a1.submatrix(m1, m, 0, n1), a2.submatrix(m1, m, 0, n2), order);
        return {monomial_embed(sub.row_perm, m, m1), sub.col_transform};
    }

    // Pivot row: maximum nonzero count within the first block, lowest index.
    std::size_t pivot = 0, best = 0;
    for (std::size_t i = 0; i < m1; ++i) {
        std::size_t c = nonzero_count(a2.row(i));
        if (c > best) {
            best = c;
            pivot = i;
        }
    }

    MonomialMatrix m0 = leading_ones_transform(g, a2.row(pivot));
    T0Matrix work = apply_col_transform(a2, m0);

    // Stable sort within each run of equal a1-rows. The pivot row becomes the
    // first row of the matrix: it is lexicographically minimal in its block
    // because any row matching its leading ones with a unit further right
    // would have a larger nonzero count.
    std::vector<std::size_t> src(m);
    std::iota(src.begin(), src.end(), std::size_t{0});
    for (std::size_t lo = 0; lo < m;) {
        std::size_t hi = lo + 1;
        while (hi < m &&
               compare_row_range(order, a1, hi - 1, hi, 0, n1) == std::strong_ordering::equal)
            ++hi;
        auto sorted = stable_row_sort(order, work, lo, hi, 0, n2);
        std::copy(sorted.begin() + static_cast<std::ptrdiff_t>(lo),
                  sorted.begin() + static_cast<std::ptrdiff_t>(hi),
                  src.begin() + static_cast<std::ptrdiff_t>(lo));
        lo = hi;
    }
    MonomialMatrix p0 = row_gather(k, src);
    work = apply_row_transform(p0, work);

    std::size_t ones = best;
    if (ones == n2) return {p0, m0};

    // Columns past the ones/zeros boundary still need attention: drop the
    // first row and solve the remainder with the settled columns joined to
    // the sorted context.
    T0Matrix a1p = a1.submatrix(1, m, 0, n1).concat_cols(work.submatrix(1, m, 0, ones));
    T0Matrix a2p = work.submatrix(1, m, ones, n2);
    auto sub = nrb_impl(a1p, a2p, order);
    return {monomial_compose(monomial_embed(sub.row_perm, m, 1), p0),
            monomial_compose(m0, monomial_embed(sub.col_transform, n2, ones))};
}

// Core of standardize_split.
Certificate split_impl(const T0Matrix& a1_in, const T0Matrix& a2_in, const OrderSpec& order) {
    int k = a1_in.k();
    GroupSpec g(k);
    std::size_t m = a1_in.num_rows(), n1 = a1_in.num_cols(), n2 = a2_in.num_cols();

    if (m == 0)
        return {MonomialMatrix::identity(k, 0), MonomialMatrix::identity(k, n2)};

    if (m == 1) {
        MonomialMatrix m1 = MonomialMatrix::identity(k, 1);
        T0Matrix right = a2_in;
        std::size_t lead = first_nonzero(a1_in.row(0));
        if (lead != npos) {
            m1 = MonomialMatrix::diagonal(k, {inv(g, a1_in(0, lead))});
            right = apply_row_transform(m1, right);
        }
        return {m1, leading_ones_transform(g, right.row(0))};
    }

    WorkState st(a1_in, a2_in);

    if (n1 == 0 || a1_in.all_zero()) {
        if (a2_in.all_zero())
            return {MonomialMatrix::identity(k, m), MonomialMatrix::identity(k, n2)};

        // Top row: maximum nonzero count over all rows, lowest index, made
        // ones-then-zeros. Maximality keeps it lexicographically first.
        std::size_t rstar = 0, best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t c = nonzero_count(st.a2.row(i));
            if (c > best) {
                best = c;
                rstar = i;
            }
        }
        if (rstar != 0) {
            std::vector<std::size_t> src(m);
            src[0] = rstar;
            for (std::size_t r = 1; r <= rstar; ++r) src[r] = r - 1;
            for (std::size_t r = rstar + 1; r < m; ++r) src[r] = r;
            st.apply_rows(row_gather(k, src));
        }
        st.apply_cols(leading_ones_transform(g, st.a2.row(0)));
        std::size_t ones = best;

        // First column to ones then zeros: scale, then group.
        std::vector<UnitEntry> scales(m, UnitEntry::one());
        for (std::size_t i = 1; i < m; ++i)
            if (st.a2(i, 0).is_unit()) scales[i] = inv(g, st.a2(i, 0));
        st.apply_rows(MonomialMatrix::diagonal(k, std::move(scales)));
        std::vector<std::size_t> src{0};
        for (std::size_t i = 1; i < m; ++i)
            if (st.a2(i, 0).is_unit()) src.push_back(i);
        std::size_t brows = src.size() - 1;
        for (std::size_t i = 1; i < m; ++i)
            if (st.a2(i, 0).is_zero()) src.push_back(i);
        st.apply_rows(row_gather(k, src));

        // Columns under the top row's zeros: those meeting the block rows
        // come first, dead columns go last.
        std::vector<std::size_t> colsrc(ones);
        std::iota(colsrc.begin(), colsrc.end(), std::size_t{0});
        std::size_t active = 0;
        for (std::size_t c = ones; c < n2; ++c) {
            bool hit = false;
            for (std::size_t i = 1; i <= brows && !hit; ++i) hit = st.a2(i, c).is_unit();
            if (hit) {
                colsrc.push_back(c);
                ++active;
            }
        }
        for (std::size_t c = ones; c < n2; ++c) {
            bool hit = false;
            for (std::size_t i = 1; i <= brows && !hit; ++i) hit = st.a2(i, c).is_unit();
            if (!hit) colsrc.push_back(c);
        }
        st.apply_cols(col_gather(k, std::move(colsrc)));

        st.apply_rows(row_gather(k, stable_row_sort(order, st.a2, 1, 1 + brows, 1, ones)));

        auto rb = nrb_impl(st.a2.submatrix(1, 1 + brows, 1, ones),
                           st.a2.submatrix(1, 1 + brows, ones, ones + active), order);
        st.apply_rows(monomial_embed(rb.row_perm, m, 1));
        st.apply_cols(monomial_embed(rb.col_transform, n2, ones));

        std::size_t crow = 1 + brows;
        auto sub = split_impl(st.a2.submatrix(crow, m, 1, ones + active),
                              st.a2.submatrix(crow, m, ones + active, n2), order);
        st.apply_rows(monomial_embed(sub.m1, m, crow));
        st.apply_cols(monomial_embed(sub.m2, n2, ones + active));
        return {st.m1, st.m2};
    }

    // a1 != 0: its first nonzero column becomes ones then zeros and splits
    // the rows; the left context of the recursion grows by the settled
    // a2-columns.
    std::size_t t = 0;
    for (; t < n1; ++t) {
        bool any = false;
        for (std::size_t i = 0; i < m && !any; ++i) any = st.a1(i, t).is_unit();
        if (any) break;
    }

    std::vector<UnitEntry> scales(m, UnitEntry::one());
    for (std::size_t i = 0; i < m; ++i)
        if (st.a1(i, t).is_unit()) scales[i] = inv(g, st.a1(i, t));
    st.apply_rows(MonomialMatrix::diagonal(k, std::move(scales)));

    std::vector<std::size_t> src;
    for (std::size_t i = 0; i < m; ++i)
        if (st.a1(i, t).is_unit()) src.push_back(i);
    std::size_t brows = src.size();
    for (std::size_t i = 0; i < m; ++i)
        if (st.a1(i, t).is_zero()) src.push_back(i);
    st.apply_rows(row_gather(k, src));

    std::vector<std::size_t> colsrc;
    std::size_t active = 0;
    for (std::size_t c = 0; c < n2; ++c) {
        bool hit = false;
        for (std::size_t i = 0; i < brows && !hit; ++i) hit = st.a2(i, c).is_unit();
        if (hit) {
            colsrc.push_back(c);
            ++active;
        }
    }
    for (std::size_t c = 0; c < n2; ++c) {
        bool hit = false;
        for (std::size_t i = 0; i < brows && !hit; ++i) hit = st.a2(i, c).is_unit();
        if (!hit) colsrc.push_back(c);
    }
    st.apply_cols(col_gather(k, std::move(colsrc)));

    st.apply_rows(row_gather(k, stable_row_sort(order, st.a1, 0, brows, t + 1, n1)));

    auto rb = nrb_impl(st.a1.submatrix(0, brows, t + 1, n1),
                       st.a2.submatrix(0, brows, 0, active), order);
    st.apply_rows(monomial_embed(rb.row_perm, m, 0));
    st.apply_cols(monomial_embed(rb.col_transform, n2, 0));

    auto sub = split_impl(
        st.a1.submatrix(brows, m, t + 1, n1).concat_cols(st.a2.submatrix(brows, m, 0, active)),
        st.a2.submatrix(brows, m, active, n2), order);
    st.apply_rows(monomial_embed(sub.m1, m, brows));
    st.apply_cols(monomial_embed(sub.m2, n2, active));
    return {st.m1, st.m2};
}

void require_compatible(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order) {
    if (a1.k() != a2.k() || a1.k() != order.k()) throw MixedModulus("group orders differ");
    if (a1.num_rows() != a2.num_rows()) throw DimensionMismatch("row counts differ");
}

}  // namespace

SplitView make_split_view(const T0Matrix& a, std::size_t split_col) {
    if (split_col > a.num_cols()) throw DimensionMismatch("split column out of range");
    SplitView view{split_col, {}};
    std::size_t m = a.num_rows();
    for (std::size_t lo = 0; lo < m;) {
        std::size_t hi = lo + 1;
        while (hi < m) {
            bool eq = true;
            for (std::size_t c = 0; c < split_col && eq; ++c) eq = a(hi - 1, c) == a(hi, c);
            if (!eq) break;
            ++hi;
        }
        view.block_sizes.push_back(hi - lo);
        lo = hi;
    }
    return view;
}

MonomialMatrix leading_ones_transform(GroupSpec spec, std::span<const UnitEntry> b) {
    std::vector<std::size_t> gather;
    gather.reserve(b.size());
    std::vector<UnitEntry> diag(b.size(), UnitEntry::one());
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j].is_unit()) {
            gather.push_back(j);
            diag[j] = inv(spec, b[j]);
        }
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j].is_zero()) gather.push_back(j);
    return MonomialMatrix(spec.k, std::move(gather), std::move(diag));
}

RightBlockTransform normalize_right_block(const T0Matrix& a1, const T0Matrix& a2,
                                          const OrderSpec& order) {
    require_compatible(a1, a2, order);
    if (!check_s4(order, a1).empty()) throw NotSorted("left block must satisfy S4");
    return nrb_impl(a1, a2, order);
}

Certificate standardize_split(const T0Matrix& a1, const T0Matrix& a2, const OrderSpec& order) {
    require_compatible(a1, a2, order);
    return split_impl(a1, a2, order);
}

StandardizeResult standardize(const T0Matrix& w, const OrderSpec& order) {
    if (w.k() != order.k()) throw MixedModulus("group orders differ");
    T0Matrix empty_left(w.k(), w.num_rows(), 0);
    Certificate cert = split_impl(empty_left, w, order);
    T0Matrix s = apply_col_transform(apply_row_transform(cert.m1, w), cert.m2);
    if (!equivalent_by(w, s, cert.m1, cert.m2))
        throw InternalCheckFailure("standardize: certificate does not validate");
    if (!is_standard_form(order, s).standard)
        throw InternalCheckFailure("standardize: output is not in standard form");
    return {std::move(s), std::move(cert)};
}

LegacyResult legacy_standardize(const T0Matrix& w, const OrderSpec& order) {
    if (w.k() != order.k()) throw MixedModulus("group orders differ");
    int k = w.k();
    GroupSpec g(k);
    std::size_t m = w.num_rows(), n = w.num_cols();

    std::vector<UnitEntry> rscales(m, UnitEntry::one());
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = first_nonzero(w.row(i));
        if (j != npos) rscales[i] = inv(g, w(i, j));
    }
    MonomialMatrix d1 = MonomialMatrix::diagonal(k, std::move(rscales));
    T0Matrix w1 = apply_row_transform(d1, w);

    std::vector<UnitEntry> cscales(n, UnitEntry::one());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (w1(i, j).is_unit()) {
                cscales[j] = inv(g, w1(i, j));
                break;
            }
    MonomialMatrix d2 = MonomialMatrix::diagonal(k, std::move(cscales));
    T0Matrix w2 = apply_col_transform(w1, d2);

    std::vector<std::size_t> colsrc;
    colsrc.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        if (m > 0 && w2(0, j).is_unit()) colsrc.push_back(j);
    for (std::size_t j = 0; j < n; ++j)
        if (m == 0 || w2(0, j).is_zero()) colsrc.push_back(j);
    MonomialMatrix p3 = col_gather(k, std::move(colsrc));
    T0Matrix w3 = apply_col_transform(w2, p3);

    MonomialMatrix p4 = row_gather(k, stable_row_sort(order, w3, 0, m, 0, n));
    T0Matrix w4 = apply_row_transform(p4, w3);

    Certificate cert{monomial_compose(p4, d1), monomial_compose(d2, p3)};
    return {{std::move(w1), std::move(w2), std::move(w3), std::move(w4)}, std::move(cert)};
}

}  // namespace t0form
