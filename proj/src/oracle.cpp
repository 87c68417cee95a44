#include "t0form/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace t0form {

namespace {

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    if (b != 0 && a > limit / b) throw BudgetExceeded("enumeration too large");
    return a * b;
}

std::vector<std::size_t> row_nonzero_profile(const T0Matrix& a) {
    std::vector<std::size_t> counts(a.num_rows(), 0);
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = 0; j < a.num_cols(); ++j) counts[i] += a(i, j).is_unit();
    std::sort(counts.begin(), counts.end());
    return counts;
}

std::vector<std::size_t> col_nonzero_profile(const T0Matrix& a) {
    std::vector<std::size_t> counts(a.num_cols(), 0);
    for (std::size_t j = 0; j < a.num_cols(); ++j)
        for (std::size_t i = 0; i < a.num_rows(); ++i) counts[j] += a(i, j).is_unit();
    std::sort(counts.begin(), counts.end());
    return counts;
}

}  // namespace

std::uint64_t monomial_count(std::size_t s, int k, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = 2; i <= s; ++i) total = checked_mul_u64(total, i, limit);
    for (std::size_t i = 0; i < s; ++i)
        total = checked_mul_u64(total, static_cast<std::uint64_t>(k), limit);
    if (total > limit) throw BudgetExceeded("enumeration too large");
    return total;
}

MonomialStream::MonomialStream(std::size_t s, int k, const OracleBudget& budget)
    : s_(s), k_(GroupSpec(k).k), perm_(s), exps_(s, 0), done_(false), fresh_(true) {
    monomial_count(s, k, budget.max_steps);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

void MonomialStream::reset() {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::fill(exps_.begin(), exps_.end(), 0);
    done_ = false;
    fresh_ = true;
}

std::optional<MonomialMatrix> MonomialStream::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
    } else {
        // Advance the exponent odometer; on full rollover, the permutation.
        bool advanced = false;
        for (std::size_t i = s_; i-- > 0;) {
            if (++exps_[i] < k_) {
                advanced = true;
                break;
            }
            exps_[i] = 0;
        }
        if (!advanced && !std::next_permutation(perm_.begin(), perm_.end())) {
            done_ = true;
            return std::nullopt;
        }
    }
    std::vector<UnitEntry> diag(s_);
    for (std::size_t i = 0; i < s_; ++i) diag[i] = UnitEntry::unit(exps_[i], k_);
    return MonomialMatrix(k_, perm_, std::move(diag));
}

std::optional<Certificate> brute_force_equivalent(const T0Matrix& a, const T0Matrix& b,
                                                  const OracleBudget& budget) {
    if (a.k() != b.k()) throw MixedModulus("group orders differ");
    if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols())
        throw DimensionMismatch("matrices have different shapes");
    std::size_t m = a.num_rows(), n = a.num_cols();
    if (m > budget.max_dim || n > budget.max_dim)
        throw BudgetExceeded("matrix dimension exceeds oracle budget");
    if (a.k() > budget.max_group_order)
        throw BudgetExceeded("group order exceeds oracle budget");
    std::uint64_t left = monomial_count(m, a.k(), budget.max_steps);
    std::uint64_t right = monomial_count(n, a.k(), budget.max_steps);
    checked_mul_u64(left, right, budget.max_steps);

    // Monomial transforms permute and scale rows/columns, so the sorted
    // per-row and per-column nonzero counts are equivalence invariants.
    if (row_nonzero_profile(a) != row_nonzero_profile(b)) return std::nullopt;
    if (col_nonzero_profile(a) != col_nonzero_profile(b)) return std::nullopt;

    MonomialStream ls(m, a.k(), budget);
    while (auto m1 = ls.next()) {
        T0Matrix rowed = apply_row_transform(*m1, a);
        MonomialStream rs(n, a.k(), budget);
        while (auto m2 = rs.next()) {
            if (apply_col_transform(rowed, *m2) == b) return Certificate{*m1, *m2};
        }
    }
    return std::nullopt;
}

StandardFormStream::StandardFormStream(std::size_t m, std::size_t n, int k,
                                       const OrderSpec& order, const OracleBudget& budget)
    : m_(m), n_(n), k_(GroupSpec(k).k), order_(order), cells_(m * n, 0), done_(false), fresh_(true) {
    if (order.k() != k_) throw MixedModulus("order does not match group order");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m * n; ++i)
        total = checked_mul_u64(total, static_cast<std::uint64_t>(k_) + 1, budget.max_steps);
    if (total > budget.max_steps) throw BudgetExceeded("enumeration too large");
}

std::optional<T0Matrix> StandardFormStream::next() {
    while (!done_) {
        if (fresh_) {
            fresh_ = false;
        } else {
            bool advanced = false;
            for (std::size_t i = cells_.size(); i-- > 0;) {
                if (++cells_[i] <= k_) {
                    advanced = true;
                    break;
                }
                cells_[i] = 0;
            }
            if (!advanced) {
                done_ = true;
                break;
            }
        }
        T0Matrix a(k_, m_, n_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                int v = cells_[i * n_ + j];
                a(i, j) = v == k_ ? UnitEntry::zero() : UnitEntry::unit(v, k_);
            }
        if (is_standard_form(order_, a).standard) return a;
    }
    return std::nullopt;
}

}  // namespace t0form
