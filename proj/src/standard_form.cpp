#include "t0form/standard_form.hpp"

namespace t0form {

namespace {

// Index of the first unit entry of the row, or npos.
std::size_t first_nonzero_in_row(const T0Matrix& a, std::size_t i) {
    for (std::size_t j = 0; j < a.num_cols(); ++j)
        if (a(i, j).is_unit()) return j;
    return static_cast<std::size_t>(-1);
}

std::size_t first_nonzero_in_col(const T0Matrix& a, std::size_t j) {
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        if (a(i, j).is_unit()) return i;
    return static_cast<std::size_t>(-1);
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// First column of row i breaking the ones-then-zeros pattern, or npos.
std::size_t ones_then_zeros_break(const T0Matrix& a, std::size_t i) {
    std::size_t j = 0;
    while (j < a.num_cols() && a(i, j).is_one()) ++j;
    for (; j < a.num_cols(); ++j)
        if (!a(i, j).is_zero()) return j;
    return npos;
}

}  // namespace

std::string to_string(Condition c) {
    switch (c) {
        case Condition::S1: return "S1";
        case Condition::S2: return "S2";
        case Condition::S3: return "S3";
        case Condition::S3Prime: return "S3'";
        case Condition::S4: return "S4";
    }
    return "?";
}

ViolationReport check_s1(const T0Matrix& a) {
    ViolationReport report;
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
        std::size_t j = first_nonzero_in_row(a, i);
        if (j != npos && !a(i, j).is_one())
            report.violations.push_back({Condition::S1, i, j, a(i, j)});
    }
    return report;
}

ViolationReport check_s2(const T0Matrix& a) {
    ViolationReport report;
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
        std::size_t i = first_nonzero_in_col(a, j);
        if (i != npos && !a(i, j).is_one())
            report.violations.push_back({Condition::S2, i, j, a(i, j)});
    }
    return report;
}

ViolationReport check_s3(const T0Matrix& a) {
    ViolationReport report;
    if (a.num_rows() == 0) return report;
    std::size_t j = ones_then_zeros_break(a, 0);
    if (j != npos) report.violations.push_back({Condition::S3, std::size_t{0}, j, a(0, j)});
    return report;
}

ViolationReport check_s3prime(const T0Matrix& a) {
    ViolationReport report;
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
        if (first_nonzero_in_row(a, i) == npos) continue;
        std::size_t j = ones_then_zeros_break(a, i);
        if (j != npos) report.violations.push_back({Condition::S3Prime, i, j, a(i, j)});
        break;  // only the first nonzero row is constrained
    }
    return report;
}

ViolationReport check_s4(const OrderSpec& order, const T0Matrix& a) {
    ViolationReport report;
    for (std::size_t i = 0; i + 1 < a.num_rows(); ++i) {
        if (row_lex_compare(order, a.row(i), a.row(i + 1)) == std::strong_ordering::greater) {
            std::size_t j = 0;
            while (a(i, j) == a(i + 1, j)) ++j;
            report.violations.push_back({Condition::S4, i, j, a(i, j)});
            break;  // first offending adjacent pair only
        }
    }
    return report;
}

StandardFormCheck is_standard_form(const OrderSpec& order, const T0Matrix& a) {
    StandardFormCheck out;
    for (const auto& part : {check_s1(a), check_s2(a), check_s3(a), check_s4(order, a)})
        out.report.violations.insert(out.report.violations.end(), part.violations.begin(),
                                     part.violations.end());
    out.standard = out.report.empty();
    return out;
}

}  // namespace t0form
