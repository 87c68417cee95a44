#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "t0form/matrix.hpp"

namespace t0form {

// Standard-form conditions:
//   S1  first nonzero entry of each row is 1
//   S2  first nonzero entry of each column is 1
//   S3  the first row is ones followed by zeros (j = 0 ones permitted)
//   S3' the first nonzero row is ones followed by zeros
//   S4  rows are in lexicographic order (non-strict; equal rows allowed)
enum class Condition { S1, S2, S3, S3Prime, S4 };

std::string to_string(Condition c);

struct Violation {
    Condition condition;
    std::optional<std::size_t> row;  // 0-based
    std::optional<std::size_t> col;  // 0-based
    UnitEntry found;
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool empty() const { return violations.empty(); }
};

// One violation per offending row, at that row's first nonzero entry.
ViolationReport check_s1(const T0Matrix& a);

// One violation per offending column, at that column's first nonzero entry.
ViolationReport check_s2(const T0Matrix& a);

// At most one violation, at the first position of row 0 breaking the
// ones-then-zeros pattern.
ViolationReport check_s3(const T0Matrix& a);

// Like S3 but applied to the first row that contains a nonzero entry.
ViolationReport check_s3prime(const T0Matrix& a);

// At most one violation, at the first adjacent pair with row[i] > row[i+1];
// row = i, col = first differing column.
ViolationReport check_s4(const OrderSpec& order, const T0Matrix& a);

struct StandardFormCheck {
    bool standard = false;
    ViolationReport report;  // S1, S2, S3, S4 reports concatenated
};

StandardFormCheck is_standard_form(const OrderSpec& order, const T0Matrix& a);

}  // namespace t0form
