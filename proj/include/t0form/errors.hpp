#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t0form {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroNotInvertible : std::domain_error {
    ZeroNotInvertible() : std::domain_error("zero entry has no inverse") {}
};

struct MalformedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MixedModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSorted : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoefficientOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Thrown when a top-level self-check fails; indicates a bug, never expected.
struct InternalCheckFailure : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    std::size_t line;  // 1-based
    std::size_t column;  // 1-based
    ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace t0form
