#pragma once

#include <cstdint>
#include <optional>

#include "t0form/standardize.hpp"

namespace t0form {

// Bounds for the exhaustive searches. The pair search enumerates
// (s! * k^s) * (t! * k^t) monomial pairs; the standard-form scan visits
// (k+1)^(m*n) matrices. Both are capped by max_steps.
struct OracleBudget {
    std::size_t max_dim = 3;
    int max_group_order = 4;
    std::uint64_t max_steps = 100'000'000;
};

// Number of monomial matrices of size s over <zeta_k>: s! * k^s.
// Throws BudgetExceeded on overflow past limit.
std::uint64_t monomial_count(std::size_t s, int k, std::uint64_t limit);

// Streams all s! * k^s monomial matrices exactly once: permutations in
// lexicographic order, and for each, diagonal exponent vectors in
// lexicographic order (last position fastest).
class MonomialStream {
  public:
    MonomialStream(std::size_t s, int k, const OracleBudget& budget = {});

    std::optional<MonomialMatrix> next();
    void reset();

  private:
    std::size_t s_;
    int k_;
    std::vector<std::size_t> perm_;
    std::vector<int> exps_;
    bool done_;
    bool fresh_;
};

// Exhaustive search for a certificate M1 * A * M2 == B. Deterministic: the
// first witness in stream order is returned; nullopt means no certificate
// exists. Throws BudgetExceeded / DimensionMismatch.
std::optional<Certificate> brute_force_equivalent(const T0Matrix& a, const T0Matrix& b,
                                                  const OracleBudget& budget = {});

// Streams every matrix of T0^{m x n} in standard form under the given
// order, each exactly once, by filtering a deterministic full scan.
class StandardFormStream {
  public:
    StandardFormStream(std::size_t m, std::size_t n, int k, const OrderSpec& order,
                       const OracleBudget& budget = {});

    std::optional<T0Matrix> next();

  private:
    std::size_t m_, n_;
    int k_;
    OrderSpec order_;
    std::vector<int> cells_;  // 0..k-1 = unit exponent, k = zero
    bool done_;
    bool fresh_;
};

}  // namespace t0form
