#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "t0form/matrix.hpp"

namespace t0form {

// Integer polynomial, dense, index = degree. Leading zeros allowed.
using IntPoly = std::vector<std::int64_t>;

// k-th cyclotomic polynomial Phi_k, computed by exact division of x^k - 1
// by the product of Phi_d over proper divisors d of k.
IntPoly cyclotomic_polynomial(int k);

// Element of Z[zeta_k] = Z[x]/(Phi_k(x)), stored reduced with exactly
// deg(Phi_k) coefficients. All arithmetic is exact; coefficient overflow
// throws CoefficientOverflow instead of wrapping.
class CycPoly {
  public:
    explicit CycPoly(int k);  // zero
    CycPoly(int k, IntPoly coeffs);  // reduced mod Phi_k

    static CycPoly integer(int k, std::int64_t value);

    int k() const { return k_; }
    const IntPoly& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // The integer value if this element is a rational integer (all
    // non-constant coefficients zero), otherwise nullopt.
    std::optional<std::int64_t> as_integer() const;

    std::string to_string() const;  // e.g. "2 - x + x^3"

    friend bool operator==(const CycPoly&, const CycPoly&) = default;

  private:
    int k_;
    IntPoly coeffs_;
};

// Zero maps to 0, a unit of exponent e maps to x^e mod Phi_k.
CycPoly embed(GroupSpec spec, UnitEntry e);

CycPoly cyc_add(const CycPoly& a, const CycPoly& b);
CycPoly cyc_mul(const CycPoly& a, const CycPoly& b);

enum class GramFailure { off_diagonal, diagonal_mismatch, not_square };

struct GramWitness {
    GramFailure reason;
    std::size_t row, col;  // offending Gram position; (m, n) for not_square
    CycPoly value;
};

struct GramResult {
    bool weighing = false;
    std::int64_t weight = 0;  // meaningful iff weighing
    std::optional<GramWitness> witness;  // set iff !weighing
};

// Exact check of W * W^adj == w * I over Z[zeta_k]. Any square matrix is
// accepted; non-square input yields a not_square witness.
GramResult gram_weight_check(const T0Matrix& w);

}  // namespace t0form
