#pragma once

#include <compare>
#include <string>
#include <vector>

#include "t0form/errors.hpp"

namespace t0form {

// An element of T0 = {0} ∪ T where T = <zeta_k> is the cyclic group of k-th
// roots of unity. Units are stored as exponents reduced mod k; the group
// order k is carried by the surrounding context (GroupSpec, T0Matrix, ...),
// not by each entry.
class UnitEntry {
  public:
    constexpr UnitEntry() : exp_(kZero) {}

    static constexpr UnitEntry zero() { return UnitEntry(); }

    static constexpr UnitEntry one() { return unit_reduced(0); }

    // e may be any nonnegative integer; it is reduced mod k.
    static constexpr UnitEntry unit(long long e, int k) {
        long long r = e % k;
        if (r < 0) r += k;
        return unit_reduced(static_cast<int>(r));
    }

    constexpr bool is_zero() const { return exp_ == kZero; }
    constexpr bool is_unit() const { return exp_ != kZero; }
    constexpr bool is_one() const { return exp_ == 0; }

    // Exponent of a unit entry; undefined for zero.
    constexpr int exponent() const { return exp_; }

    friend constexpr bool operator==(UnitEntry, UnitEntry) = default;

  private:
    static constexpr int kZero = -1;
    static constexpr UnitEntry unit_reduced(int e) {
        UnitEntry u;
        u.exp_ = e;
        return u;
    }
    int exp_;
};

// Order of the cyclic unit group T = <zeta_k>.
struct GroupSpec {
    int k = 1;

    explicit GroupSpec(int k_) : k(k_) {
        if (k < 1) throw std::invalid_argument("group order must be >= 1");
    }
};

UnitEntry mul(GroupSpec spec, UnitEntry a, UnitEntry b);

// Multiplicative inverse in T; throws ZeroNotInvertible on the zero entry.
UnitEntry inv(GroupSpec spec, UnitEntry a);

// Complex conjugate: fixes zero, inverts units.
UnitEntry conj(GroupSpec spec, UnitEntry a);

// A total order on T0 with 1 minimal and 0 maximal. rank assigns a distinct
// value in [0, k] to each unit exponent and to zero; rank(1) = 0 and
// rank(0) = k always hold.
class OrderSpec {
  public:
    // Ranks in exponent order: 1 < zeta < zeta^2 < ... < 0.
    static OrderSpec default_order(int k);

    OrderSpec(int k, std::vector<int> unit_ranks);

    int k() const { return k_; }

    int rank(UnitEntry e) const {
        return e.is_zero() ? k_ : rank_[static_cast<std::size_t>(e.exponent())];
    }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

  private:
    int k_;
    std::vector<int> rank_;  // rank_[e] for unit exponents e in [0, k)
};

std::strong_ordering compare(const OrderSpec& order, UnitEntry a, UnitEntry b);

// Parses a whitespace-separated list of the k unit exponents in increasing
// order; zero is the implicit maximum. The list must start with exponent 0
// (1 is the minimum) and mention every exponent exactly once.
OrderSpec parse_order_spec(int k, const std::string& text);

std::string format_order_spec(const OrderSpec& order);

}  // namespace t0form
