#include "t0form/group.hpp"

#include <sstream>

namespace t0form {

UnitEntry mul(GroupSpec spec, UnitEntry a, UnitEntry b) {
    if (a.is_zero() || b.is_zero()) return UnitEntry::zero();
    return UnitEntry::unit(static_cast<long long>(a.exponent()) + b.exponent(), spec.k);
}

UnitEntry inv(GroupSpec spec, UnitEntry a) {
    if (a.is_zero()) throw ZeroNotInvertible();
    return UnitEntry::unit(static_cast<long long>(spec.k) - a.exponent(), spec.k);
}

UnitEntry conj(GroupSpec spec, UnitEntry a) {
    if (a.is_zero()) return a;
    return inv(spec, a);
}

OrderSpec OrderSpec::default_order(int k) {
    std::vector<int> ranks(static_cast<std::size_t>(GroupSpec(k).k));
    for (std::size_t e = 0; e < ranks.size(); ++e) ranks[e] = static_cast<int>(e);
    return OrderSpec(k, std::move(ranks));
}

OrderSpec::OrderSpec(int k, std::vector<int> unit_ranks) : k_(GroupSpec(k).k), rank_(std::move(unit_ranks)) {
    if (rank_.size() != static_cast<std::size_t>(k_))
        throw MalformedOrder("order must rank exactly k unit exponents");
    std::vector<bool> seen(static_cast<std::size_t>(k_), false);
    for (int r : rank_) {
        if (r < 0 || r >= k_ || seen[static_cast<std::size_t>(r)])
            throw MalformedOrder("unit ranks must be a bijection onto [0, k)");
        seen[static_cast<std::size_t>(r)] = true;
    }
    if (rank_[0] != 0) throw MalformedOrder("1 must be the minimum of the order");
}

std::strong_ordering compare(const OrderSpec& order, UnitEntry a, UnitEntry b) {
    return order.rank(a) <=> order.rank(b);
}

OrderSpec parse_order_spec(int k, const std::string& text) {
    GroupSpec spec(k);
    std::istringstream in(text);
    std::vector<int> ranks(static_cast<std::size_t>(k), -1);
    long long e;
    int next_rank = 0;
    while (in >> e) {
        if (e < 0 || e >= k) throw MalformedOrder("exponent out of range [0, k)");
        if (ranks[static_cast<std::size_t>(e)] != -1) throw MalformedOrder("duplicate exponent in order");
        ranks[static_cast<std::size_t>(e)] = next_rank++;
    }
    if (!in.eof()) throw MalformedOrder("order must be a list of integers");
    if (next_rank != k) throw MalformedOrder("order must list all k exponents");
    return OrderSpec(k, std::move(ranks));  // rejects lists not starting with 0
}

std::string format_order_spec(const OrderSpec& order) {
    std::vector<int> by_rank(static_cast<std::size_t>(order.k()));
    for (int e = 0; e < order.k(); ++e)
        by_rank[static_cast<std::size_t>(order.rank(UnitEntry::unit(e, order.k())))] = e;
    std::ostringstream out;
    for (std::size_t i = 0; i < by_rank.size(); ++i) {
        if (i) out << ' ';
        out << by_rank[i];
    }
    return out.str();
}

}  // namespace t0form
