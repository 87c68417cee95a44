#include "t0form/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace t0form {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("integer overflow in Z[zeta_k]");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow("integer overflow in Z[zeta_k]");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("integer overflow in Z[zeta_k]");
    return r;
}

std::size_t degree(const IntPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;  // number of significant coefficients (deg + 1), 0 for the zero poly
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    std::size_t dn = degree(num), dd = degree(den);
    if (dd == 0) throw std::invalid_argument("division by zero polynomial");
    if (den[dd - 1] != 1) throw std::invalid_argument("divisor must be monic");
    if (dn < dd) {
        if (dn != 0) throw std::logic_error("inexact cyclotomic division");
        return {};
    }
    IntPoly quot(dn - dd + 1, 0);
    for (std::size_t i = dn - dd + 1; i-- > 0;) {
        std::int64_t c = num[i + dd - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dd; ++j)
            num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
    }
    if (degree(num) != 0) throw std::logic_error("inexact cyclotomic division");
    return quot;
}

// In-place reduction mod the monic polynomial phi.
void poly_reduce(IntPoly& p, const IntPoly& phi) {
    std::size_t dphi = degree(phi) - 1;  // actual degree of phi
    for (std::size_t i = degree(p); i-- > dphi;) {
        std::int64_t c = p[i];
        if (c == 0) continue;
        // p -= c * x^(i - dphi) * phi cancels position i (phi is monic)
        std::size_t shift = i - dphi;
        for (std::size_t j = 0; j <= dphi; ++j)
            p[shift + j] = checked_sub(p[shift + j], checked_mul(c, phi[j]));
    }
    p.resize(dphi);
}

const IntPoly& cached_cyclotomic(int k) {
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, cyclotomic_polynomial(k)).first;
    return it->second;
}

}  // namespace

IntPoly cyclotomic_polynomial(int k) {
    GroupSpec spec(k);
    // x^k - 1 divided by the product of Phi_d over proper divisors d | k.
    IntPoly num(static_cast<std::size_t>(k) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(k)] = 1;
    IntPoly den{1};
    for (int d = 1; d < k; ++d)
        if (k % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    return poly_divide_exact(std::move(num), den);
}

CycPoly::CycPoly(int k) : k_(GroupSpec(k).k) {
    coeffs_.assign(degree(cached_cyclotomic(k_)) - 1, 0);
}

CycPoly::CycPoly(int k, IntPoly coeffs) : k_(GroupSpec(k).k), coeffs_(std::move(coeffs)) {
    const IntPoly& phi = cached_cyclotomic(k_);
    std::size_t deg = degree(phi) - 1;
    if (coeffs_.size() < deg) coeffs_.resize(deg, 0);
    else if (coeffs_.size() > deg) poly_reduce(coeffs_, phi);
}

CycPoly CycPoly::integer(int k, std::int64_t value) {
    CycPoly out(k);
    if (!out.coeffs_.empty()) out.coeffs_[0] = value;
    else if (value != 0) throw std::logic_error("constant in zero-degree ring");
    return out;
}

bool CycPoly::is_zero() const {
    for (std::int64_t c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<std::int64_t> CycPoly::as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string CycPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1 || i == 0) out << mag;
        if (i >= 1) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CycPoly embed(GroupSpec spec, UnitEntry e) {
    if (e.is_zero()) return CycPoly(spec.k);
    IntPoly p(static_cast<std::size_t>(e.exponent()) + 1, 0);
    p[static_cast<std::size_t>(e.exponent())] = 1;
    return CycPoly(spec.k, std::move(p));
}

CycPoly cyc_add(const CycPoly& a, const CycPoly& b) {
    if (a.k() != b.k()) throw MixedModulus("cyclotomic moduli differ");
    IntPoly out = a.coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], b.coeffs()[i]);
    return CycPoly(a.k(), std::move(out));
}

CycPoly cyc_mul(const CycPoly& a, const CycPoly& b) {
    if (a.k() != b.k()) throw MixedModulus("cyclotomic moduli differ");
    return CycPoly(a.k(), poly_mul(a.coeffs(), b.coeffs()));
}

GramResult gram_weight_check(const T0Matrix& w) {
    GramResult out;
    int k = w.k();
    if (w.num_rows() != w.num_cols()) {
        out.witness = GramWitness{GramFailure::not_square, w.num_rows(), w.num_cols(), CycPoly(k)};
        return out;
    }
    GroupSpec g = w.group();
    std::size_t n = w.num_rows();
    std::int64_t weight = -1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            CycPoly gram(k);
            for (std::size_t c = 0; c < n; ++c) {
                UnitEntry p = mul(g, w(i, c), conj(g, w(j, c)));
                if (p.is_unit()) gram = cyc_add(gram, embed(g, p));
            }
            if (i == j) {
                auto v = gram.as_integer();
                // Diagonal entries are the per-row nonzero counts, hence
                // always integers; they must all agree.
                if (weight == -1) weight = *v;
                else if (*v != weight) {
                    out.witness = GramWitness{GramFailure::diagonal_mismatch, i, j, gram};
                    return out;
                }
            } else if (!gram.is_zero()) {
                out.witness = GramWitness{GramFailure::off_diagonal, i, j, gram};
                return out;
            }
        }
    }
    out.weighing = true;
    out.weight = n == 0 ? 0 : weight;
    return out;
}

}  // namespace t0form
