#include "frobx/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace frobx {

// ---- arithmetic mod p ----------------------------------------------------

i64 fp_normalize(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 fp_add(i64 a, i64 b, i64 p) { return (a + b) % p; }
i64 fp_sub(i64 a, i64 b, i64 p) { return fp_normalize(a - b, p); }
i64 fp_mul(i64 a, i64 b, i64 p) { return (a * b) % p; }

i64 fp_pow(i64 a, i64 e, i64 p) {
    i64 r = 1 % p;
    a = fp_normalize(a, p);
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

i64 fp_inv(i64 a, i64 p) {
    a = fp_normalize(a, p);
    if (a == 0) throw error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {
constexpr i64 kExpLimit = i64{1} << 62;
}

i64 checked_add(i64 a, i64 b) {
    if (a > kExpLimit - b) throw resource_error("exponent overflow (limit 2^62)");
    return a + b;
}

i64 checked_mul(i64 a, i64 b) {
    if (a != 0 && b > kExpLimit / a) throw resource_error("exponent overflow (limit 2^62)");
    return a * b;
}

// ---- monomials -----------------------------------------------------------

i64 Monomial::degree() const {
    i64 d = 0;
    for (i64 x : e) d = checked_add(d, x);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](i64 x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
    Monomial m{e};
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = std::max(e[i], other.e[i]);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m{e};
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = checked_add(e[i], other.e[i]);
    return m;
}

Monomial Monomial::over(const Monomial& other) const {
    Monomial m{e};
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] - other.e[i];
    return m;
}

Monomial Monomial::power(i64 k) const {
    Monomial m{e};
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = checked_mul(e[i], k);
    return m;
}

// ---- PolyRing ------------------------------------------------------------

PolyRing::PolyRing(i64 p, std::vector<std::string> vars, MonomialOrder order)
    : p_(p), vars_(std::move(vars)), order_(order) {
    if (!is_prime(p_)) throw parse_error("characteristic must be prime, got " + std::to_string(p_));
    if (p_ >= (i64{1} << 31)) throw parse_error("characteristic too large");
    if (vars_.empty()) throw parse_error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw parse_error("empty variable name");
        if (!seen.insert(v).second) throw parse_error("duplicate variable name: " + v);
    }
    if (order_.kind == OrderKind::elim &&
        (order_.elim_block <= 0 || order_.elim_block > static_cast<int>(vars_.size())))
        throw parse_error("elimination block out of range");
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    i64 da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: smaller exponent in the last differing variable wins
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int PolyRing::cmp(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
        case OrderKind::lex:
            return cmp_lex(a, b, 0, nvars());
        case OrderKind::grevlex:
            return cmp_grevlex(a, b, 0, nvars());
        case OrderKind::elim: {
            // Block order: any monomial touching the first block outranks any
            // monomial that does not, which is what elimination needs.
            auto k = static_cast<std::size_t>(order_.elim_block);
            if (int c = cmp_grevlex(a, b, 0, k)) return c;
            return cmp_grevlex(a, b, k, nvars());
        }
    }
    return 0;
}

bool PolyRing::operator==(const PolyRing& other) const {
    return p_ == other.p_ && vars_ == other.vars_ && order_ == other.order_;
}

RingPtr make_ring(i64 p, std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<PolyRing>(p, std::move(vars), order);
}

}  // namespace frobx
