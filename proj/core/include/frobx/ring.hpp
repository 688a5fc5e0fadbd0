#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobx/errors.hpp"

namespace frobx {

using i64 = std::int64_t;

// ---- arithmetic mod p ----------------------------------------------------

i64 fp_normalize(i64 a, i64 p);
i64 fp_add(i64 a, i64 b, i64 p);
i64 fp_sub(i64 a, i64 b, i64 p);
i64 fp_mul(i64 a, i64 b, i64 p);
i64 fp_inv(i64 a, i64 p);
i64 fp_pow(i64 a, i64 e, i64 p);
bool is_prime(i64 p);

// Checked exponent arithmetic.  Frobenius powers push exponents toward p^n
// fast; overflow must surface as a resource error, never wrap.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// ---- monomials -----------------------------------------------------------

enum class OrderKind { lex, grevlex, elim };

struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int elim_block = 0;  // elim only: number of leading variables ranked first

    bool operator==(const MonomialOrder&) const = default;
};

struct Monomial {
    std::vector<i64> e;  // one exponent per ring variable

    i64 degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    Monomial lcm_with(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    Monomial over(const Monomial& other) const;  // exact quotient; caller checks divides()
    Monomial power(i64 k) const;

    bool operator==(const Monomial&) const = default;
};

// ---- ambient polynomial ring --------------------------------------------

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
    PolyRing(i64 p, std::vector<std::string> vars, MonomialOrder order = {});

    i64 characteristic() const { return p_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    int var_index(const std::string& name) const;  // -1 when absent

    // Total order on monomials; >0 when a comes later (is larger), 0 on equal.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool operator==(const PolyRing& other) const;

private:
    i64 p_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

RingPtr make_ring(i64 p, std::vector<std::string> vars, MonomialOrder order = {});

inline void check_same_ring(const PolyRing& a, const PolyRing& b) {
    if (&a == &b) return;
    if (!(a == b)) throw ring_mismatch("operands live in different rings");
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b) throw ring_mismatch("operands live in different rings");
    check_same_ring(*a, *b);
}

}  // namespace frobx
