#pragma once

#include <string>
#include <vector>

#include "frobx/ring.hpp"

namespace frobx {

struct Term {
    i64 c;       // in [1, p)
    Monomial m;

    bool operator==(const Term&) const = default;
};

// Canonical sparse polynomial: terms strictly decreasing in the ring's order,
// no zero coefficients.  The empty term list is zero.  Canonical form is
// unique per (ring, order), so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, i64 c);
    static Polynomial variable(RingPtr ring, std::size_t idx);
    static Polynomial monomial(RingPtr ring, i64 c, Monomial m);
    // Assembles and normalizes an arbitrary term soup (sorts, merges, drops zeros).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    i64 total_degree() const;  // -1 for zero

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    i64 leading_coeff() const { return leading_term().c; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial negate() const;
    Polynomial scaled(i64 c) const;                  // c * this
    Polynomial times_term(const Term& t) const;      // t * this
    Polynomial pow(i64 k) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// f^{ p^e }.  Termwise: over F_p coefficients are Frobenius-fixed (c^p = c),
// so raising to a p-th power only scales the exponent vectors.
Polynomial frobenius_pow(const Polynomial& f, i64 e);

// Transplants f into an equal-characteristic ring; var_map[i] gives the index
// in `target` of variable i of f's ring (-1 forbids that variable).
Polynomial transplant(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map);

// ---- text form -----------------------------------------------------------
// Grammar: terms joined by `+` (or `-`); a term is an optional integer
// coefficient and variable powers joined by `*`, powers written `x^3`.
// Examples: `x^3+y^3+z^3`, `2*x*y^2+1`.

Polynomial parse_poly(const RingPtr& ring, const std::string& text);
std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& csv);
std::string format_poly(const Polynomial& f);
std::string format_poly_list(const std::vector<Polynomial>& fs);

}  // namespace frobx
