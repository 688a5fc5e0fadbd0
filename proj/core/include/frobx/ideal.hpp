#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frobx/groebner.hpp"
#include "frobx/poly.hpp"

namespace frobx {

class QuotientRing;
using QuotPtr = std::shared_ptr<const QuotientRing>;

// An ambient polynomial ring modulo a defining ideal.  Ideals of the quotient
// are handled throughout as lifted ambient ideals containing the defining one.
class QuotientRing {
public:
    static QuotPtr make(const RingPtr& ambient, std::vector<Polynomial> defining,
                        bool equidimensional_assumed);

    const RingPtr& ambient() const { return ambient_; }
    const std::vector<Polynomial>& defining_groebner() const { return defining_gb_; }
    bool equidimensional_assumed() const { return equidim_; }
    i64 dimension() const { return dim_; }

    bool operator==(const QuotientRing& other) const;

private:
    QuotientRing() = default;
    RingPtr ambient_;
    std::vector<Polynomial> defining_gb_;
    bool equidim_ = false;
    i64 dim_ = 0;
};

// Where an ideal or module element lives: an ambient ring, or a quotient of it.
struct RingContext {
    RingPtr ambient;
    QuotPtr quot;  // null for the plain polynomial ring

    static RingContext of(RingPtr ring) { return {std::move(ring), nullptr}; }
    static RingContext of(QuotPtr q);
    bool equidimensional() const { return quot ? quot->equidimensional_assumed() : true; }
    i64 ring_dimension() const;
    const std::vector<Polynomial>* defining() const;
    bool operator==(const RingContext& other) const;
};

void check_same_context(const RingContext& a, const RingContext& b);

class Ideal {
public:
    Ideal(RingContext ctx, std::vector<Polynomial> gens);
    Ideal(const RingPtr& ring, std::vector<Polynomial> gens);
    Ideal(const QuotPtr& q, std::vector<Polynomial> gens);

    const RingContext& context() const { return ctx_; }
    const RingPtr& ring() const { return ctx_.ambient; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    // Reduced Groebner basis of the lift (generators plus defining ideal).
    const std::vector<Polynomial>& groebner() const;

    bool is_unit() const;
    bool is_zero_ideal() const;  // zero as an ideal of the context ring
    bool contains(const Ideal& other) const;
    bool operator==(const Ideal& other) const;

    // Canonical text key; equal ideals of one context share it.
    std::string key() const;

private:
    RingContext ctx_;
    std::vector<Polynomial> gens_;
    struct Cell {
        std::once_flag flag;
        std::vector<Polynomial> gb;
    };
    std::shared_ptr<Cell> cell_;
};

std::string format_ideal(const Ideal& a);  // "(g1, g2)" over the reduced basis, "(0)" when zero

// ---- ideal arithmetic ----------------------------------------------------

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Ideal& b);  // { r : r b ⊆ a }; rejects b = 0 loudly
bool member(const Polynomial& r, const Ideal& a);
bool radical_member(const Polynomial& r, const Ideal& a);

// Krull dimension of (context ring)/a; -1 for the unit ideal.
i64 dimension(const Ideal& a);

// True iff a is the whole ring (height ∞ convention) or dim(a) < dim(ring).
// Sound only on equidimensional rings, so an unflagged quotient refuses.
bool has_positive_height(const Ideal& a);

// c outside every minimal prime, via the same dimension-drop argument.
bool in_R_circ(const Polynomial& c, const RingContext& ctx);

bool is_regular_sequence(const std::vector<Polynomial>& seq, const RingContext& ctx);

Ideal frobenius_power(const Ideal& a, i64 e);
Ideal frobenius_preimage(const Ideal& a, i64 e);  // { r : r^{p^e} ∈ a }; e ≥ 1
std::pair<Ideal, bool> frobenius_closure(const Ideal& a, i64 bound);

// Radical ⟺ closed under p-th roots in characteristic p.
bool is_radical_probe(const Ideal& a);

}  // namespace frobx
