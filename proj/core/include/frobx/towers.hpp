#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "frobx/skew.hpp"

namespace frobx {

// The left R[x,f]-module ⊕_n R/b_n with x(r + b_n) = r^p + b_{n+1}, for the
// two tower shapes in use: b_n rising Frobenius powers of a base ideal, or a
// constant tower (then the module is R/b with x the induced Frobenius).
class CyclicTower {
public:
    enum class Kind { frobenius_powers, constant };

    struct Elem {
        i64 comp = 0;        // which summand the representative lives in
        Polynomial rep;
    };

    CyclicTower(RingContext ctx, Ideal base, Kind kind);

    const RingContext& context() const { return ctx_; }
    Kind kind() const { return kind_; }
    const Ideal& base() const { return base_; }
    const Ideal& component_ideal(i64 n) const;

    Elem element(i64 comp, Polynomial rep) const;
    Elem x_act(const Elem& g) const;
    bool is_zero(const Elem& g) const;
    bool elem_equal(const Elem& g, const Elem& h) const;

    // x^m g = 0 for some m <= bound, i.e. bounded Frobenius-closure membership
    // of the representative in its component ideal.
    bool is_torsion(const Elem& g, i64 bound) const;

    // Per-degree annihilators of the x-orbit of g, for the chain machinery.
    std::vector<Ideal> annihilator_family(const Elem& g, i64 bound) const;

    GradedIdealChain grann_element(const Elem& g, i64 bound) const;
    GradedIdealChain grann_submodule(const std::vector<Elem>& gens, i64 bound) const;

    // Does b_n = f^{-1}(b_{n+1}) hold up to the bound?  This is the f-sequence
    // condition; it makes the tower x-torsion-free.
    bool probe_x_torsion_free(i64 bound) const;

    bool in_ann_of_chain(const GradedIdealChain& B, const Elem& g, i64 bound) const;

    std::string format_elem(const Elem& g) const;

private:
    RingContext ctx_;
    Ideal base_;
    Kind kind_;
    // deque: lazily extended under the lock, handed out by stable reference;
    // shared so towers stay copyable
    struct CompCache {
        std::mutex mutex;
        std::deque<Ideal> components;
    };
    std::shared_ptr<CompCache> cache_;
};

// Prop ex.1-style bounded test: c r^{p^m} ∈ b_n^{[p^m]} for m = w0..bound,
// with b_n the component ideal of the element.  c outside R° draws a warning
// from callers, not from here.
bool test_element_annihilates(const CyclicTower& tower, const Polynomial& c, i64 w0,
                              const CyclicTower::Elem& g, i64 bound);

}  // namespace frobx
