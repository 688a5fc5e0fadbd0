#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "frobx/skew.hpp"

namespace frobx {

// ⊕_i R/J_i as a left R[x,f]-module, with the x-action given by a matrix of
// multipliers: x(e_j) = Σ_i u_{ij} e_i composed with the Frobenius on inputs.
// Designed for exhaustive checking, so summands are zero-dimensional whenever
// an operation needs the full element list.
class FiniteCyclicsModule {
public:
    using Elem = std::vector<Polynomial>;  // canonical representative per summand

    static FiniteCyclicsModule make(RingContext ctx, std::vector<Ideal> summands,
                                    std::vector<std::vector<Polynomial>> x_matrix);
    // X = diag(u_1..u_k) ∘ Frobenius; the common case in tests and the CLI.
    static FiniteCyclicsModule diagonal(RingContext ctx, std::vector<Ideal> summands,
                                        std::vector<Polynomial> units);

    const RingContext& context() const { return ctx_; }
    const std::vector<Ideal>& summands() const { return summands_; }
    std::size_t rank() const { return summands_.size(); }
    bool is_diagonal() const { return diag_; }

    Elem element(std::vector<Polynomial> reps) const;
    Elem zero() const;
    bool is_zero(const Elem& h) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem scale(const Polynomial& r, const Elem& h) const;
    Elem x_act(const Elem& h) const;

    std::string elem_key(const Elem& h) const;
    std::string format_elem(const Elem& h) const;

    // Every element; cached.  Requires zero-dimensional summands and a modest
    // total count.
    const std::vector<Elem>& enumerate() const;

    // (preperiod, period) of the x-orbit; always defined, the orbit lives in a
    // finite set.
    std::pair<i64, i64> orbit_shape(const Elem& h) const;

    std::vector<Elem> gamma_x() const;  // exact x-torsion set
    bool is_x_torsion_free() const;
    i64 hsl_number() const;  // least e with x^e killing gamma_x

    // R-annihilator of one element: ∩_i (J_i : r_i).
    Ideal ann_element(const Elem& h) const;

    // Annihilator of the orbit tail cycle; the c's with c x^n h = 0 for n ≫ 0.
    Ideal tail_annihilator(const Elem& h) const;

    // Exact graded annihilator chains: orbits repeat, so the infinite suffix
    // intersections collapse to one period's worth of colons.
    GradedIdealChain grann_element(const Elem& h) const;
    GradedIdealChain grann_submodule(const std::vector<Elem>& gens) const;

    std::vector<Elem> ann_of_chain(const GradedIdealChain& B) const;
    bool in_ann_of_chain(const GradedIdealChain& B, const Elem& h) const;

    // H/Γ_x as a module of the same shape; diagonal actions only.  Summands
    // whose image is zero are dropped; the result is validated against the
    // exhaustive torsion set.
    FiniteCyclicsModule torsion_free_quotient() const;

private:
    FiniteCyclicsModule() = default;
    void require_enumerable() const;

    RingContext ctx_;
    std::vector<Ideal> summands_;
    std::vector<std::vector<Polynomial>> xmat_;
    bool diag_ = true;
    struct EnumCache {
        std::once_flag flag;
        std::vector<Elem> elements;
    };
    std::shared_ptr<EnumCache> cache_;
};

}  // namespace frobx
