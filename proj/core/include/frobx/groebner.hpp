#pragma once

#include <vector>

#include "frobx/poly.hpp"

namespace frobx {

struct GroebnerBudget {
    std::size_t max_pairs = 200000;  // S-pairs processed before giving up
    // Term operations spent reducing before giving up.  Pair counts alone do
    // not bound runtime: a single division chain on dense high-degree
    // intermediates can grind for hours while processing few pairs.
    std::size_t max_reduction_ops = 50000000;
};

// Remainder of f under multivariate division by basis: f - result lies in the
// ideal generated by basis and no monomial of the result is divisible by a
// leading monomial of basis.  Deterministic for canonical inputs.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget = {});

// The unique reduced Groebner basis (monic, inter-reduced, sorted by
// decreasing leading monomial) of the ideal generated by gens, under the
// ring's order.  Independent of generator order or duplication.
std::vector<Polynomial> reduced_groebner(const RingPtr& ring, std::vector<Polynomial> gens,
                                         const GroebnerBudget& budget = {});

// Reduced Groebner basis of (ideal ∩ subring spanned by the last n-k
// variables), returned over the original ring and its order.
std::vector<Polynomial> eliminate(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  int first_k, const GroebnerBudget& budget = {});

}  // namespace frobx
