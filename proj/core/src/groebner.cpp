#include "frobx/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace frobx {

namespace {

Polynomial reduce_bounded(const Polynomial& f, const std::vector<Polynomial>& basis,
                          std::size_t cap, std::size_t& spent) {
    const RingPtr& ring = f.ring();
    const i64 p = ring->characteristic();

    Polynomial rem = Polynomial::zero(ring);
    Polynomial h = f;
    while (!h.is_zero()) {
        spent += 1 + h.terms().size();
        if (spent > cap)
            throw resource_error("reduction work budget exhausted (" + std::to_string(cap) + ")");
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.leading_monomial().divides(lt.m)) continue;
            Term factor{fp_mul(lt.c, fp_inv(g.leading_coeff(), p), p), lt.m.over(g.leading_monomial())};
            h = h - g.times_term(factor);
            spent += g.terms().size();
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + Polynomial::monomial(ring, lt.c, lt.m);
            h = h - Polynomial::monomial(ring, lt.c, lt.m);
        }
    }
    return rem;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget) {
    for (const auto& g : basis) check_same_ring(f.ring(), g.ring());
    std::size_t spent = 0;
    return reduce_bounded(f, basis, budget.max_reduction_ops, spent);
}

namespace {

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
    const i64 p = f.ring()->characteristic();
    Monomial l = f.leading_monomial().lcm_with(g.leading_monomial());
    Term tf{fp_inv(f.leading_coeff(), p), l.over(f.leading_monomial())};
    Term tg{fp_inv(g.leading_coeff(), p), l.over(g.leading_monomial())};
    return f.times_term(tf) - g.times_term(tg);
}

}  // namespace

std::vector<Polynomial> reduced_groebner(const RingPtr& ring, std::vector<Polynomial> gens,
                                         const GroebnerBudget& budget) {
    for (const auto& g : gens) check_same_ring(ring, g.ring());

    std::vector<Polynomial> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return {};

    // Seed deterministically: the basis evolves identically for any
    // permutation of equal generator sets.
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->cmp(a.leading_monomial(), b.leading_monomial()) < 0 ||
               (a.leading_monomial() == b.leading_monomial() && a.terms().size() < b.terms().size());
    });
    G.erase(std::unique(G.begin(), G.end()), G.end());

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        i64 deg;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = ring->cmp(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = G[i].leading_monomial().lcm_with(G[j].leading_monomial());
            // product criterion: coprime leading monomials reduce to zero
            if (l == G[i].leading_monomial().times(G[j].leading_monomial())) continue;
            queue.push_back({i, j, l, l.degree()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    std::size_t spent = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        if (++processed > budget.max_pairs)
            throw resource_error("Buchberger pair budget exhausted (" +
                                 std::to_string(budget.max_pairs) + ")");
        Polynomial h = reduce_bounded(s_poly(G[pr.i], G[pr.j]), G, budget.max_reduction_ops, spent);
        if (h.is_zero()) continue;
        G.push_back(h.monic());
        push_pairs(G.size() - 1);
    }

    // minimalize: drop any element whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial &mi = G[i].leading_monomial(), &mj = G[j].leading_monomial();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(G[i]);
    }

    // tail-reduce each element against the others: the reduced basis is unique
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_bounded(minimal[i], others, budget.max_reduction_ops, spent);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

std::vector<Polynomial> eliminate(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  int first_k, const GroebnerBudget& budget) {
    if (first_k < 0 || first_k > static_cast<int>(ring->nvars()))
        throw parse_error("eliminate: block size out of range");
    if (first_k == 0) return reduced_groebner(ring, gens, budget);

    RingPtr elim_ring = make_ring(ring->characteristic(), ring->vars(),
                                  MonomialOrder{OrderKind::elim, first_k});
    std::vector<int> id(ring->nvars());
    std::iota(id.begin(), id.end(), 0);

    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) moved.push_back(transplant(g, elim_ring, id));

    std::vector<Polynomial> kept;
    for (const auto& g : reduced_groebner(elim_ring, std::move(moved), budget)) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < first_k && pure; ++i)
                if (t.m.e[static_cast<std::size_t>(i)] != 0) pure = false;
        if (pure) kept.push_back(transplant(g, ring, id));
    }
    // a Groebner basis under the block order need not be one under the
    // caller's order; re-reduce to get the canonical presentation
    return reduced_groebner(ring, std::move(kept), budget);
}

}  // namespace frobx
