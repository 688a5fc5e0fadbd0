#include "frobx/lattice.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

Ideal unit_ideal(const RingContext& ctx) {
    return Ideal(ctx, {Polynomial::constant(ctx.ambient, 1)});
}

// Adapters give the lattice builder one face over the two backends.
struct FiniteAdapter {
    const FiniteCyclicsModule& M;
    std::vector<FiniteCyclicsModule::Elem> sample;
    i64 bound;

    explicit FiniteAdapter(const FiniteCyclicsModule& m, i64 b) : M(m), bound(b) {
        sample = M.enumerate();
    }
    bool torsion_free() const { return M.is_x_torsion_free(); }
    bool is_zero(const FiniteCyclicsModule::Elem& h) const { return M.is_zero(h); }
    std::string fmt(const FiniteCyclicsModule::Elem& h) const { return M.format_elem(h); }
    GradedIdealChain grann_elem(const FiniteCyclicsModule::Elem& h) const {
        return M.grann_element(h);
    }
    GradedIdealChain grann_sub(const std::vector<FiniteCyclicsModule::Elem>& gens) const {
        return M.grann_submodule(gens);
    }
    std::vector<FiniteCyclicsModule::Elem> ann_members(const GradedIdealChain& B) const {
        return M.ann_of_chain(B);
    }
    bool in_ann(const GradedIdealChain& B, const FiniteCyclicsModule::Elem& g) const {
        return M.in_ann_of_chain(B, g);
    }
};

struct TowerAdapter {
    const CyclicTower& T;
    std::vector<CyclicTower::Elem> sample;
    i64 bound;

    TowerAdapter(const CyclicTower& t, std::vector<CyclicTower::Elem> pool, i64 b)
        : T(t), sample(std::move(pool)), bound(b) {}
    bool torsion_free() const { return T.probe_x_torsion_free(bound); }
    bool is_zero(const CyclicTower::Elem& h) const { return T.is_zero(h); }
    std::string fmt(const CyclicTower::Elem& h) const { return T.format_elem(h); }
    GradedIdealChain grann_elem(const CyclicTower::Elem& h) const {
        return T.grann_element(h, bound);
    }
    GradedIdealChain grann_sub(const std::vector<CyclicTower::Elem>& gens) const {
        return T.grann_submodule(gens, bound);
    }
    std::vector<CyclicTower::Elem> ann_members(const GradedIdealChain& B) const {
        std::vector<CyclicTower::Elem> out;
        for (const auto& g : sample)
            if (T.in_ann_of_chain(B, g, bound)) out.push_back(g);
        return out;
    }
    bool in_ann(const GradedIdealChain& B, const CyclicTower::Elem& g) const {
        return T.in_ann_of_chain(B, g, bound);
    }
};

template <class Adapter>
SpecialIdealLattice build_lattice(const RingContext& ctx, const Adapter& ad, bool complete) {
    if (!ad.torsion_free())
        throw refusal("module fails the x-torsion-freeness probe; run on its torsion-free quotient");

    SpecialIdealLattice L;
    L.ctx = ctx;
    L.complete = complete;

    std::map<std::string, std::pair<Ideal, bool>> found;
    auto put = [&](const Ideal& b, bool cert) {
        auto [it, fresh] = found.emplace(b.key(), std::make_pair(b, cert));
        if (!fresh) it->second.second = it->second.second || cert;
    };
    put(unit_ideal(ctx), true);  // graded annihilator of the zero submodule
    for (const auto& g : ad.sample) {
        auto chain = ad.grann_elem(g);
        put(limit_ideal(chain), chain.certified);
    }
    // close under pairwise intersection
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Ideal, bool>> cur;
        for (const auto& [k, v] : found) cur.push_back(v);
        for (std::size_t i = 0; i < cur.size() && !grew; ++i)
            for (std::size_t j = i + 1; j < cur.size() && !grew; ++j) {
                Ideal meet = intersect(cur[i].first, cur[j].first);
                if (!found.count(meet.key())) {
                    put(meet, cur[i].second && cur[j].second);
                    grew = true;
                }
            }
    }
    for (const auto& [k, v] : found) {
        L.ideals.push_back(v.first);
        L.certified.push_back(v.second);
    }

    std::size_t n = L.ideals.size();
    // intersection-irreducibility stands in for primality: a proper member is
    // flagged iff it is not the meet of its strict containers
    L.prime.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (L.ideals[i].is_unit()) continue;
        Ideal meet = unit_ideal(ctx);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && L.ideals[j].contains(L.ideals[i]))
                meet = intersect(meet, L.ideals[j]);
        L.prime[i] = !(meet == L.ideals[i]);
    }

    // matching annihilator submodules, by sampled membership
    std::vector<std::vector<typename std::decay_t<decltype(ad.sample)>::value_type>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto all = ad.ann_members(principal_chain(L.ideals[i]));
        for (auto& g : all)
            if (!ad.is_zero(g)) members[i].push_back(g);
    }
    L.delta.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& g : members[i]) L.delta[i].push_back(ad.fmt(g));

    auto add_check = [&](std::string name, bool pass, std::string note = "") {
        L.checks.push_back({std::move(name), pass, std::move(note)});
    };

    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i)
            for (std::size_t j = 0; j < n && pass; ++j) {
                if (i == j || !L.ideals[j].contains(L.ideals[i])) continue;
                // b_i ⊆ b_j must reverse to members(i) ⊇ members(j)
                for (const auto& g : members[j]) {
                    auto key = ad.fmt(g);
                    bool present = false;
                    for (const auto& h : members[i])
                        if (ad.fmt(h) == key) { present = true; break; }
                    if (!present) {
                        pass = false;
                        note = "inclusion not reversed at " + format_ideal(L.ideals[i]);
                        break;
                    }
                }
            }
        add_check("delta-order-reversal", pass, note);
    }
    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i) {
            Ideal back = limit_ideal(ad.grann_sub(members[i]));
            if (!(back == L.ideals[i])) {
                pass = false;
                note = "grann of the submodule of " + format_ideal(L.ideals[i]) + " gives " +
                       format_ideal(back);
            }
        }
        add_check("delta-bijection", pass, note);
    }
    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i)
            if (!is_radical_probe(L.ideals[i])) {
                pass = false;
                note = format_ideal(L.ideals[i]) + " is not p-root closed";
            }
        add_check("radicality", pass, note);
    }
    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i)
            for (std::size_t j = i + 1; j < n && pass; ++j) {
                Ideal meet = intersect(L.ideals[i], L.ideals[j]);
                auto joint = members[i];
                for (const auto& g : members[j]) joint.push_back(g);
                Ideal back = limit_ideal(ad.grann_sub(joint));
                if (!(back == meet)) {
                    pass = false;
                    note = "sum of submodules of " + format_ideal(L.ideals[i]) + ", " +
                           format_ideal(L.ideals[j]) + " has grann " + format_ideal(back);
                }
            }
        add_check("intersection-closure", pass, note);
    }
    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i) {
            Ideal meet = unit_ideal(ctx);
            for (std::size_t j = 0; j < n; ++j)
                if (L.prime[j] && L.ideals[j].contains(L.ideals[i]))
                    meet = intersect(meet, L.ideals[j]);
            if (!(meet == L.ideals[i])) {
                pass = false;
                note = format_ideal(L.ideals[i]) + " is not the meet of its primes";
            }
        }
        add_check("prime-intersection", pass, note);
    }
    {
        bool pass = true;
        std::string note;
        for (std::size_t i = 0; i < n && pass; ++i) {
            bool maximal = !L.ideals[i].is_unit();
            for (std::size_t j = 0; j < n && maximal; ++j)
                if (j != i && !L.ideals[j].is_unit() && !(L.ideals[j] == L.ideals[i]) &&
                    L.ideals[j].contains(L.ideals[i]))
                    maximal = false;
            if (!maximal) continue;
            if (!L.prime[i]) {
                pass = false;
                note = "maximal member " + format_ideal(L.ideals[i]) + " is not flagged prime";
                break;
            }
            for (const auto& g : members[i]) {
                Ideal back = limit_ideal(ad.grann_elem(g));
                if (!(back == L.ideals[i])) {
                    pass = false;
                    note = "element " + ad.fmt(g) + " of the minimal submodule has grann " +
                           format_ideal(back);
                    break;
                }
            }
        }
        add_check("maximal-primes-grann", pass, note);
    }
    try {
        Ideal C = smallest_positive_height_ideal(L);
        bool pass = true;
        std::string note;
        GradedIdealChain BC = principal_chain(C);
        for (const auto& g : ad.sample) {
            bool lhs = ad.in_ann(BC, g);
            bool rhs = has_positive_height(limit_ideal(ad.grann_elem(g)));
            if (lhs != rhs) {
                pass = false;
                note = "element " + ad.fmt(g) + ": chain annihilation and positive-height tail disagree";
                break;
            }
        }
        add_check("minimal-height-equivalences", pass, note);
    } catch (const refusal& r) {
        add_check("minimal-height-equivalences", true, std::string("skipped: ") + r.what());
    }

    return L;
}

}  // namespace

bool SpecialIdealLattice::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int SpecialIdealLattice::index_of(const Ideal& b) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i] == b) return static_cast<int>(i);
    return -1;
}

SpecialIdealLattice special_ideal_lattice(const FiniteCyclicsModule& M, i64 bound) {
    FiniteAdapter ad(M, bound);
    return build_lattice(M.context(), ad, true);
}

SpecialIdealLattice special_ideal_lattice(const CyclicTower& T,
                                          const std::vector<CyclicTower::Elem>& pool, i64 bound) {
    TowerAdapter ad(T, pool, bound);
    return build_lattice(T.context(), ad, false);
}

std::vector<Ideal> maximal_special_primes(const SpecialIdealLattice& L) {
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < L.ideals.size(); ++i) {
        if (L.ideals[i].is_unit()) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < L.ideals.size() && maximal; ++j)
            if (j != i && !L.ideals[j].is_unit() && !(L.ideals[j] == L.ideals[i]) &&
                L.ideals[j].contains(L.ideals[i]))
                maximal = false;
        if (maximal) out.push_back(L.ideals[i]);
    }
    return out;
}

Ideal smallest_positive_height_ideal(const SpecialIdealLattice& L) {
    Ideal acc = unit_ideal(L.ctx);
    for (std::size_t i = 0; i < L.ideals.size(); ++i) {
        if (!L.prime[i]) continue;
        if (has_positive_height(L.ideals[i])) acc = intersect(acc, L.ideals[i]);
    }
    return acc;
}

Ga4Report split_ga4(const CyclicTower& T, const std::vector<CyclicTower::Elem>& pool,
                    const RadicalDecomposition& b, const std::vector<int>& U, i64 bound) {
    Ga4Report rep;
    auto add = [&](std::string name, bool pass, std::string note = "") {
        rep.checks.push_back({std::move(name), pass, std::move(note)});
    };

    std::size_t t = b.components.size();
    std::vector<bool> in_u(t, false);
    bool valid = t >= 2 && !U.empty() && U.size() < t;
    for (int idx : U) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= t) valid = false;
        else in_u[static_cast<std::size_t>(idx)] = true;
    }
    add("partition", valid, valid ? "" : "need >= 2 components and a proper nonempty index set");
    if (!valid) return rep;

    std::vector<Ideal> ucomp, vcomp;
    for (std::size_t i = 0; i < t; ++i)
        (in_u[i] ? ucomp : vcomp).push_back(b.components[i]);
    RadicalDecomposition urd{b.ctx, ucomp};
    Ideal a = expand(urd);
    Ideal c = expand(RadicalDecomposition{b.ctx, vcomp});
    rep.inner_ideal = format_ideal(a);

    auto inside = [&](const Ideal& ideal) {
        std::vector<CyclicTower::Elem> mem;
        GradedIdealChain ch = principal_chain(ideal);
        for (const auto& g : pool)
            if (!T.is_zero(g) && T.in_ann_of_chain(ch, g, bound)) mem.push_back(g);
        return mem;
    };
    auto inner = inside(a);
    auto whole = inside(expand(b));

    bool nonzero = !inner.empty();
    bool proper = inner.size() < whole.size();
    add("submodule-proper-nonzero", nonzero && proper,
        nonzero ? (proper ? "" : "U-part submodule swallows the whole annihilator")
                : "no sampled element annihilated by the U-part");

    Ideal back = limit_ideal(T.grann_submodule(inner, bound));
    add("grann-recovers-inner", back == a,
        back == a ? "" : "recovered " + format_ideal(back));

    RadicalDecomposition quot = colon_rd(b, urd);
    Ideal quot_ideal = expand(quot);
    rep.quotient_ideal = format_ideal(quot_ideal);
    add("colon-complement", quot_ideal == c,
        quot_ideal == c ? "" : "colon side expands to " + format_ideal(quot_ideal));

    rep.ok = true;
    for (const auto& chk : rep.checks) rep.ok = rep.ok && chk.pass;
    return rep;
}

Ga15Report ga15_equivalence_check(const FiniteCyclicsModule& H, i64 bound) {
    Ga15Report rep;
    rep.m0 = H.hsl_number();
    FiniteCyclicsModule G = H.torsion_free_quotient();
    SpecialIdealLattice L = special_ideal_lattice(G, bound);
    Ideal C = smallest_positive_height_ideal(L);
    rep.bound_ideal = format_ideal(C);

    const RingContext& ctx = H.context();
    Ideal shifted = frobenius_power(C, rep.m0);
    GradedIdealChain B{ctx, {}, rep.m0, true};
    for (i64 m = 0; m < rep.m0; ++m) B.entries.emplace_back(ctx, std::vector<Polynomial>{});
    B.entries.push_back(shifted);

    bool pass = true;
    for (const auto& h : H.enumerate()) {
        bool lhs = has_positive_height(H.tail_annihilator(h));
        bool rhs = H.in_ann_of_chain(B, h);
        if (lhs != rhs) {
            pass = false;
            rep.counterexamples.push_back(H.format_elem(h));
        }
    }
    rep.checks.push_back({"tail-vs-shifted-annihilation", pass,
                          pass ? "" : std::to_string(rep.counterexamples.size()) + " counterexamples"});
    rep.checks.push_back({"lattice-checks", L.all_checks_pass(), ""});
    rep.ok = pass && L.all_checks_pass();
    return rep;
}

}  // namespace frobx
