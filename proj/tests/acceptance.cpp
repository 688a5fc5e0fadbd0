// Release gate: one line per criterion, wall-clock budgets enforced in code.
// Exit status is nonzero when any line fails, so ctest can hold the door.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "frobx/cech.hpp"
#include "frobx/lattice.hpp"

using namespace frobx;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    const char* label;
    bool (*run)(std::string& why);
    i64 budget_ms;
};

Polynomial vpow(const RingPtr& R, std::size_t i, i64 e) {
    Polynomial out = Polynomial::constant(R, 1);
    for (i64 k = 0; k < e; ++k) out = out * Polynomial::variable(R, i);
    return out;
}

Polynomial rand_poly(std::mt19937& rng, const RingPtr& R, int max_deg, int max_terms) {
    std::uniform_int_distribution<i64> coeff(1, R->characteristic() - 1);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Polynomial out = Polynomial::zero(R);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        int budget = deg(rng);
        Polynomial term = Polynomial::constant(R, coeff(rng));
        for (std::size_t v = 0; v < R->nvars() && budget > 0; ++v) {
            std::uniform_int_distribution<int> part(0, budget);
            int e = part(rng);
            term = term * vpow(R, v, e);
            budget -= e;
        }
        out = out + term;
    }
    return out;
}

Polynomial rand_poly_nonzero(std::mt19937& rng, const RingPtr& R, int max_deg, int max_terms) {
    for (int tries = 0; tries < 32; ++tries) {
        Polynomial f = rand_poly(rng, R, max_deg, max_terms);
        if (!f.is_zero()) return f;
    }
    return Polynomial::constant(R, 1);
}

// ---- 1: deterministic bases, coherent membership --------------------------

bool crit_groebner(std::string& why) {
    std::mt19937 rng(20260801);
    const i64 primes[] = {2, 3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        i64 p = primes[trial % 3];
        std::uniform_int_distribution<int> nv(1, 3);
        int vars = nv(rng);
        std::vector<std::string> names = {"x", "y", "z"};
        names.resize(static_cast<std::size_t>(vars));
        RingPtr R = make_ring(p, names);

        std::uniform_int_distribution<int> ng(2, 4);
        std::vector<Polynomial> gens;
        int count = ng(rng);
        for (int i = 0; i < count; ++i) gens.push_back(rand_poly_nonzero(rng, R, 4, 3));

        Ideal a(R, gens);
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Ideal b(R, shuffled);
        if (!(a.groebner() == b.groebner())) {
            why = "basis changed under generator permutation (trial " + std::to_string(trial) + ")";
            return false;
        }
        for (const auto& g : gens)
            if (!member(g, a) || !member(g, b)) {
                why = "generator fell out of its own ideal (trial " + std::to_string(trial) + ")";
                return false;
            }
        Polynomial r = rand_poly(rng, R, 4, 3);
        if (member(r, a) != member(r, b)) {
            why = "membership disagreed across presentations (trial " + std::to_string(trial) + ")";
            return false;
        }
    }
    return true;
}

// ---- 2: p^e-th root ideal vs direct power test ----------------------------

bool crit_preimage(std::string& why) {
    std::mt19937 rng(20260802);
    const i64 primes[] = {2, 3, 5};
    // A few q=25 instances hit the engine's reduction budget; those must fail
    // loudly, stay rare, and never corrupt the cross-check on the rest.
    int budget_trips = 0;
    for (int trial = 0; trial < 500; ++trial) {
        i64 p = primes[trial % 3];
        RingPtr R = make_ring(p, {"x", "y"});
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> ng(1, 3);
        int count = ng(rng);
        for (int i = 0; i < count; ++i) gens.push_back(rand_poly_nonzero(rng, R, 4, 3));
        Ideal b(R, gens);

        std::uniform_int_distribution<i64> ed(1, 2);
        i64 e = ed(rng);
        Polynomial r = rand_poly(rng, R, 3, 3);
        try {
            bool via_preimage = member(r, frobenius_preimage(b, e));
            bool via_power = member(frobenius_pow(r, e), b);
            if (via_preimage != via_power) {
                why = "root ideal disagreed with the direct power test (trial " +
                      std::to_string(trial) + ")";
                return false;
            }
        } catch (const resource_error&) {
            ++budget_trips;
        }
    }
    if (budget_trips > 5) {
        why = "reduction budget tripped on " + std::to_string(budget_trips) + " of 500 trials";
        return false;
    }
    return true;
}

// ---- 3: closure is the identity over a polynomial ring --------------------

bool crit_regular_closure(std::string& why) {
    std::mt19937 rng(20260803);
    const i64 primes[] = {2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        RingPtr R = make_ring(primes[trial % 3], {"x", "y"});
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> ng(1, 3);
        int count = ng(rng);
        for (int i = 0; i < count; ++i) gens.push_back(rand_poly_nonzero(rng, R, 4, 3));
        Ideal a(R, gens);
        auto [closure, stabilized] = frobenius_closure(a, 3);
        if (!stabilized || !(closure == a)) {
            why = "closure moved an ideal of a regular ring (trial " + std::to_string(trial) + ")";
            return false;
        }
    }
    return true;
}

// ---- 4: a genuinely closed-up element on the pinch point ------------------

bool crit_pinch_closure(std::string& why) {
    RingPtr R = make_ring(2, {"x", "y", "z"});
    RingContext ctx = RingContext::of(QuotientRing::make(R, {parse_poly(R, "z^2+x^2*y")}, true));
    Ideal a(ctx, parse_poly_list(R, "x,y"));
    Polynomial z = parse_poly(R, "z");

    if (member(z, a)) {
        why = "z already in (x, y)";
        return false;
    }
    auto [step1, ignored] = frobenius_closure(a, 1);
    (void)ignored;
    if (!member(z, step1)) {
        why = "z missing from the first closure step";
        return false;
    }
    auto [closure, stabilized] = frobenius_closure(a, 2);
    if (!stabilized || !(closure == Ideal(ctx, parse_poly_list(R, "x,y,z")))) {
        why = "closure failed to settle at (x, y, z)";
        return false;
    }
    return true;
}

// ---- 5: annihilator lattice of the coordinate cross -----------------------

bool crit_cross_lattice(std::string& why) {
    RingContext ctx = RingContext::of(make_ring(2, {"s", "t"}));
    auto gen = [&](const char* csv) { return Ideal(ctx, parse_poly_list(ctx.ambient, csv)); };
    CyclicTower T(ctx, gen("s*t"), CyclicTower::Kind::constant);

    // the hand identity behind every chain below: ((st) : s^k) = (t)
    for (i64 k = 1; k <= 8; ++k) {
        Polynomial sk = vpow(ctx.ambient, 0, k);
        if (!(colon(gen("s*t"), Ideal(ctx, {sk})) == gen("t"))) {
            why = "colon identity broke at k = " + std::to_string(k);
            return false;
        }
    }

    std::vector<CyclicTower::Elem> pool = {
        T.element(0, parse_poly(ctx.ambient, "s")), T.element(0, parse_poly(ctx.ambient, "t")),
        T.element(0, parse_poly(ctx.ambient, "s+t")), T.element(0, parse_poly(ctx.ambient, "1"))};
    SpecialIdealLattice L = special_ideal_lattice(T, pool, 8);

    std::set<std::string> keys;
    for (const auto& b : L.ideals) keys.insert(b.key());
    std::set<std::string> expect = {gen("s").key(), gen("t").key(), gen("s*t").key(),
                                    gen("1").key()};
    if (keys != expect) {
        why = "lattice members differ from {(s), (t), (st), R}";
        return false;
    }
    if (!L.all_checks_pass()) {
        for (const auto& c : L.checks)
            if (!c.pass) why += "check failed: " + c.name + " (" + c.note + "); ";
        return false;
    }
    for (const auto& b : L.ideals)
        if (!is_radical_probe(b)) {
            why = "non-radical lattice member " + format_ideal(b);
            return false;
        }
    for (const auto& a : L.ideals)
        for (const auto& b : L.ideals)
            if (L.index_of(intersect(a, b)) < 0) {
                why = "intersection escaped the lattice";
                return false;
            }
    // every member is the intersection of the primes above it
    for (std::size_t i = 0; i < L.ideals.size(); ++i) {
        Ideal meet = Ideal(ctx, {Polynomial::constant(ctx.ambient, 1)});
        for (std::size_t j = 0; j < L.ideals.size(); ++j)
            if (L.prime[j] && L.ideals[j].contains(L.ideals[i]))
                meet = intersect(meet, L.ideals[j]);
        if (!L.ideals[i].is_unit() && !(meet == L.ideals[i])) {
            why = "member " + format_ideal(L.ideals[i]) + " is not a meet of primes";
            return false;
        }
    }

    auto maximal = maximal_special_primes(L);
    std::set<std::string> maxkeys;
    for (const auto& m : maximal) maxkeys.insert(m.key());
    if (maxkeys != std::set<std::string>{gen("s").key(), gen("t").key()}) {
        why = "maximal primes are not {(s), (t)}";
        return false;
    }
    if (!(smallest_positive_height_ideal(L) == gen("s*t"))) {
        why = "minimal positive-height member is not (st)";
        return false;
    }
    return true;
}

// ---- 6: exhaustive finite-module suite ------------------------------------

bool chain_entry_subset(const GradedIdealChain& inner, const GradedIdealChain& outer,
                        i64 horizon) {
    for (i64 n = 0; n <= horizon; ++n)
        if (!chain_entry_at(outer, n).contains(chain_entry_at(inner, n))) return false;
    return true;
}

bool chain_entry_equal(const GradedIdealChain& a, const GradedIdealChain& b, i64 horizon) {
    return chain_entry_subset(a, b, horizon) && chain_entry_subset(b, a, horizon);
}

bool crit_finite_suite(std::string& why) {
    RingContext ctx = RingContext::of(make_ring(2, {"t"}));
    auto gen = [&](const char* csv) { return Ideal(ctx, parse_poly_list(ctx.ambient, csv)); };
    const i64 horizon = 6;

    std::vector<std::vector<const char*>> shapes = {
        {"t"}, {"t^2"}, {"t^3"}, {"t", "t"}, {"t", "t^2"}, {"t", "t", "t"}};
    for (std::size_t si = 0; si < shapes.size(); ++si) {
        std::vector<Ideal> summands;
        std::vector<Polynomial> units;
        for (const char* csv : shapes[si]) {
            summands.push_back(gen(csv));
            units.push_back(Polynomial::constant(ctx.ambient, 1));
        }
        auto M = FiniteCyclicsModule::diagonal(ctx, summands, units);
        const auto& all = M.enumerate();
        std::string tag = " (module " + std::to_string(si) + ")";

        // torsion bookkeeping is consistent with direct orbit inspection
        for (const auto& h : all) {
            auto [pre, per] = M.orbit_shape(h);
            bool dies = per == 1 && M.is_zero([&] {
                auto cur = h;
                for (i64 k = 0; k < pre; ++k) cur = M.x_act(cur);
                return cur;
            }());
            bool listed = false;
            for (const auto& g : M.gamma_x())
                if (M.elem_key(g) == M.elem_key(h)) listed = true;
            if (dies != listed) {
                why = "torsion set disagrees with orbits" + tag;
                return false;
            }
        }
        i64 hsl = M.hsl_number();
        if (si == 1 && hsl != 1) {  // R/(t^2): t survives one twist, not two
            why = "hsl of R/(t^2) is " + std::to_string(hsl) + ", wanted 1";
            return false;
        }

        // annihilator Galois connection, element by element
        for (const auto& h : all) {
            GradedIdealChain gh = M.grann_element(h);
            if (!M.in_ann_of_chain(gh, h)) {
                why = "element escapes its own annihilator chain" + tag;
                return false;
            }
            for (const auto& h2 : all) {
                GradedIdealChain pair = M.grann_submodule({h, h2});
                if (!chain_entry_subset(pair, gh, horizon)) {
                    why = "annihilators failed to shrink under larger submodules" + tag;
                    return false;
                }
            }
            GradedIdealChain triple = M.grann_submodule(M.ann_of_chain(gh));
            if (!chain_entry_equal(triple, gh, horizon)) {
                why = "closure operator failed to idempote" + tag;
                return false;
            }
        }
        for (const char* csv : {"t", "t^2", "t^3"}) {
            GradedIdealChain B = principal_chain(gen(csv));
            GradedIdealChain back = M.grann_submodule(M.ann_of_chain(B));
            if (!chain_entry_subset(B, back, horizon)) {
                why = "chain not recovered from its annihilator submodule" + tag;
                return false;
            }
        }
        {
            GradedIdealChain narrow = principal_chain(gen("t^2"));
            GradedIdealChain wide = principal_chain(gen("t"));
            auto killed_wide = M.ann_of_chain(wide);
            auto killed_narrow = M.ann_of_chain(narrow);
            std::set<std::string> nk;
            for (const auto& h : killed_narrow) nk.insert(M.elem_key(h));
            for (const auto& h : killed_wide)
                if (!nk.count(M.elem_key(h))) {
                    why = "bigger chains kill more elements, not fewer" + tag;
                    return false;
                }
        }

        // quotients by annihilator submodules stay torsion-free
        auto G = M.torsion_free_quotient();
        if (G.rank() > 0) {
            for (const auto& g : G.enumerate()) {
                auto A = G.ann_of_chain(G.grann_element(g));
                std::set<std::string> inside;
                for (const auto& h : A) inside.insert(G.elem_key(h));
                for (const auto& h : G.enumerate())
                    if (inside.count(G.elem_key(G.x_act(h))) && !inside.count(G.elem_key(h))) {
                        why = "quotient by an annihilator submodule has torsion" + tag;
                        return false;
                    }
            }
        }

        Ga15Report rep = ga15_equivalence_check(M, 8);
        if (!rep.ok || !rep.counterexamples.empty()) {
            why = "tail/shift equivalence produced " +
                  std::to_string(rep.counterexamples.size()) + " counterexamples" + tag;
            return false;
        }
    }
    return true;
}

// ---- 7: closure verdict on the coordinate cross ---------------------------

bool crit_node_verdict(std::string& why) {
    RingPtr R = make_ring(2, {"s", "t"});
    RingContext ctx = RingContext::of(QuotientRing::make(R, {parse_poly(R, "s*t")}, true));
    auto gen = [&](const char* csv) { return Ideal(ctx, parse_poly_list(R, csv)); };

    SopData s = make_sop(ctx, {parse_poly(R, "s+t")});
    if (!s.verified) {
        why = "s+t rejected as a parameter";
        return false;
    }

    TcReport rep = tc_param_membership_chain(s, parse_poly(R, "s"), 1, 4);
    if (rep.member != "true" || !rep.positive_height || !rep.stabilized) {
        why = "membership verdict for s was " + rep.member;
        return false;
    }
    if (!(*rep.limit == gen("s,t"))) {
        why = "chain limit is " + format_ideal(*rep.limit) + ", wanted (s, t)";
        return false;
    }

    // s^2 = s(s+t) here, so the square must come back an immediate member
    TcReport sq = tc_param_membership_test(s, parse_poly(R, "s^2"), 1, parse_poly(R, "s+t"), 0, 4);
    if (sq.member != "true") {
        why = "s^2 rejected despite the integral identity";
        return false;
    }

    EnescuReport en = enescu_zqr(s, {parse_poly(R, "s"), parse_poly(R, "t")}, 4);
    if (en.maximal.size() != 1 || !(en.maximal[0] == gen("s,t"))) {
        why = "maximal q-ideal is not (s, t)";
        return false;
    }
    if (!is_radical_probe(en.maximal[0])) {
        why = "maximal q-ideal failed the radical probe";
        return false;
    }
    return true;
}

// ---- 8: nothing closes up over a polynomial ring --------------------------

bool crit_regular_triviality(std::string& why) {
    RingContext ctx = RingContext::of(make_ring(2, {"x", "y"}));
    SopData s = make_sop(ctx, {parse_poly(ctx.ambient, "x"), parse_poly(ctx.ambient, "y")});
    TcReport rep = tc_param_membership_chain(s, parse_poly(ctx.ambient, "1"), 1, 4);
    if (rep.member != "false" || rep.positive_height) {
        why = "unit class verdict was " + rep.member;
        return false;
    }
    if (!rep.limit->is_zero_ideal()) {
        why = "chain limit is " + format_ideal(*rep.limit) + ", wanted (0)";
        return false;
    }
    EnescuReport en = enescu_zqr(s, {parse_poly(ctx.ambient, "1")}, 4);
    if (en.maximal.size() != 1 || !en.maximal[0].is_zero_ideal()) {
        why = "maximal q-ideal over the regular ring is not (0)";
        return false;
    }
    return true;
}

// ---- 9: diagonal cubic regression baseline --------------------------------

bool crit_cubic_baseline(std::string& why) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    RingContext ctx = RingContext::of(QuotientRing::make(R, {parse_poly(R, "x^3+y^3+z^3")}, true));
    SopData s = make_sop(ctx, {parse_poly(R, "x"), parse_poly(R, "y")});
    Polynomial r = parse_poly(R, "z^2");

    if (member(r, param_power_ideal(s, 1))) {
        why = "z^2 already inside (x, y)";
        return false;
    }
    TcReport rep = tc_param_membership_chain(s, r, 1, 2);
    if (!rep.chain || !validate_chain(*rep.chain)) {
        why = "report lacks an ascending chain";
        return false;
    }
    if (!rep.positive_height) {
        why = "top chain entry has height zero";
        return false;
    }
    // recorded baseline from this implementation's first run
    if (rep.member != "true" || !(*rep.limit == Ideal(ctx, parse_poly_list(R, "x,y,z")))) {
        why = "baseline drifted: member " + rep.member + ", limit " + format_ideal(*rep.limit);
        return false;
    }
    return true;
}

const Criterion kCriteria[] = {
    {1, "groebner determinism and membership", crit_groebner, 60000},
    {2, "frobenius root-ideal oracle", crit_preimage, 60000},
    {3, "regular-ring frobenius closure", crit_regular_closure, 120000},
    {4, "pinch-point closure instance", crit_pinch_closure, 5000},
    {5, "coordinate-cross annihilator lattice", crit_cross_lattice, 30000},
    {6, "exhaustive finite-module suite", crit_finite_suite, 30000},
    {7, "nodal tight-closure verdict", crit_node_verdict, 30000},
    {8, "regular-ring triviality", crit_regular_triviality, 10000},
    {9, "diagonal-cubic chain baseline", crit_cubic_baseline, 300000},
};

}  // namespace

int main() {
    int failures = 0;
    for (const auto& c : kCriteria) {
        std::string why;
        bool ok = false;
        auto start = Clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (ok && ms > c.budget_ms) {
            ok = false;
            why = "over budget";
        }
        std::printf("[%s] %d %s (%lld ms, budget %lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.label, static_cast<long long>(ms), static_cast<long long>(c.budget_ms),
                    why.empty() ? "" : ": ", why.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
