#include "frobx/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

// Fresh variable name not already used by the ring.
std::string fresh_var_name(const PolyRing& ring, std::string base) {
    while (ring.var_index(base) >= 0) base += "_";
    return base;
}

// Ambient ring with one auxiliary variable prepended, ordered so that the
// auxiliary block is eliminated first.  Returns the new ring and the variable
// map old-index -> new-index for transplanting.
std::pair<RingPtr, std::vector<int>> prepend_aux_var(const RingPtr& ring, const std::string& base) {
    std::vector<std::string> vars;
    vars.push_back(fresh_var_name(*ring, base));
    for (const auto& v : ring->vars()) vars.push_back(v);
    auto extended = make_ring(ring->characteristic(), vars, MonomialOrder{OrderKind::elim, 1});
    std::vector<int> var_map(ring->nvars());
    for (int i = 0; i < ring->nvars(); ++i) var_map[i] = i + 1;
    return {extended, var_map};
}

// f / g for f in the principal ideal (g); exact by construction.
Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    Polynomial h = f;
    std::vector<Term> quot;
    while (!h.is_zero()) {
        if (!g.leading_monomial().divides(h.leading_monomial()))
            throw error("internal: inexact division");
        i64 p = h.ring()->characteristic();
        Term t{fp_mul(h.leading_coeff(), fp_inv(g.leading_coeff(), p), p),
               h.leading_monomial().over(g.leading_monomial())};
        quot.push_back(t);
        h = h - g.times_term(t);
    }
    return Polynomial::from_terms(f.ring(), std::move(quot));
}

// Max size of a variable subset S with no leading monomial supported inside S.
// Standard independent-set reading of the leading-term ideal; the orders in use
// are all global, so dim LT(a) = dim a.
i64 dimension_from_leading_terms(const PolyRing& ring, const std::vector<Polynomial>& gb) {
    int n = ring.nvars();
    if (n > 20) throw resource_error("dimension: too many variables for subset search");
    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb) lms.push_back(g.leading_monomial());
    i64 best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : lms) {
            bool supported = true;
            for (int i = 0; i < n && supported; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) supported = false;
            if (supported) { independent = false; break; }
        }
        if (independent) best = std::max<i64>(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<Polynomial> groebner_of_lift(const RingContext& ctx, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> all = gens;
    if (const auto* def = ctx.defining())
        all.insert(all.end(), def->begin(), def->end());
    return reduced_groebner(ctx.ambient, all);
}

}  // namespace

// ---- QuotientRing / RingContext ------------------------------------------

QuotPtr QuotientRing::make(const RingPtr& ambient, std::vector<Polynomial> defining,
                           bool equidimensional_assumed) {
    for (const auto& g : defining) check_same_ring(*ambient, *g.ring());
    auto gb = reduced_groebner(ambient, defining);
    if (gb.size() == 1 && gb[0].is_constant())
        throw refusal("quotient by the unit ideal is the zero ring");
    auto q = std::shared_ptr<QuotientRing>(new QuotientRing());
    q->ambient_ = ambient;
    q->defining_gb_ = std::move(gb);
    q->equidim_ = equidimensional_assumed;
    q->dim_ = dimension_from_leading_terms(*ambient, q->defining_gb_);
    return q;
}

bool QuotientRing::operator==(const QuotientRing& other) const {
    return *ambient_ == *other.ambient_ && defining_gb_ == other.defining_gb_;
}

RingContext RingContext::of(QuotPtr q) {
    RingContext ctx;
    ctx.ambient = q->ambient();
    ctx.quot = std::move(q);
    return ctx;
}

i64 RingContext::ring_dimension() const {
    return quot ? quot->dimension() : ambient->nvars();
}

const std::vector<Polynomial>* RingContext::defining() const {
    return quot ? &quot->defining_groebner() : nullptr;
}

bool RingContext::operator==(const RingContext& other) const {
    if (!(*ambient == *other.ambient)) return false;
    if (!quot != !other.quot) return false;
    return !quot || *quot == *other.quot;
}

void check_same_context(const RingContext& a, const RingContext& b) {
    if (!(a == b)) throw ring_mismatch("operands live in different rings");
}

// ---- Ideal ---------------------------------------------------------------

Ideal::Ideal(RingContext ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cell_(std::make_shared<Cell>()) {
    for (const auto& g : gens_) check_same_ring(*ctx_.ambient, *g.ring());
}

Ideal::Ideal(const RingPtr& ring, std::vector<Polynomial> gens)
    : Ideal(RingContext::of(ring), std::move(gens)) {}

Ideal::Ideal(const QuotPtr& q, std::vector<Polynomial> gens)
    : Ideal(RingContext::of(q), std::move(gens)) {}

const std::vector<Polynomial>& Ideal::groebner() const {
    std::call_once(cell_->flag, [this] { cell_->gb = groebner_of_lift(ctx_, gens_); });
    return cell_->gb;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero_ideal() const {
    const auto* def = ctx_.defining();
    if (!def) return groebner().empty();
    return groebner() == *def;
}

bool Ideal::contains(const Ideal& other) const {
    check_same_context(ctx_, other.ctx_);
    for (const auto& g : other.groebner())
        if (!normal_form(g, groebner()).is_zero()) return false;
    return true;
}

bool Ideal::operator==(const Ideal& other) const {
    check_same_context(ctx_, other.ctx_);
    return groebner() == other.groebner();
}

std::string Ideal::key() const {
    return format_poly_list(groebner());
}

std::string format_ideal(const Ideal& a) {
    const auto& gb = a.groebner();
    if (gb.empty()) return "(0)";
    return "(" + format_poly_list(gb) + ")";
}

// ---- operations ----------------------------------------------------------

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_context(a.context(), b.context());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.context(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    check_same_context(a.context(), b.context());
    const auto& ring = a.ring();
    auto [ext, var_map] = prepend_aux_var(ring, "t");
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.groebner()) gens.push_back(t * transplant(g, ext, var_map));
    for (const auto& g : b.groebner()) gens.push_back(one_minus_t * transplant(g, ext, var_map));
    auto pure = eliminate(ext, gens, 1);
    std::vector<int> back(ext->nvars(), -1);
    for (int i = 0; i < ring->nvars(); ++i) back[i + 1] = i;
    std::vector<Polynomial> result;
    for (const auto& g : pure) result.push_back(transplant(g, ring, back));
    return Ideal(a.context(), std::move(result));
}

Ideal colon(const Ideal& a, const Ideal& b) {
    check_same_context(a.context(), b.context());
    if (b.is_zero_ideal())
        throw error("colon by the zero ideal is the whole ring; refusing to hide that");
    std::optional<Ideal> acc;
    for (const auto& g : b.gens()) {
        if (g.is_zero()) continue;
        Ideal principal(RingContext::of(a.ring()), {g});
        Ideal lift_a(RingContext::of(a.ring()), a.groebner());
        Ideal meet = intersect(lift_a, principal);
        std::vector<Polynomial> quots;
        for (const auto& h : meet.groebner()) quots.push_back(exact_div(h, g));
        Ideal part(a.context(), std::move(quots));
        acc = acc ? intersect(*acc, part) : part;
    }
    if (!acc)  // generators were all zero polynomials yet the ideal is nonzero: impossible
        throw error("colon: no usable generators");
    return *acc;
}

bool member(const Polynomial& r, const Ideal& a) {
    check_same_ring(*r.ring(), *a.ring());
    return normal_form(r, a.groebner()).is_zero();
}

bool radical_member(const Polynomial& r, const Ideal& a) {
    check_same_ring(*r.ring(), *a.ring());
    if (r.is_zero()) return true;
    const auto& ring = a.ring();
    auto [ext, var_map] = prepend_aux_var(ring, "t");
    std::vector<Polynomial> gens;
    for (const auto& g : a.groebner()) gens.push_back(transplant(g, ext, var_map));
    Polynomial t = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::constant(ext, 1) - t * transplant(r, ext, var_map));
    auto gb = reduced_groebner(ext, gens);
    return gb.size() == 1 && gb[0].is_constant();
}

i64 dimension(const Ideal& a) {
    if (a.is_unit()) return -1;
    return dimension_from_leading_terms(*a.ring(), a.groebner());
}

bool has_positive_height(const Ideal& a) {
    if (a.is_unit()) return true;
    if (!a.context().equidimensional())
        throw refusal("height test needs an equidimensional ring; flag the quotient if it is one");
    return dimension(a) < a.context().ring_dimension();
}

bool in_R_circ(const Polynomial& c, const RingContext& ctx) {
    check_same_ring(*c.ring(), *ctx.ambient);
    if (!ctx.equidimensional())
        throw refusal("R-circ test needs an equidimensional ring; flag the quotient if it is one");
    Ideal grown(ctx, {c});
    if (grown.is_unit()) return true;
    return dimension(grown) < ctx.ring_dimension();
}

bool is_regular_sequence(const std::vector<Polynomial>& seq, const RingContext& ctx) {
    for (const auto& f : seq) {
        check_same_ring(*f.ring(), *ctx.ambient);
        if (f.is_zero() || f.is_constant())
            throw refusal("regular sequence test wants positive-degree elements");
    }
    if (seq.empty()) return true;
    std::vector<Polynomial> prefix;
    for (const auto& f : seq) {
        Ideal before(ctx, prefix);
        Ideal divisor(ctx, {f});
        if (divisor.is_zero_ideal()) return false;
        if (!(colon(before, divisor) == before)) return false;
        prefix.push_back(f);
    }
    return !Ideal(ctx, prefix).is_unit();
}

Ideal frobenius_power(const Ideal& a, i64 e) {
    if (e < 0) throw parse_error("frobenius power wants e >= 0");
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens()) gens.push_back(frobenius_pow(g, e));
    return Ideal(a.context(), std::move(gens));
}

Ideal frobenius_preimage(const Ideal& a, i64 e) {
    if (e < 1) throw parse_error("frobenius preimage wants e >= 1; e = 0 is the identity");
    const auto& ring = a.ring();
    int n = ring->nvars();
    std::vector<std::string> vars = ring->vars();
    for (const auto& v : ring->vars()) {
        std::string name = v + "_q";
        while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
        vars.push_back(name);
    }
    auto ext = make_ring(ring->characteristic(), vars, MonomialOrder{OrderKind::elim, n});
    std::vector<int> fwd(n);
    for (int i = 0; i < n; ++i) fwd[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : a.groebner()) gens.push_back(transplant(g, ext, fwd));
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(ext, i);
        Polynomial yi = Polynomial::variable(ext, n + i);
        gens.push_back(yi - frobenius_pow(xi, e));
    }
    auto pure = eliminate(ext, gens, n);
    std::vector<int> back(ext->nvars(), -1);
    for (int i = 0; i < n; ++i) back[n + i] = i;
    std::vector<Polynomial> result;
    for (const auto& g : pure) result.push_back(transplant(g, ring, back));
    return Ideal(a.context(), std::move(result));
}

std::pair<Ideal, bool> frobenius_closure(const Ideal& a, i64 bound) {
    if (bound < 1) throw parse_error("closure bound must be at least 1");
    Ideal prev(a.context(), a.gens());
    bool stabilized = false;
    for (i64 e = 1; e <= bound; ++e) {
        Ideal je = frobenius_preimage(frobenius_power(a, e), e);
        if (!je.contains(prev))
            throw error("internal: closure chain failed to ascend");
        stabilized = (je == prev);
        prev = std::move(je);
    }
    return {std::move(prev), stabilized};
}

bool is_radical_probe(const Ideal& a) {
    return frobenius_preimage(a, 1) == a;
}

}  // namespace frobx
