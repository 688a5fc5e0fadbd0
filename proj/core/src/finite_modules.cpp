#include "frobx/finite_modules.hpp"

#include <algorithm>
#include <map>

#include "frobx/errors.hpp"
#include "frobx/groebner.hpp"

namespace frobx {

namespace {

constexpr std::size_t kMaxElements = 4096;
constexpr i64 kMaxPreimageSweep = 16;

// All monomials outside the leading-term ideal; finite precisely when every
// variable has a pure power among the leading monomials.
std::vector<Monomial> standard_monomials(const PolyRing& ring, const std::vector<Polynomial>& gb) {
    int n = ring.nvars();
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_monomial());
    std::vector<i64> box(n, -1);
    for (const auto& m : lms) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = i;
        }
        if (pure && support >= 0)
            box[support] = box[support] < 0 ? m.e[support] : std::min(box[support], m.e[support]);
        if (pure && support < 0) return {};  // 1 ∈ LT: no standard monomials
    }
    for (int i = 0; i < n; ++i)
        if (box[i] < 0) throw refusal("summand is not finite dimensional over the prime field");

    std::vector<Monomial> out;
    Monomial cur{std::vector<i64>(n, 0)};
    while (true) {
        bool reduced = true;
        for (const auto& m : lms)
            if (m.divides(cur)) { reduced = false; break; }
        if (reduced) out.push_back(cur);
        int i = 0;
        while (i < n && cur.e[i] + 1 >= box[i]) cur.e[i++] = 0;
        if (i == n) break;
        ++cur.e[i];
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring.cmp(a, b) < 0;
    });
    return out;
}

}  // namespace

FiniteCyclicsModule FiniteCyclicsModule::make(RingContext ctx, std::vector<Ideal> summands,
                                              std::vector<std::vector<Polynomial>> x_matrix) {
    std::size_t k = summands.size();
    if (x_matrix.size() != k) throw parse_error("x-action matrix must be square of the summand count");
    for (const auto& row : x_matrix)
        if (row.size() != k) throw parse_error("x-action matrix must be square of the summand count");
    for (const auto& J : summands) {
        check_same_context(ctx, J.context());
        if (J.is_unit()) throw refusal("summand ideal is the whole ring; drop the zero summand");
    }
    bool diag = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            check_same_ring(*ctx.ambient, *x_matrix[i][j].ring());
            if (i != j && !x_matrix[i][j].is_zero()) diag = false;
            // well-definedness on representatives: u_ij J_j^{[p]} ⊆ J_i
            for (const auto& g : summands[j].groebner())
                if (!member(x_matrix[i][j] * frobenius_pow(g, 1), summands[i]))
                    throw refusal("x-action is not well defined on the given summands");
        }
    FiniteCyclicsModule M;
    M.ctx_ = std::move(ctx);
    M.summands_ = std::move(summands);
    M.xmat_ = std::move(x_matrix);
    M.diag_ = diag;
    M.cache_ = std::make_shared<EnumCache>();
    return M;
}

FiniteCyclicsModule FiniteCyclicsModule::diagonal(RingContext ctx, std::vector<Ideal> summands,
                                                  std::vector<Polynomial> units) {
    std::size_t k = summands.size();
    if (units.size() != k) throw parse_error("one diagonal multiplier per summand");
    std::vector<std::vector<Polynomial>> mat(k, std::vector<Polynomial>());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            mat[i].push_back(i == j ? units[i] : Polynomial::zero(ctx.ambient));
    return make(std::move(ctx), std::move(summands), std::move(mat));
}

FiniteCyclicsModule::Elem FiniteCyclicsModule::element(std::vector<Polynomial> reps) const {
    if (reps.size() != rank()) throw parse_error("element needs one representative per summand");
    Elem out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        check_same_ring(*ctx_.ambient, *reps[i].ring());
        out.push_back(normal_form(reps[i], summands_[i].groebner()));
    }
    return out;
}

FiniteCyclicsModule::Elem FiniteCyclicsModule::zero() const {
    return Elem(rank(), Polynomial::zero(ctx_.ambient));
}

bool FiniteCyclicsModule::is_zero(const Elem& h) const {
    for (const auto& r : h)
        if (!r.is_zero()) return false;
    return true;
}

FiniteCyclicsModule::Elem FiniteCyclicsModule::add(const Elem& a, const Elem& b) const {
    std::vector<Polynomial> reps;
    for (std::size_t i = 0; i < rank(); ++i) reps.push_back(a[i] + b[i]);
    return element(std::move(reps));
}

FiniteCyclicsModule::Elem FiniteCyclicsModule::scale(const Polynomial& r, const Elem& h) const {
    std::vector<Polynomial> reps;
    for (std::size_t i = 0; i < rank(); ++i) reps.push_back(r * h[i]);
    return element(std::move(reps));
}

FiniteCyclicsModule::Elem FiniteCyclicsModule::x_act(const Elem& h) const {
    std::vector<Polynomial> reps;
    for (std::size_t i = 0; i < rank(); ++i) {
        Polynomial acc = Polynomial::zero(ctx_.ambient);
        for (std::size_t j = 0; j < rank(); ++j)
            acc = acc + xmat_[i][j] * frobenius_pow(h[j], 1);
        reps.push_back(std::move(acc));
    }
    return element(std::move(reps));
}

std::string FiniteCyclicsModule::elem_key(const Elem& h) const {
    std::string key;
    for (const auto& r : h) key += format_poly(r) + "|";
    return key;
}

std::string FiniteCyclicsModule::format_elem(const Elem& h) const {
    if (rank() == 0) return "0";
    if (rank() == 1) return format_poly(h[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < h.size(); ++i) out += (i ? ", " : "") + format_poly(h[i]);
    return out + ")";
}

void FiniteCyclicsModule::require_enumerable() const {
    for (const auto& J : summands_)
        if (dimension(J) != 0)
            throw refusal("exhaustive operation needs finite summands (dimension zero)");
}

const std::vector<FiniteCyclicsModule::Elem>& FiniteCyclicsModule::enumerate() const {
    std::call_once(cache_->flag, [this] {
        require_enumerable();
        i64 p = ctx_.ambient->characteristic();
        std::vector<std::vector<Polynomial>> residues;  // per summand
        std::size_t total = 1;
        for (const auto& J : summands_) {
            auto basis = standard_monomials(*ctx_.ambient, J.groebner());
            std::size_t count = 1;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                count *= static_cast<std::size_t>(p);
                if (count > kMaxElements) throw resource_error("module too large to enumerate");
            }
            std::vector<Polynomial> list;
            std::vector<i64> coeff(basis.size(), 0);
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::vector<Term> terms;
                for (std::size_t b = 0; b < basis.size(); ++b)
                    if (coeff[b]) terms.push_back({coeff[b], basis[b]});
                list.push_back(Polynomial::from_terms(ctx_.ambient, std::move(terms)));
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    if (++coeff[b] < p) break;
                    coeff[b] = 0;
                }
            }
            total *= list.size();
            if (total > kMaxElements) throw resource_error("module too large to enumerate");
            residues.push_back(std::move(list));
        }
        std::vector<Elem> out;
        std::vector<std::size_t> pick(rank(), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::vector<Polynomial> reps;
            for (std::size_t i = 0; i < rank(); ++i) reps.push_back(residues[i][pick[i]]);
            out.push_back(element(std::move(reps)));
            for (std::size_t i = 0; i < rank(); ++i) {
                if (++pick[i] < residues[i].size()) break;
                pick[i] = 0;
            }
        }
        cache_->elements = std::move(out);
    });
    return cache_->elements;
}

std::pair<i64, i64> FiniteCyclicsModule::orbit_shape(const Elem& h) const {
    std::map<std::string, i64> seen;
    Elem cur = h;
    i64 step = 0;
    while (true) {
        auto [it, fresh] = seen.emplace(elem_key(cur), step);
        if (!fresh) return {it->second, step - it->second};
        cur = x_act(cur);
        ++step;
        if (step > static_cast<i64>(kMaxElements) + 1)
            throw resource_error("orbit failed to close; summands are not finite");
    }
}

std::vector<FiniteCyclicsModule::Elem> FiniteCyclicsModule::gamma_x() const {
    std::vector<Elem> torsion;
    for (const auto& h : enumerate()) {
        auto [pre, period] = orbit_shape(h);
        Elem cur = h;
        bool dies = false;
        for (i64 m = 0; m < pre + period && !dies; ++m) {
            if (is_zero(cur)) dies = true;
            cur = x_act(cur);
        }
        if (dies || is_zero(cur)) torsion.push_back(h);
    }
    return torsion;
}

bool FiniteCyclicsModule::is_x_torsion_free() const {
    return gamma_x().size() == 1;  // just the zero element
}

i64 FiniteCyclicsModule::hsl_number() const {
    i64 worst = 0;
    for (const auto& h : gamma_x()) {
        Elem cur = h;
        i64 steps = 0;
        while (!is_zero(cur)) {
            cur = x_act(cur);
            ++steps;
        }
        worst = std::max(worst, steps);
    }
    return worst;
}

Ideal FiniteCyclicsModule::ann_element(const Elem& h) const {
    Ideal unit(ctx_, {Polynomial::constant(ctx_.ambient, 1)});
    Ideal acc = unit;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (h[i].is_zero()) continue;
        acc = intersect(acc, colon(summands_[i], Ideal(ctx_, {h[i]})));
    }
    return acc;
}

Ideal FiniteCyclicsModule::tail_annihilator(const Elem& h) const {
    auto [pre, period] = orbit_shape(h);
    Elem cur = h;
    for (i64 m = 0; m < pre; ++m) cur = x_act(cur);
    Ideal acc = ann_element(cur);
    for (i64 m = 1; m < period; ++m) {
        cur = x_act(cur);
        acc = intersect(acc, ann_element(cur));
    }
    return acc;
}

GradedIdealChain FiniteCyclicsModule::grann_element(const Elem& h) const {
    if (is_zero(h))
        return principal_chain(Ideal(ctx_, {Polynomial::constant(ctx_.ambient, 1)}));
    auto [pre, period] = orbit_shape(h);
    std::vector<Ideal> colons;
    Elem cur = h;
    for (i64 m = 0; m < pre + period; ++m) {
        colons.push_back(ann_element(cur));
        cur = x_act(cur);
    }
    // beyond the preperiod the colon family repeats, so the true infinite
    // suffix intersection is the intersection over one period
    Ideal tail = colons[static_cast<std::size_t>(pre)];
    for (i64 m = pre + 1; m < pre + period; ++m)
        tail = intersect(tail, colons[static_cast<std::size_t>(m)]);
    std::vector<Ideal> entries(static_cast<std::size_t>(pre) + 1, tail);
    for (i64 n = pre - 1; n >= 0; --n)
        entries[static_cast<std::size_t>(n)] =
            intersect(colons[static_cast<std::size_t>(n)], entries[static_cast<std::size_t>(n) + 1]);
    std::size_t j = static_cast<std::size_t>(pre);
    while (j > 0 && entries[j - 1] == entries[j]) --j;
    GradedIdealChain c{ctx_, {}, static_cast<i64>(j), true};
    c.entries.assign(entries.begin(), entries.begin() + j + 1);
    return c;
}

GradedIdealChain FiniteCyclicsModule::grann_submodule(const std::vector<Elem>& gens) const {
    if (gens.empty())
        return principal_chain(Ideal(ctx_, {Polynomial::constant(ctx_.ambient, 1)}));
    GradedIdealChain acc = grann_element(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = intersect_chains(acc, grann_element(gens[i]));
    return acc;
}

bool FiniteCyclicsModule::in_ann_of_chain(const GradedIdealChain& B, const Elem& h) const {
    check_same_context(ctx_, B.ctx);
    auto [pre, period] = orbit_shape(h);
    i64 chain_tail = B.stable_from ? *B.stable_from : static_cast<i64>(B.entries.size()) - 1;
    i64 horizon = std::max(chain_tail, pre) + period;
    Elem cur = h;
    for (i64 m = 0; m <= horizon; ++m) {
        for (const auto& beta : chain_entry_at(B, m).groebner())
            if (!is_zero(scale(beta, cur))) return false;
        cur = x_act(cur);
    }
    return true;
}

std::vector<FiniteCyclicsModule::Elem> FiniteCyclicsModule::ann_of_chain(const GradedIdealChain& B) const {
    std::vector<Elem> out;
    for (const auto& h : enumerate())
        if (in_ann_of_chain(B, h)) out.push_back(h);
    return out;
}

FiniteCyclicsModule FiniteCyclicsModule::torsion_free_quotient() const {
    if (!diag_)
        throw refusal("torsion-free quotient is implemented for diagonal actions only");
    i64 p = ctx_.ambient->characteristic();
    // per original summand: the torsion closure J_i' (null = whole summand torsion)
    std::vector<std::optional<Ideal>> sweeps;
    for (std::size_t i = 0; i < rank(); ++i) {
        const Polynomial& u = xmat_[i][i];
        if (u.is_zero()) {
            sweeps.emplace_back(std::nullopt);
            continue;
        }
        // ascending sweep of { r : u^{1+p+..+p^{m-1}} r^{p^m} ∈ J }, stopping
        // at the first repeat; validated exhaustively below
        Ideal acc = summands_[i];
        i64 uexp = 0;
        bool settled = false;
        for (i64 m = 1; m <= kMaxPreimageSweep; ++m) {
            uexp = checked_add(checked_mul(uexp, p), 1);
            Ideal quot = colon(summands_[i], Ideal(ctx_, {u.pow(uexp)}));
            Ideal next = quot.is_unit() ? quot : frobenius_preimage(quot, m);
            if (next == acc) { settled = true; break; }
            acc = next;
        }
        if (!settled) throw resource_error("torsion sweep failed to settle");
        if (acc.is_unit())
            sweeps.emplace_back(std::nullopt);
        else
            sweeps.emplace_back(std::move(acc));
    }

    // cross-check against the exhaustive torsion set before handing anything out
    for (const auto& h : enumerate()) {
        auto [pre, period] = orbit_shape(h);
        Elem cur = h;
        bool torsion = false;
        for (i64 m = 0; m < pre + period && !torsion; ++m) {
            if (is_zero(cur)) torsion = true;
            cur = x_act(cur);
        }
        torsion = torsion || is_zero(cur);
        bool in_sweep = true;
        for (std::size_t i = 0; i < rank() && in_sweep; ++i)
            if (sweeps[i] && !member(h[i], *sweeps[i])) in_sweep = false;
        if (torsion != in_sweep)
            throw error("internal: torsion sweep disagrees with the exhaustive torsion set");
    }

    std::vector<Ideal> new_summands;
    std::vector<Polynomial> new_units;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (!sweeps[i]) continue;
        new_summands.push_back(*sweeps[i]);
        new_units.push_back(xmat_[i][i]);
    }
    return diagonal(ctx_, std::move(new_summands), std::move(new_units));
}

}  // namespace frobx
