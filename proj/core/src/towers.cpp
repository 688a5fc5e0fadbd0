#include "frobx/towers.hpp"

#include "frobx/errors.hpp"
#include "frobx/groebner.hpp"

namespace frobx {

namespace {
constexpr i64 kMaxComponent = 48;
}

CyclicTower::CyclicTower(RingContext ctx, Ideal base, Kind kind)
    : ctx_(std::move(ctx)), base_(std::move(base)), kind_(kind),
      cache_(std::make_shared<CompCache>()) {
    check_same_context(ctx_, base_.context());
    if (base_.is_unit()) throw refusal("tower over the unit ideal is the zero module");
}

const Ideal& CyclicTower::component_ideal(i64 n) const {
    if (n < 0) throw error("negative tower component");
    if (n > kMaxComponent) throw resource_error("tower component beyond the working bound");
    if (kind_ == Kind::constant) return base_;
    std::lock_guard<std::mutex> lock(cache_->mutex);
    while (static_cast<i64>(cache_->components.size()) <= n) {
        i64 e = static_cast<i64>(cache_->components.size());
        cache_->components.push_back(frobenius_power(base_, e));
    }
    return cache_->components[static_cast<std::size_t>(n)];
}

CyclicTower::Elem CyclicTower::element(i64 comp, Polynomial rep) const {
    check_same_ring(*ctx_.ambient, *rep.ring());
    return {comp, normal_form(rep, component_ideal(comp).groebner())};
}

CyclicTower::Elem CyclicTower::x_act(const Elem& g) const {
    return element(g.comp + 1, frobenius_pow(g.rep, 1));
}

bool CyclicTower::is_zero(const Elem& g) const {
    return member(g.rep, component_ideal(g.comp));
}

bool CyclicTower::elem_equal(const Elem& g, const Elem& h) const {
    if (g.comp != h.comp) return false;
    return member(g.rep - h.rep, component_ideal(g.comp));
}

bool CyclicTower::is_torsion(const Elem& g, i64 bound) const {
    for (i64 m = 0; m <= bound; ++m)
        if (member(frobenius_pow(g.rep, m), component_ideal(g.comp + m))) return true;
    return false;
}

std::vector<Ideal> CyclicTower::annihilator_family(const Elem& g, i64 bound) const {
    std::vector<Ideal> fam;
    for (i64 m = 0; m <= bound; ++m) {
        Polynomial image = frobenius_pow(g.rep, m);
        const Ideal& target = component_ideal(g.comp + m);
        if (member(image, target))
            fam.emplace_back(ctx_, std::vector<Polynomial>{Polynomial::constant(ctx_.ambient, 1)});
        else
            fam.push_back(colon(target, Ideal(ctx_, {image})));
    }
    return fam;
}

GradedIdealChain CyclicTower::grann_element(const Elem& g, i64 bound) const {
    if (is_zero(g))
        return principal_chain(Ideal(ctx_, {Polynomial::constant(ctx_.ambient, 1)}));
    return chain_from_colon_family(ctx_, annihilator_family(g, bound));
}

GradedIdealChain CyclicTower::grann_submodule(const std::vector<Elem>& gens, i64 bound) const {
    if (gens.empty())
        return principal_chain(Ideal(ctx_, {Polynomial::constant(ctx_.ambient, 1)}));
    std::vector<Ideal> fam = annihilator_family(gens[0], bound);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        auto other = annihilator_family(gens[i], bound);
        for (std::size_t m = 0; m < fam.size(); ++m) fam[m] = intersect(fam[m], other[m]);
    }
    return chain_from_colon_family(ctx_, fam);
}

bool CyclicTower::probe_x_torsion_free(i64 bound) const {
    i64 steps = kind_ == Kind::constant ? 1 : bound;
    for (i64 n = 0; n < steps; ++n)
        if (!(frobenius_preimage(component_ideal(n + 1), 1) == component_ideal(n))) return false;
    return true;
}

bool CyclicTower::in_ann_of_chain(const GradedIdealChain& B, const Elem& g, i64 bound) const {
    for (i64 m = 0; m <= bound; ++m) {
        const Ideal& bm = chain_entry_at(B, m);
        const Ideal& target = component_ideal(g.comp + m);
        Polynomial image = frobenius_pow(g.rep, m);
        for (const auto& beta : bm.groebner())
            if (!member(beta * image, target)) return false;
    }
    return true;
}

std::string CyclicTower::format_elem(const Elem& g) const {
    std::string body = g.rep.is_zero() ? "0" : format_poly(g.rep);
    if (g.comp != 0) body += " @ " + std::to_string(g.comp);
    return body;
}

bool test_element_annihilates(const CyclicTower& tower, const Polynomial& c, i64 w0,
                              const CyclicTower::Elem& g, i64 bound) {
    if (c.is_zero()) throw refusal("test multiplier must be nonzero");
    if (w0 < 0 || bound < w0) throw parse_error("test window wants 0 <= w0 <= bound");
    for (i64 m = w0; m <= bound; ++m) {
        Polynomial image = frobenius_pow(g.rep, m);
        if (!member(c * image, tower.component_ideal(g.comp + m))) return false;
    }
    return true;
}

}  // namespace frobx
