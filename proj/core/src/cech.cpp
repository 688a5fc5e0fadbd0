#include "frobx/cech.hpp"

#include <algorithm>
#include <map>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

void require_verified(const SopData& s) {
    if (!s.verified)
        throw refusal("system of parameters failed its checks; the zero-test is unreliable");
}

Ideal unit_ideal(const RingContext& ctx) {
    return Ideal(ctx, {Polynomial::constant(ctx.ambient, 1)});
}

}  // namespace

SopData make_sop(const RingContext& ctx, std::vector<Polynomial> params) {
    if (params.empty()) throw parse_error("system of parameters wants at least one element");
    for (const auto& a : params) {
        check_same_ring(*ctx.ambient, *a.ring());
        if (a.is_zero() || a.is_constant())
            throw parse_error("parameters must be nonconstant: " + format_poly(a));
    }
    SopData s{ctx, std::move(params), Polynomial::constant(ctx.ambient, 1), false};
    for (const auto& a : s.params) s.product = s.product * a;

    bool length_ok = static_cast<i64>(s.params.size()) == ctx.ring_dimension();
    s.verified = length_ok && is_regular_sequence(s.params, ctx);
    return s;
}

Ideal param_power_ideal(const SopData& s, i64 j) {
    if (j < 0) throw parse_error("negative denominator exponent");
    std::vector<Polynomial> gens;
    gens.reserve(s.params.size());
    for (const auto& a : s.params) gens.push_back(a.pow(j));
    return Ideal(s.ctx, std::move(gens));
}

CechClass cech_class(const SopData& s, Polynomial r, i64 j) {
    require_verified(s);
    check_same_ring(*s.ctx.ambient, *r.ring());
    if (j < 0) throw parse_error("negative denominator exponent");
    if (j == 0) return {Polynomial::zero(s.ctx.ambient), 0};
    Polynomial rep = normal_form(std::move(r), param_power_ideal(s, j).groebner());
    if (rep.is_zero()) return {Polynomial::zero(s.ctx.ambient), 0};
    return {std::move(rep), j};
}

bool cech_is_zero(const SopData& s, const CechClass& c) {
    require_verified(s);
    if (c.j == 0 || c.num.is_zero()) return true;
    return member(c.num, param_power_ideal(s, c.j));
}

bool cech_equal(const SopData& s, const CechClass& c1, const CechClass& c2) {
    require_verified(s);
    i64 k = std::max(c1.j, c2.j);
    if (k == 0) return true;
    Polynomial lift1 = c1.num * s.product.pow(k - c1.j);
    Polynomial lift2 = c2.num * s.product.pow(k - c2.j);
    return member(lift1 - lift2, param_power_ideal(s, k));
}

CechClass cech_x(const SopData& s, const CechClass& c) {
    require_verified(s);
    if (c.j == 0) return c;
    i64 p = s.ctx.ambient->characteristic();
    if (c.j > (i64{1} << 40) / p) throw resource_error("denominator exponent overflow");
    return cech_class(s, frobenius_pow(c.num, 1), c.j * p);
}

bool cech_is_torsion(const SopData& s, const CechClass& c, i64 bound) {
    require_verified(s);
    if (c.j == 0) return true;
    for (i64 e = 0; e <= bound; ++e)
        if (member(frobenius_pow(c.num, e), frobenius_power(param_power_ideal(s, c.j), e)))
            return true;
    return false;
}

GradedIdealChain cech_grann(const SopData& s, const CechClass& c, i64 bound) {
    require_verified(s);
    if (cech_is_zero(s, c)) return principal_chain(unit_ideal(s.ctx));
    Ideal base = param_power_ideal(s, c.j);
    std::vector<Ideal> fam;
    for (i64 m = 0; m <= bound; ++m) {
        Polynomial image = frobenius_pow(c.num, m);
        Ideal target = frobenius_power(base, m);
        if (member(image, target))
            fam.push_back(unit_ideal(s.ctx));
        else
            fam.push_back(colon(target, Ideal(s.ctx, {image})));
    }
    return chain_from_colon_family(s.ctx, fam);
}

TcReport tc_param_membership_chain(const SopData& s, const Polynomial& r, i64 j, i64 bound) {
    require_verified(s);
    TcReport rep;
    rep.mode = "chain";
    CechClass c = cech_class(s, r, j);
    if (cech_is_zero(s, c)) {
        rep.member = "true";
        rep.chain = principal_chain(unit_ideal(s.ctx));
        rep.limit = unit_ideal(s.ctx);
        rep.positive_height = true;
        rep.stabilized = true;
        rep.warnings.push_back("the element already lies in the parameter power ideal");
        return rep;
    }
    rep.chain = cech_grann(s, c, bound);
    rep.limit = limit_ideal(*rep.chain);
    rep.stabilized = rep.chain->stable_from.has_value();
    rep.positive_height = has_positive_height(*rep.limit);
    if (!rep.positive_height)
        rep.member = "false";
    else
        rep.member = rep.stabilized ? "true" : "unknown-at-bound";
    return rep;
}

TcReport tc_param_membership_test(const SopData& s, const Polynomial& r, i64 j,
                                  const Polynomial& c, i64 w0, i64 bound) {
    require_verified(s);
    if (c.is_zero()) throw refusal("test multiplier must be nonzero");
    if (w0 < 0 || bound < w0) throw parse_error("test window wants 0 <= w0 <= bound");
    TcReport rep;
    rep.mode = "test";
    CechClass cls = cech_class(s, r, j);
    if (cech_is_zero(s, cls)) {
        rep.member = "true";
        rep.warnings.push_back("the element already lies in the parameter power ideal");
        return rep;
    }
    try {
        if (!in_R_circ(c, s.ctx))
            rep.warnings.push_back("test multiplier vanishes on a minimal component; the verdict is advisory");
    } catch (const refusal& e) {
        rep.warnings.push_back(std::string("cannot screen the test multiplier: ") + e.what());
    }
    Ideal base = param_power_ideal(s, j);
    bool all = true;
    for (i64 n = w0; n <= bound && all; ++n)
        all = member(c * frobenius_pow(r, n), frobenius_power(base, n));
    rep.member = all ? "true" : "false";
    return rep;
}

EnescuReport enescu_zqr(const SopData& s, const std::vector<Polynomial>& samples, i64 bound) {
    require_verified(s);
    if (samples.empty()) throw parse_error("empty sample list");
    Ideal q = param_power_ideal(s, 1);
    EnescuReport rep;
    for (const auto& b : samples) {
        EnescuEntry entry;
        entry.b = b;
        if (member(b, q)) {
            entry.skipped = true;
            rep.notes.push_back("skipped " + format_poly(b) + ": q(b) = R by convention");
            rep.entries.push_back(std::move(entry));
            continue;
        }
        entry.chain = cech_grann(s, cech_class(s, b, 1), bound);
        entry.qb = limit_ideal(*entry.chain);
        entry.positive_height = has_positive_height(*entry.qb);
        rep.entries.push_back(std::move(entry));
    }

    std::map<std::string, Ideal> distinct;
    for (const auto& e : rep.entries)
        if (!e.skipped) distinct.emplace(e.qb->key(), *e.qb);
    for (const auto& [key, cand] : distinct) {
        bool maximal = true;
        for (const auto& [okey, other] : distinct)
            if (okey != key && other.contains(cand) && !(other == cand)) maximal = false;
        if (maximal) rep.maximal.push_back(cand);
    }
    return rep;
}

}  // namespace frobx
