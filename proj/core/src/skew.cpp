#include "frobx/skew.hpp"

#include <algorithm>
#include <map>

#include "frobx/errors.hpp"

namespace frobx {

// ---- SkewPoly ------------------------------------------------------------

SkewPoly::SkewPoly(RingContext ctx, std::vector<STerm> terms) : ctx_(std::move(ctx)) {
    std::map<i64, Polynomial> by_deg;
    for (auto& t : terms) {
        check_same_ring(*ctx_.ambient, *t.coeff.ring());
        if (t.deg < 0) throw parse_error("skew terms need degree >= 0");
        auto it = by_deg.find(t.deg);
        if (it == by_deg.end())
            by_deg.emplace(t.deg, std::move(t.coeff));
        else
            it->second = it->second + t.coeff;
    }
    for (auto& [d, c] : by_deg)
        if (!c.is_zero()) terms_.push_back({std::move(c), d});
}

SkewPoly SkewPoly::zero(const RingContext& ctx) { return SkewPoly(ctx, {}); }

SkewPoly SkewPoly::scalar(const RingContext& ctx, Polynomial r) {
    return SkewPoly(ctx, {{std::move(r), 0}});
}

SkewPoly SkewPoly::x_power(const RingContext& ctx, i64 n) {
    return SkewPoly(ctx, {{Polynomial::constant(ctx.ambient, 1), n}});
}

bool SkewPoly::operator==(const SkewPoly& other) const {
    check_same_context(ctx_, other.ctx_);
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].deg != other.terms_[i].deg || !(terms_[i].coeff == other.terms_[i].coeff))
            return false;
    return true;
}

SkewPoly skew_add(const SkewPoly& u, const SkewPoly& v) {
    check_same_context(u.context(), v.context());
    std::vector<SkewPoly::STerm> terms = u.terms();
    for (const auto& t : v.terms()) terms.push_back(t);
    return SkewPoly(u.context(), std::move(terms));
}

SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v) {
    check_same_context(u.context(), v.context());
    std::vector<SkewPoly::STerm> terms;
    // (r x^i)(s x^j) = r s^{p^i} x^{i+j}
    for (const auto& a : u.terms())
        for (const auto& b : v.terms())
            terms.push_back({a.coeff * frobenius_pow(b.coeff, a.deg), checked_add(a.deg, b.deg)});
    return SkewPoly(u.context(), std::move(terms));
}

std::string format_skew(const SkewPoly& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string c = format_poly(it->coeff);
        if (it->deg == 0) {
            out += c;
            continue;
        }
        std::string xs = it->deg == 1 ? "x" : "x^" + std::to_string(it->deg);
        out += (c == "1") ? xs : "(" + c + ")*" + xs;
    }
    return out;
}

// ---- GradedIdealChain ----------------------------------------------------

bool validate_chain(const GradedIdealChain& c) {
    for (std::size_t i = 0; i + 1 < c.entries.size(); ++i)
        if (!c.entries[i + 1].contains(c.entries[i])) return false;
    return true;
}

GradedIdealChain principal_chain(const Ideal& b) {
    GradedIdealChain c{b.context(), {b}, 0, true};
    return c;
}

Ideal limit_ideal(const GradedIdealChain& c) {
    if (c.entries.empty()) throw error("limit of an empty chain");
    if (c.stable_from) return c.entries[static_cast<std::size_t>(*c.stable_from)];
    return c.entries.back();
}

const Ideal& chain_entry_at(const GradedIdealChain& c, i64 n) {
    if (c.entries.empty()) throw error("entry of an empty chain");
    auto idx = std::min<std::size_t>(static_cast<std::size_t>(n), c.entries.size() - 1);
    return c.entries[idx];
}

GradedIdealChain intersect_chains(const GradedIdealChain& a, const GradedIdealChain& b) {
    check_same_context(a.ctx, b.ctx);
    if (a.entries.empty() || b.entries.empty()) throw error("intersecting an empty chain");
    std::size_t len = std::max(a.entries.size(), b.entries.size());
    GradedIdealChain out{a.ctx, {}, std::nullopt, a.certified && b.certified};
    for (std::size_t n = 0; n < len; ++n)
        out.entries.push_back(intersect(chain_entry_at(a, static_cast<i64>(n)),
                                        chain_entry_at(b, static_cast<i64>(n))));
    if (a.stable_from && b.stable_from) {
        i64 s = std::max(*a.stable_from, *b.stable_from);
        while (s > 0 && out.entries[static_cast<std::size_t>(s - 1)] == out.entries[static_cast<std::size_t>(s)]) --s;
        out.stable_from = s;
    } else {
        out.certified = false;
    }
    return out;
}

std::string format_chain(const GradedIdealChain& c) {
    std::string out = "chain:";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& gb = c.entries[i].groebner();
        out += (i ? "; [" : " [") + (gb.empty() ? std::string("0") : format_poly_list(gb)) + "]";
    }
    if (c.stable_from) out += "; stable";
    return out;
}

GradedIdealChain parse_chain(const RingContext& ctx, const std::string& text) {
    std::string body = text;
    auto colon_pos = body.find(':');
    if (body.rfind("chain", 0) == 0 && colon_pos != std::string::npos)
        body = body.substr(colon_pos + 1);
    GradedIdealChain c{ctx, {}, std::nullopt, false};
    std::size_t pos = 0;
    bool saw_stable = false;
    while (pos < body.size()) {
        std::size_t start = body.find_first_not_of(" \t;", pos);
        if (start == std::string::npos) break;
        if (saw_stable) throw parse_error("chain: entries after the stable marker");
        if (body[start] == '[') {
            auto close = body.find(']', start);
            if (close == std::string::npos) throw parse_error("chain: unbalanced '['");
            c.entries.emplace_back(ctx, parse_poly_list(ctx.ambient, body.substr(start + 1, close - start - 1)));
            pos = close + 1;
        } else if (body.compare(start, 6, "stable") == 0) {
            saw_stable = true;
            pos = start + 6;
        } else {
            throw parse_error("chain: expected '[' or 'stable' near position " + std::to_string(start));
        }
    }
    if (c.entries.empty()) throw parse_error("chain: no entries");
    if (saw_stable) c.stable_from = static_cast<i64>(c.entries.size()) - 1;
    return c;
}

GradedIdealChain chain_from_colon_family(const RingContext& ctx, const std::vector<Ideal>& colons) {
    auto conservative = [&] {
        GradedIdealChain c{ctx, {}, std::nullopt, false};
        std::size_t len = std::max<std::size_t>(colons.size(), 1);
        for (std::size_t i = 0; i < len; ++i) c.entries.emplace_back(ctx, std::vector<Polynomial>{});
        return c;
    };
    if (colons.size() < 2) return conservative();
    std::size_t N = colons.size() - 1;

    // suffix[n] over the full window, shorter[n] over the window minus its last step
    std::vector<Ideal> suffix(colons.size(), colons.back());
    for (std::size_t n = N; n-- > 0;) suffix[n] = intersect(colons[n], suffix[n + 1]);
    std::vector<Ideal> shorter(N, colons[N - 1]);
    for (std::size_t n = N - 1; n-- > 0;) shorter[n] = intersect(colons[n], shorter[n + 1]);

    if (!(suffix[0] == shorter[0])) return conservative();
    std::size_t K = 0;
    while (K + 1 < N && suffix[K + 1] == shorter[K + 1]) ++K;

    bool stabilized = (K == 0) || suffix[K - 1] == suffix[K];
    GradedIdealChain c{ctx, {}, std::nullopt, false};
    if (stabilized) {
        std::size_t j = K;
        while (j > 0 && suffix[j - 1] == suffix[K]) --j;
        c.entries.assign(suffix.begin(), suffix.begin() + j + 1);
        c.stable_from = static_cast<i64>(j);
        bool constant_window = true;
        for (std::size_t m = 1; m <= N && constant_window; ++m)
            if (!(colons[m] == colons[0])) constant_window = false;
        c.certified = constant_window;
    } else {
        c.entries.assign(suffix.begin(), suffix.begin() + K + 1);
    }
    return c;
}

}  // namespace frobx
