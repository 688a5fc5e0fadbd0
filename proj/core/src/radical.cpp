#include "frobx/radical.hpp"

#include <algorithm>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

// Keep minimal elements under containment; drop duplicates.
std::vector<Ideal> prune_to_antichain(std::vector<Ideal> list) {
    std::vector<Ideal> keep;
    for (std::size_t i = 0; i < list.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < list.size() && !redundant; ++j) {
            if (i == j) continue;
            if (list[i].contains(list[j])) {
                // equal ideals: keep the earlier one only
                if (list[j].contains(list[i]) && i < j) continue;
                redundant = true;
            }
        }
        if (!redundant) keep.push_back(list[i]);
    }
    std::sort(keep.begin(), keep.end(),
              [](const Ideal& x, const Ideal& y) { return x.key() < y.key(); });
    return keep;
}

}  // namespace

RadicalDecomposition make_decomposition(const RingContext& ctx, std::vector<Ideal> components) {
    for (const auto& p : components) {
        check_same_context(ctx, p.context());
        if (p.is_unit())
            throw refusal("decomposition components must be proper ideals");
        if (!is_radical_probe(p))
            throw refusal("component fails the p-th-root radicality probe: " + format_ideal(p));
    }
    return RadicalDecomposition{ctx, prune_to_antichain(std::move(components))};
}

Ideal expand(const RadicalDecomposition& d) {
    if (d.components.empty())
        return Ideal(d.ctx, {Polynomial::constant(d.ctx.ambient, 1)});
    Ideal acc = d.components.front();
    for (std::size_t i = 1; i < d.components.size(); ++i)
        acc = intersect(acc, d.components[i]);
    return acc;
}

RadicalDecomposition intersect_rd(const RadicalDecomposition& a, const RadicalDecomposition& b) {
    check_same_context(a.ctx, b.ctx);
    std::vector<Ideal> all = a.components;
    all.insert(all.end(), b.components.begin(), b.components.end());
    return RadicalDecomposition{a.ctx, prune_to_antichain(std::move(all))};
}

RadicalDecomposition colon_rd(const RadicalDecomposition& b, const RadicalDecomposition& a) {
    check_same_context(b.ctx, a.ctx);
    Ideal ea = expand(a);
    std::vector<Ideal> keep;
    for (const auto& q : b.components)
        if (!q.contains(ea)) keep.push_back(q);
    return RadicalDecomposition{b.ctx, prune_to_antichain(std::move(keep))};
}

bool rd_member(const Polynomial& r, const RadicalDecomposition& d) {
    for (const auto& p : d.components)
        if (!member(r, p)) return false;
    return true;
}

RadicalDecomposition parse_primes(const RingContext& ctx, const std::string& text) {
    std::string body = text;
    auto colon_pos = body.find(':');
    if (body.rfind("primes", 0) == 0 && colon_pos != std::string::npos)
        body = body.substr(colon_pos + 1);
    std::vector<Ideal> comps;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto open = body.find('(', pos);
        if (open == std::string::npos) {
            if (body.find_first_not_of(" \t;", pos) != std::string::npos)
                throw parse_error("prime list: expected '(' near position " + std::to_string(pos));
            break;
        }
        auto close = body.find(')', open);
        if (close == std::string::npos) throw parse_error("prime list: unbalanced '('");
        comps.emplace_back(ctx, parse_poly_list(ctx.ambient, body.substr(open + 1, close - open - 1)));
        pos = close + 1;
    }
    return make_decomposition(ctx, std::move(comps));
}

std::string format_primes(const RadicalDecomposition& d) {
    std::string out = "primes:";
    if (d.components.empty()) return out;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        out += (i ? "; " : " ") + format_ideal(d.components[i]);
    return out;
}

}  // namespace frobx
