#pragma once

#include <string>
#include <vector>

#include "frobx/ideal.hpp"

namespace frobx {

// A radical ideal presented as the intersection of its minimal primes.
// Primality itself is caller-asserted; construction probes radicality and
// prunes to an antichain.  The empty list is the whole ring.
struct RadicalDecomposition {
    RingContext ctx;
    std::vector<Ideal> components;  // antichain, sorted by canonical key
};

RadicalDecomposition make_decomposition(const RingContext& ctx, std::vector<Ideal> components);

Ideal expand(const RadicalDecomposition& d);
RadicalDecomposition intersect_rd(const RadicalDecomposition& a, const RadicalDecomposition& b);

// (b : a), prime by prime: a component q survives iff expand(a) is not inside q.
RadicalDecomposition colon_rd(const RadicalDecomposition& b, const RadicalDecomposition& a);

bool rd_member(const Polynomial& r, const RadicalDecomposition& d);

// Text form "primes: (s); (t)".
RadicalDecomposition parse_primes(const RingContext& ctx, const std::string& text);
std::string format_primes(const RadicalDecomposition& d);

}  // namespace frobx
