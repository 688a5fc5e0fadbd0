// Ideal arithmetic over ambient and quotient rings, Frobenius operations, and
// the prime-component calculus.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frobx/radical.hpp"

using namespace frobx;

namespace {

RingPtr R2xy() { return make_ring(2, {"x", "y"}); }

Ideal gen(const RingPtr& R, const std::string& csv) {
    return Ideal(R, parse_poly_list(R, csv));
}

Ideal gen(const RingContext& ctx, const std::string& csv) {
    return Ideal(ctx, parse_poly_list(ctx.ambient, csv));
}

RingContext nodal() {
    auto R = make_ring(2, {"s", "t"});
    return RingContext::of(QuotientRing::make(R, parse_poly_list(R, "s*t"), true));
}

}  // namespace

TEST_CASE("sum, intersection, colon on monomial ideals") {
    auto R = R2xy();
    CHECK(ideal_sum(gen(R, "x"), gen(R, "y")) == gen(R, "x,y"));
    CHECK(intersect(gen(R, "x"), gen(R, "y")) == gen(R, "x*y"));
    CHECK(intersect(gen(R, "x,y"), gen(R, "y")) == gen(R, "y"));
    CHECK(colon(gen(R, "x*y"), gen(R, "x")) == gen(R, "y"));
    CHECK(colon(gen(R, "x^2"), gen(R, "x")) == gen(R, "x"));
    CHECK(colon(gen(R, "x"), gen(R, "x^2")).is_unit());
    CHECK_THROWS_AS(colon(gen(R, "x"), Ideal(R, {Polynomial::zero(R)})), error);
}

TEST_CASE("membership agrees with normal forms") {
    auto R = R2xy();
    Ideal a = gen(R, "x^2+y,y^2+y");
    CHECK(member(parse_poly(R, "x^2+y"), a));
    CHECK_FALSE(member(Polynomial::constant(R, 1), a));
    CHECK(member(Polynomial::zero(R), a));
    CHECK(radical_member(parse_poly(R, "y"), gen(R, "y^2")));
    CHECK_FALSE(member(parse_poly(R, "y"), gen(R, "y^2")));
    CHECK_FALSE(radical_member(parse_poly(R, "x"), gen(R, "y^2")));
}

TEST_CASE("dimension via leading terms") {
    auto R = R2xy();
    CHECK(dimension(Ideal(R, {Polynomial::zero(R)})) == 2);
    CHECK(dimension(gen(R, "x")) == 1);
    CHECK(dimension(gen(R, "x,y")) == 0);
    CHECK(dimension(gen(R, "1")) == -1);
    auto three = make_ring(3, {"x", "y", "z"});
    CHECK(dimension(gen(three, "x*y,x*z")) == 2);  // V(x) ∪ V(y,z)
}

TEST_CASE("quotient rings present ideals through their lifts") {
    RingContext ctx = nodal();
    CHECK(ctx.ring_dimension() == 1);
    Ideal zero(ctx, {Polynomial::zero(ctx.ambient)});
    CHECK(zero.is_zero_ideal());
    CHECK(member(parse_poly(ctx.ambient, "s*t"), zero));  // s*t = 0 in the quotient
    Ideal s = gen(ctx, "s");
    CHECK(dimension(s) == 1);
    CHECK(dimension(gen(ctx, "s,t")) == 0);
    CHECK(colon(zero, s) == gen(ctx, "t"));
}

TEST_CASE("height conventions and the equidimensionality gate") {
    auto R = R2xy();
    CHECK(has_positive_height(gen(R, "x")));
    CHECK(has_positive_height(gen(R, "1")));
    CHECK_FALSE(has_positive_height(Ideal(R, {Polynomial::zero(R)})));

    RingContext flagged = nodal();
    CHECK(has_positive_height(gen(flagged, "s,t")));
    CHECK_FALSE(has_positive_height(gen(flagged, "s")));

    auto amb = make_ring(2, {"s", "t"});
    RingContext unflagged =
        RingContext::of(QuotientRing::make(amb, parse_poly_list(amb, "s*t"), false));
    CHECK_THROWS_AS(has_positive_height(gen(unflagged, "s")), refusal);
}

TEST_CASE("multipliers outside every minimal component") {
    RingContext ctx = nodal();
    CHECK(in_R_circ(parse_poly(ctx.ambient, "s+t"), ctx));
    CHECK_FALSE(in_R_circ(parse_poly(ctx.ambient, "s"), ctx));
    auto R = R2xy();
    CHECK(in_R_circ(parse_poly(R, "x"), RingContext::of(R)));  // domain
}

TEST_CASE("regular sequence checks") {
    auto R = R2xy();
    RingContext amb = RingContext::of(R);
    CHECK(is_regular_sequence(parse_poly_list(R, "x,y"), amb));
    CHECK_FALSE(is_regular_sequence(parse_poly_list(R, "x,x"), amb));
    RingContext ctx = nodal();
    CHECK(is_regular_sequence(parse_poly_list(ctx.ambient, "s+t"), ctx));
    CHECK_FALSE(is_regular_sequence(parse_poly_list(ctx.ambient, "s"), ctx));  // zerodivisor
    CHECK_THROWS_AS(is_regular_sequence({Polynomial::constant(R, 1)}, amb), refusal);
}

TEST_CASE("bracket powers raise generators termwise") {
    auto R = R2xy();
    Ideal a = gen(R, "x,y^3");
    CHECK(frobenius_power(a, 1) == gen(R, "x^2,y^6"));
    CHECK(frobenius_power(a, 3) == gen(R, "x^8,y^24"));
    CHECK(frobenius_power(a, 0) == a);
    CHECK_THROWS_AS(frobenius_power(a, -1), error);
}

TEST_CASE("frobenius preimage on principal ideals") {
    auto R = make_ring(2, {"x"});
    CHECK(frobenius_preimage(gen(R, "x^2"), 1) == gen(R, "x"));
    CHECK(frobenius_preimage(gen(R, "x^3"), 1) == gen(R, "x^2"));
    CHECK(frobenius_preimage(gen(R, "x"), 1) == gen(R, "x"));
    CHECK_THROWS_AS(frobenius_preimage(gen(R, "x"), 0), parse_error);
}

TEST_CASE("preimage composes across iterations") {
    auto R = R2xy();
    Ideal b = gen(R, "x^2*y^2,y^4");
    CHECK(frobenius_preimage(b, 1) == gen(R, "x*y,y^2"));
    CHECK(frobenius_preimage(frobenius_preimage(b, 1), 1) == frobenius_preimage(b, 2));
}

TEST_CASE("closure is trivial over a polynomial ring") {
    auto R = R2xy();
    for (const char* csv : {"x", "x^2+y", "x*y,y^2", "x^3+x*y+y"}) {
        auto [cl, stabilized] = frobenius_closure(gen(R, csv), 3);
        CHECK(cl == gen(R, csv));
        CHECK(stabilized);
    }
}

TEST_CASE("closure picks up the cusp section") {
    auto amb = make_ring(2, {"x", "y", "z"});
    RingContext ctx =
        RingContext::of(QuotientRing::make(amb, parse_poly_list(amb, "z^2+x^2*y"), true));
    Ideal a = gen(ctx, "x,y");
    CHECK_FALSE(member(parse_poly(amb, "z"), a));
    auto [first, settled_early] = frobenius_closure(a, 1);  // z^2 = x^2*y lands in (x^2, y^2)
    CHECK(member(parse_poly(amb, "z"), first));
    CHECK_FALSE(settled_early);  // one step cannot confirm stability
    auto [cl, stabilized] = frobenius_closure(a, 2);
    CHECK(cl == gen(ctx, "x,y,z"));
    CHECK(stabilized);
    CHECK_THROWS_AS(frobenius_closure(a, 0), parse_error);
}

TEST_CASE("p-th root closure probes radicality") {
    auto R = R2xy();
    CHECK(is_radical_probe(gen(R, "x*y")));
    CHECK(is_radical_probe(gen(R, "x,y")));
    CHECK_FALSE(is_radical_probe(gen(R, "x^2")));
    CHECK(is_radical_probe(gen(R, "1")));
}

TEST_CASE("prime-component calculus mirrors the ideal operations") {
    auto R = R2xy();
    RingContext ctx = RingContext::of(R);
    RadicalDecomposition both = make_decomposition(ctx, {gen(R, "x"), gen(R, "y")});
    CHECK(expand(both) == gen(R, "x*y"));
    CHECK(format_primes(both) == "primes: (x); (y)");

    // union of component sets, pruned to minimal members
    RadicalDecomposition xs = make_decomposition(ctx, {gen(R, "x")});
    RadicalDecomposition fat = intersect_rd(xs, make_decomposition(ctx, {gen(R, "x,y")}));
    REQUIRE(fat.components.size() == 1);
    CHECK(fat.components[0] == gen(R, "x"));

    RadicalDecomposition quot = colon_rd(both, xs);
    REQUIRE(quot.components.size() == 1);
    CHECK(quot.components[0] == gen(R, "y"));
    CHECK(expand(quot) == colon(expand(both), expand(xs)));
    CHECK(expand(intersect_rd(both, xs)) == intersect(expand(both), expand(xs)));

    CHECK(rd_member(parse_poly(R, "x*y"), both));
    CHECK_FALSE(rd_member(parse_poly(R, "x"), both));
}

TEST_CASE("decomposition text round trips") {
    auto R = R2xy();
    RingContext ctx = RingContext::of(R);
    RadicalDecomposition d = parse_primes(ctx, "primes: (x); (y)");
    REQUIRE(d.components.size() == 2);
    CHECK(format_primes(d) == "primes: (x); (y)");
    RadicalDecomposition bare = parse_primes(ctx, "(x,y)");
    CHECK(format_primes(bare) == "primes: (x, y)");
    RadicalDecomposition empty = make_decomposition(ctx, {});
    CHECK(format_primes(empty) == "primes:");
    CHECK(expand(parse_primes(ctx, format_primes(empty))).is_unit());
    CHECK_THROWS_AS(parse_primes(ctx, "primes: (x) junk"), parse_error);
}

TEST_CASE("decomposition construction screens its components") {
    auto R = R2xy();
    RingContext ctx = RingContext::of(R);
    CHECK_THROWS_AS(make_decomposition(ctx, {gen(R, "1")}), refusal);
    CHECK_THROWS_AS(make_decomposition(ctx, {gen(R, "x^2")}), refusal);
}
