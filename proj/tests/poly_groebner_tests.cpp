// Coefficient field, monomial orders, polynomial arithmetic, and the
// Buchberger layer everything else sits on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frobx/groebner.hpp"

using namespace frobx;

namespace {

RingPtr lex_ring(i64 p, std::vector<std::string> vars) {
    return make_ring(p, std::move(vars), {OrderKind::lex, 0});
}

}  // namespace

TEST_CASE("mod-p arithmetic round trips through inverses") {
    for (i64 a = 1; a < 5; ++a) CHECK(fp_mul(a, fp_inv(a, 5), 5) == 1);
    CHECK(fp_normalize(-1, 7) == 6);
    CHECK(fp_pow(3, 6, 7) == 1);  // Fermat
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("checked exponent arithmetic refuses to wrap") {
    CHECK(checked_mul(1 << 20, 1 << 20) == i64{1} << 40);
    CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), resource_error);
    CHECK_THROWS_AS(checked_add(i64{1} << 62, i64{1} << 62), resource_error);
}

TEST_CASE("monomial divisibility and quotients") {
    Monomial a{{3, 1}}, b{{1, 0}}, c{{0, 2}};
    CHECK(b.divides(a));
    CHECK_FALSE(c.divides(a));
    CHECK(a.over(b) == Monomial{{2, 1}});
    CHECK(a.lcm_with(c) == Monomial{{3, 2}});
    CHECK(a.times(c).degree() == 6);
}

TEST_CASE("ring construction rejects bad input") {
    CHECK_THROWS_AS(make_ring(6, {"x"}), parse_error);
    CHECK_THROWS_AS(make_ring(2, {}), parse_error);
    CHECK_THROWS_AS(make_ring(2, {"x", "x"}), parse_error);
}

TEST_CASE("lex and grevlex disagree where they should") {
    // x^3 vs x*y*z: same degree; lex looks at x first, grevlex at the
    // reversed tail.
    auto lx = lex_ring(2, {"x", "y", "z"});
    auto gx = make_ring(2, {"x", "y", "z"});
    Monomial x3{{3, 0, 0}}, xyz{{1, 1, 1}};
    CHECK(lx->cmp(x3, xyz) > 0);
    CHECK(gx->cmp(x3, xyz) > 0);  // grevlex: z exponent 0 beats 1
    Monomial y2{{0, 2, 0}}, xz{{1, 0, 1}};
    CHECK(lx->cmp(y2, xz) < 0);
    CHECK(gx->cmp(y2, xz) > 0);
}

TEST_CASE("polynomial arithmetic stays canonical") {
    auto R = make_ring(3, {"x", "y"});
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
    Polynomial f = x + x + x;  // 3x = 0 mod 3
    CHECK(f.is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));  // freshman's dream
    CHECK(x.scaled(2).leading_coeff() == 2);
    CHECK((x * y).total_degree() == 2);
}

TEST_CASE("frobenius powers only scale exponent vectors") {
    auto R = make_ring(2, {"x", "y"});
    Polynomial f = parse_poly(R, "x+y");
    CHECK(frobenius_pow(f, 1) == parse_poly(R, "x^2+y^2"));
    CHECK(frobenius_pow(f, 3) == parse_poly(R, "x^8+y^8"));
    CHECK(frobenius_pow(f, 0) == f);
    auto S = make_ring(5, {"x"});
    Polynomial g = parse_poly(S, "2*x+1");
    CHECK(frobenius_pow(g, 1) == g.pow(5));
}

TEST_CASE("polynomial text round trips") {
    auto R = make_ring(7, {"x", "y", "z"});
    for (const char* text : {"x^3+y^3+z^3", "2*x*y^2+1", "x", "6*z^4+3*x*y+5"}) {
        Polynomial f = parse_poly(R, text);
        CHECK(format_poly(f) == text);
        CHECK(parse_poly(R, format_poly(f)) == f);
    }
    CHECK(format_poly(Polynomial::zero(R)) == "0");
    CHECK(parse_poly(R, "0").is_zero());
    CHECK(parse_poly(R, " x + y ") == parse_poly(R, "x+y"));
    CHECK(parse_poly(R, "x-y") == parse_poly(R, "x+6*y"));
    CHECK(parse_poly(R, "7*x").is_zero());
}

TEST_CASE("polynomial parse errors name the problem") {
    auto R = make_ring(2, {"x", "y"});
    CHECK_THROWS_AS(parse_poly(R, "x+w"), parse_error);
    CHECK_THROWS_AS(parse_poly(R, "x^"), parse_error);
    CHECK_THROWS_AS(parse_poly(R, ""), parse_error);
    CHECK(parse_poly_list(R, "x,,y").size() == 2);  // blank entries are skipped
}

TEST_CASE("transplant relocates variables by index map") {
    auto R = make_ring(2, {"a", "b"});
    auto S = make_ring(2, {"u", "a", "b"});
    Polynomial f = parse_poly(R, "a*b+b^2");
    Polynomial g = transplant(f, S, {1, 2});
    CHECK(g == parse_poly(S, "a*b+b^2"));
    // mapping back is fine as long as the forbidden variable is unused
    CHECK(transplant(g, R, {-1, 0, 1}) == f);
    CHECK_THROWS_AS(transplant(parse_poly(S, "u+a"), R, {-1, 0, 1}), error);
}

TEST_CASE("normal form reduces completely") {
    auto R = lex_ring(2, {"x", "y"});
    std::vector<Polynomial> basis = {parse_poly(R, "x^2+y"), parse_poly(R, "y^2+y")};
    // x^2*y -> y*y -> y
    CHECK(normal_form(parse_poly(R, "x^2*y"), basis) == parse_poly(R, "y"));
    CHECK(normal_form(parse_poly(R, "x^2+y"), basis).is_zero());
    // the remainder is a fixed point of reduction
    Polynomial r = normal_form(parse_poly(R, "x^3*y^2+x*y"), basis);
    CHECK(normal_form(r, basis) == r);
}

TEST_CASE("reduced basis collapses redundant generators") {
    auto R = make_ring(2, {"x", "y"});
    auto gb = reduced_groebner(R, {parse_poly(R, "x^2"), parse_poly(R, "x^2+x")});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == parse_poly(R, "x"));
}

TEST_CASE("reduced basis ignores generator order and duplication") {
    auto R = make_ring(5, {"x", "y", "z"});
    std::vector<Polynomial> gens = {parse_poly(R, "x*y+z"), parse_poly(R, "y*z+x"),
                                    parse_poly(R, "x^2+y^2")};
    auto gb = reduced_groebner(R, gens);
    std::vector<Polynomial> shuffled = {gens[2], gens[0], gens[1], gens[0]};
    CHECK(reduced_groebner(R, shuffled) == gb);
    // every input reduces to zero against the basis
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("elimination cuts the leading block") {
    auto R = make_ring(2, {"t", "x", "y"}, {OrderKind::elim, 1});
    // t*x = 1 forces y = x^2 on the small variables
    auto down = eliminate(R, {parse_poly(R, "t*x+1"), parse_poly(R, "y+x^2")}, 1);
    REQUIRE(down.size() == 1);
    CHECK(down[0] == parse_poly(R, "x^2+y"));
    // y - t*x alone meets k[x,y] in nothing
    CHECK(eliminate(R, {parse_poly(R, "y+t*x")}, 1).empty());
}

TEST_CASE("pair budget surfaces as a resource error") {
    auto R = make_ring(7, {"x", "y", "z"});
    GroebnerBudget tiny{1};
    std::vector<Polynomial> gens = {parse_poly(R, "x^2+y*z"), parse_poly(R, "y^2+x*z"),
                                    parse_poly(R, "z^2+x*y")};
    CHECK_THROWS_AS(reduced_groebner(R, gens, tiny), resource_error);
}

TEST_CASE("reduction work budget surfaces as a resource error") {
    auto R = make_ring(7, {"x", "y", "z"});
    GroebnerBudget tiny;
    tiny.max_reduction_ops = 8;
    std::vector<Polynomial> gens = {parse_poly(R, "x^2+y*z"), parse_poly(R, "y^2+x*z"),
                                    parse_poly(R, "z^2+x*y")};
    CHECK_THROWS_AS(reduced_groebner(R, gens, tiny), resource_error);
    // the same cap bounds a bare division chain
    CHECK_THROWS_AS(normal_form(parse_poly(R, "x^9+x^8+x^7+x^6+x^5"),
                                {parse_poly(R, "x-y")}, tiny),
                    resource_error);
}
