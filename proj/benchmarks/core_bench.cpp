#include <benchmark/benchmark.h>

#include "frobx/cech.hpp"
#include "frobx/finite_modules.hpp"

using namespace frobx;

namespace {

std::vector<Polynomial> symmetric_cubics(const RingPtr& R) {
    return {parse_poly(R, "x^2+y*z"), parse_poly(R, "y^2+x*z"), parse_poly(R, "z^2+x*y")};
}

}  // namespace

static void BM_ReducedGroebner(benchmark::State& state) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    auto gens = symmetric_cubics(R);
    for (auto _ : state) {
        auto G = reduced_groebner(R, gens);
        benchmark::DoNotOptimize(G);
    }
}
BENCHMARK(BM_ReducedGroebner);

static void BM_NormalForm(benchmark::State& state) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    auto G = reduced_groebner(R, symmetric_cubics(R));
    Polynomial f = parse_poly(R, "x+y+z");
    for (int i = 0; i < 3; ++i) f = f * f;
    for (auto _ : state) {
        Polynomial r = normal_form(f, G);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_NormalForm);

static void BM_FrobeniusPreimage(benchmark::State& state) {
    RingPtr R = make_ring(3, {"x", "y"});
    Ideal b(R, {parse_poly(R, "x^3+x*y^2+y"), parse_poly(R, "x^2*y+2")});
    i64 e = state.range(0);
    for (auto _ : state) {
        Ideal j = frobenius_preimage(b, e);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_FrobeniusPreimage)->Arg(1)->Arg(2);

static void BM_NodeTcChain(benchmark::State& state) {
    RingPtr R = make_ring(2, {"s", "t"});
    RingContext ctx = RingContext::of(QuotientRing::make(R, {parse_poly(R, "s*t")}, true));
    SopData s = make_sop(ctx, {parse_poly(R, "s+t")});
    Polynomial r = parse_poly(R, "s");
    for (auto _ : state) {
        TcReport rep = tc_param_membership_chain(s, r, 1, 6);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_NodeTcChain);

static void BM_CubicTcChain(benchmark::State& state) {
    RingPtr R = make_ring(7, {"x", "y", "z"});
    RingContext ctx = RingContext::of(QuotientRing::make(R, {parse_poly(R, "x^3+y^3+z^3")}, true));
    SopData s = make_sop(ctx, {parse_poly(R, "x"), parse_poly(R, "y")});
    Polynomial r = parse_poly(R, "z^2");
    for (auto _ : state) {
        TcReport rep = tc_param_membership_chain(s, r, 1, 2);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CubicTcChain);

static void BM_FiniteGrann(benchmark::State& state) {
    RingPtr R = make_ring(2, {"t"});
    RingContext ctx = RingContext::of(R);
    Ideal cube(ctx, {parse_poly(R, "t^3")});
    auto M = FiniteCyclicsModule::diagonal(ctx, {cube}, {parse_poly(R, "1")});
    auto one = M.element({parse_poly(R, "1")});
    for (auto _ : state) {
        GradedIdealChain c = M.grann_element(one);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FiniteGrann);

BENCHMARK_MAIN();
