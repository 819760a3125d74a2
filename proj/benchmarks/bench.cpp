#include "verlinde/bracket.hpp"
#include "verlinde/character.hpp"
#include "verlinde/fusion_sl2.hpp"
#include "verlinde/gfusion.hpp"
#include "verlinde/principal.hpp"
#include "verlinde/root_datum.hpp"

#include <benchmark/benchmark.h>

using namespace verlinde;

static void BM_FreudenthalE8Adjoint(benchmark::State& state) {
    const RootDatum e8 = RootDatum::build('E', 8);
    const Weight adjoint = e8.highest_root().weight;
    for (auto _ : state) {
        DominantCharacter chi = freudenthal_character(e8, adjoint);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_FreudenthalE8Adjoint);

static void BM_FuseRankOne(benchmark::State& state) {
    for (auto _ : state) {
        VerpObject prod = fuse(50, 60, 127);
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_FuseRankOne);

static void BM_TensorDecomposeG2(benchmark::State& state) {
    const RootDatum g2 = RootDatum::build('G', 2);
    for (auto _ : state) {
        AlcoveDecomposition dec =
            tensor_decompose(g2, g2.fundamental_weight(1), g2.fundamental_weight(2), 19);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_TensorDecomposeG2);

static void BM_BracketCell(benchmark::State& state) {
    const SubalgebraContext ctx(10, 23);
    const auto triples = ctx.sorted_triples();
    for (auto _ : state) {
        Rat acc = 0;
        for (const auto& t : triples) acc += s_value(ctx.n(), t[0], t[1], t[2], ctx.p());
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BracketCell);

static void BM_StraightenDot(benchmark::State& state) {
    const RootDatum e7 = RootDatum::build('E', 7);
    const Weight xi = {31, 17, 45, 12, 28, 9, 52};
    for (auto _ : state) {
        StraightenResult res = straighten_dot(e7, xi, 23);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_StraightenDot);

static void BM_SpinImage(benchmark::State& state) {
    const RootDatum d8 = RootDatum::build('D', 8);
    const StringMultiset strings = restriction_strings(d8, d8.fundamental_weight(8));
    for (auto _ : state) {
        VerpObject image = verp_image(strings, 17);
        benchmark::DoNotOptimize(image);
    }
}
BENCHMARK(BM_SpinImage);

static void BM_SubalgebraExhaustive(benchmark::State& state) {
    const SubalgebraContext ctx(16, 37);
    for (auto _ : state) {
        auto masks = ctx.enumerate_exhaustive();
        benchmark::DoNotOptimize(masks);
    }
}
BENCHMARK(BM_SubalgebraExhaustive);

BENCHMARK_MAIN();
