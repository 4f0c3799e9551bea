#include <benchmark/benchmark.h>

#include <vector>

#include "symladder/biliaison.hpp"
#include "symladder/expand.hpp"
#include "symladder/field.hpp"
#include "symladder/groebner.hpp"
#include "symladder/height.hpp"
#include "symladder/verify.hpp"

using namespace symladder;

namespace {

Ladder full(int n) {
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({i, j});
    return validate_ladder(n, cells);
}

MixedLadderIdeal classical(int n, int t) { return mk_ideal(full(n), {{n, n}}, {t}); }

// three-corner staircase: rows as intervals with non-decreasing left ends
MixedLadderIdeal staircase7() {
    std::vector<Cell> cells;
    auto row = [&](int i, int a, int b) {
        for (int j = a; j <= b; ++j) cells.push_back({i, j});
    };
    row(1, 1, 7);
    row(2, 2, 7);
    row(3, 3, 6);
    row(4, 4, 6);
    row(5, 5, 5);
    return mk_ideal(validate_ladder(7, cells), {{2, 7}, {4, 6}, {5, 5}}, {2, 3, 3});
}

void BM_validate_full_triangle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({i, j});
    for (auto _ : state) benchmark::DoNotOptimize(validate_ladder(n, cells));
}
BENCHMARK(BM_validate_full_triangle)->Arg(8)->Arg(16)->Arg(32);

void BM_normalize_staircase(benchmark::State& state) {
    const MixedLadderIdeal raw = staircase7();
    for (auto _ : state) benchmark::DoNotOptimize(normalize(raw));
}
BENCHMARK(BM_normalize_staircase);

void BM_height_profile(benchmark::State& state) {
    const MixedLadderIdeal ideal = normalize(staircase7());
    for (auto _ : state) benchmark::DoNotOptimize(h_plus(ideal));
}
BENCHMARK(BM_height_profile);

void BM_enumerate_generators(benchmark::State& state) {
    const MixedLadderIdeal ideal = classical(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_generators(ideal));
}
BENCHMARK(BM_enumerate_generators)->Arg(5)->Arg(6)->Arg(7);

void BM_expand_determinant(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    const VarTable vt(full(t));
    const RationalField field;
    const MonomialOrder order;
    Minor det;
    for (int i = 1; i <= t; ++i) {
        det.rows.push_back(i);
        det.cols.push_back(i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(expand_minor(det, vt, order, field));
}
BENCHMARK(BM_expand_determinant)->Arg(3)->Arg(4)->Arg(5);

void BM_groebner_classical(benchmark::State& state) {
    const MixedLadderIdeal ideal = classical(4, 2);
    const VarTable vt(ideal.ladder());
    const PrimeField field(32003);
    const MonomialOrder order;
    std::vector<Poly<PrimeField>> gens;
    for (const Minor& m : enumerate_generators(ideal))
        gens.push_back(expand_minor(m, vt, order, field));
    for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, order, field));
}
BENCHMARK(BM_groebner_classical);

void BM_descend_chain(benchmark::State& state) {
    const MixedLadderIdeal ideal = classical(6, 4);
    for (auto _ : state) benchmark::DoNotOptimize(descend_chain(ideal));
}
BENCHMARK(BM_descend_chain);

void BM_verify_step(benchmark::State& state) {
    const BiliaisonCertificate cert = descend_chain(mk_ideal(full(3), {{3, 3}}, {2}));
    for (auto _ : state) benchmark::DoNotOptimize(verify_step(cert.steps[0], 1));
}
BENCHMARK(BM_verify_step);

}  // namespace

BENCHMARK_MAIN();
