#include <benchmark/benchmark.h>

#include "hermitia/enumerate.hpp"
#include "hermitia/escalate.hpp"
#include "hermitia/hermitian.hpp"
#include "hermitia/qform.hpp"

using namespace hermitia;

static void BM_represents(benchmark::State& state) {
    QuadraticForm q = parse_form("w^2+w*x+2*x^2+3*y^2+3*y*z+6*z^2");
    i64 t = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(represents(q, t));
}
BENCHMARK(BM_represents)->Arg(290)->Arg(1000);

static void BM_represented_set(benchmark::State& state) {
    QuadraticForm q = QuadraticForm::diagonal({1, 2, 5, 10});
    for (auto _ : state) benchmark::DoNotOptimize(represented_set(q, state.range(0)));
}
BENCHMARK(BM_represented_set)->Arg(500)->Arg(2000);

static void BM_reduce(benchmark::State& state) {
    QuadraticForm q = parse_form("w^2+2*x^2+x*y+4*y^2+w*z+8*z^2");
    for (auto _ : state) benchmark::DoNotOptimize(reduce(q));
}
BENCHMARK(BM_reduce);

static void BM_is_equivalent(benchmark::State& state) {
    QuadraticForm a = parse_form("w^2+2*x^2+x*y+3*y^2+w*z+6*z^2");
    // same form after a unimodular change of variables
    IMat u(4, 4);
    i64 entries[16] = {1, 1, 0, 2, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) u.at(i, j) = entries[4 * i + j];
    QuadraticForm b = apply(a, u);
    for (auto _ : state) benchmark::DoNotOptimize(is_equivalent(a, b));
}
BENCHMARK(BM_is_equivalent);

static void BM_trace_form(benchmark::State& state) {
    const HermitianLattice& L = catalog().back();
    for (auto _ : state) benchmark::DoNotOptimize(trace_form(L));
}
BENCHMARK(BM_trace_form);

static void BM_binary_escalations(benchmark::State& state) {
    EscalatorNode root;
    root.form = QuadraticForm::diagonal({1});
    root.rank = 1;
    root.truant = 2;
    for (auto _ : state) benchmark::DoNotOptimize(escalations(root, Regime::IntegerValued));
}
BENCHMARK(BM_binary_escalations);

BENCHMARK_MAIN();
