// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks of compilation, set operations and the zone decomposition.
// Arguments are magnitudes so that growth in the constant (logarithmic) can
// be told apart from growth in the coefficients (linear in their sum).
#include <benchmark/benchmark.h>

#include <vector>

#include <string>

#include "intdec/compile.hpp"
#include "intdec/dbm.hpp"
#include "intdec/idf.hpp"
#include "intdec/presburger.hpp"

namespace {

using namespace intdec;

frontend::VarContext reals(std::initializer_list<const char*> names) {
    frontend::VarContext ctx;
    for (const char* n : names) ctx.push_back({n, frontend::Sort::kReal});
    return ctx;
}

void BM_CompileLargeConstant(benchmark::State& state) {
    const Integer c = Integer(1) << static_cast<unsigned long>(state.range(0));
    const IntegerVector coeffs{Integer(1), Integer(-1)};
    for (auto _ : state) benchmark::DoNotOptimize(frontend::compile_atom(coeffs, frontend::Relation::kLe, c));
    state.SetLabel("constant 2^" + std::to_string(state.range(0)));
}
BENCHMARK(BM_CompileLargeConstant)->DenseRange(4, 64, 20)->Unit(benchmark::kMillisecond);

void BM_CompileCoefficient(benchmark::State& state) {
    const IntegerVector coeffs{Integer(state.range(0)), Integer(-1)};
    for (auto _ : state) benchmark::DoNotOptimize(frontend::compile_atom(coeffs, frontend::Relation::kLe, Integer(0)));
}
BENCHMARK(BM_CompileCoefficient)->RangeMultiplier(2)->Range(1, 16)->Unit(benchmark::kMillisecond);

void BM_IntegerIntersection(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntegerVector a(n, Integer(1)), b(n, Integer(0));
    for (std::size_t k = 0; k < n; k += 2) b[k] = 2;
    const auto s = IntegerSet::from_constraint({a, presburger::Relation::kLe, Integer(7)});
    const auto t = IntegerSet::from_constraint({b, presburger::Relation::kEq, Integer(4)});
    for (auto _ : state) benchmark::DoNotOptimize(presburger::intersection(s, t));
}
BENCHMARK(BM_IntegerIntersection)->DenseRange(2, 6, 2);

void BM_MixedBoolean(benchmark::State& state) {
    const auto f = frontend::compile(*frontend::parse("x <= 2y + 1 and y < 3"), reals({"x", "y"}));
    const auto g = frontend::compile(*frontend::parse("x + y = 1 or x > y"), reals({"x", "y"}));
    for (auto _ : state) benchmark::DoNotOptimize(union_of(intersection(f, g), complement(f)));
}
BENCHMARK(BM_MixedBoolean)->Unit(benchmark::kMillisecond);

void BM_RealProjection(benchmark::State& state) {
    const auto f = frontend::parse("exists x. y <= x and x < z and 2x + y <= 5");
    for (auto _ : state) benchmark::DoNotOptimize(frontend::compile(*f, reals({"y", "z"})));
}
BENCHMARK(BM_RealProjection)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
    const auto f = frontend::compile(*frontend::parse("x + y = z"), reals({"x", "y", "z"}));
    const RationalVector r{Rational(7, 3), Rational(-5, 4), Rational(13, 12)};
    for (auto _ : state) benchmark::DoNotOptimize(f.contains(r));
}
BENCHMARK(BM_Membership);

void BM_TimedDemo(benchmark::State& state) {
    Integer max_constant(1);
    for (long k = 0; k < state.range(0); ++k) max_constant *= 10;
    for (auto _ : state) {
        auto demo = dbm::timed_demo(max_constant);
        benchmark::DoNotOptimize(dbm::decompose(demo.zones));
    }
    state.SetLabel("M = 10^" + std::to_string(state.range(0)));
}
BENCHMARK(BM_TimedDemo)->DenseRange(1, 6, 5)->Unit(benchmark::kMillisecond);

void BM_ComposeDecompose(benchmark::State& state) {
    dbm::Dbm line(2);
    for (std::size_t i = 1; i <= 2; ++i) {
        line.set(0, i, dbm::Bound::le(Integer(0)));
        line.set(i, 0, dbm::Bound::lt(Integer(1)));
    }
    line.set(1, 2, dbm::Bound::le(Integer(0)));
    line.set(2, 1, dbm::Bound::le(Integer(0)));
    const std::vector<presburger::LinearConstraint> rows{
        {{Integer(-1), Integer(0)}, presburger::Relation::kLe, Integer(0)},
        {{Integer(0), Integer(1)}, presburger::Relation::kEq, Integer(0)}};
    const auto stairs = IntegerSet::from_constraints(2, rows);
    for (auto _ : state) benchmark::DoNotOptimize(dbm::decompose(dbm::compose(stairs, line)));
}
BENCHMARK(BM_ComposeDecompose)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
