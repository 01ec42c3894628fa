#include "polyalg/analytic.hpp"
#include "polyalg/applications.hpp"
#include "polyalg/coherent.hpp"
#include "polyalg/compose.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/fock.hpp"
#include "polyalg/quadratic.hpp"

#include <benchmark/benchmark.h>

using namespace polyalg;

namespace {

const QuadLabel kQ11{Rational(1, 2), Rational(1, 4)};

void BM_BuildQuadratic(benchmark::State& state) {
  const long long cutoff = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build(QuadraticClass::QPlus11, kQ11, cutoff));
}
BENCHMARK(BM_BuildQuadratic)->Arg(16)->Arg(64)->Arg(256);

void BM_BuildCubic(benchmark::State& state) {
  const Labels lab{{"k1", Rational(1, 2)}, {"k2", Rational(1, 2)}, {"k", Rational(1)}};
  const auto c = parse_cubic_class("cplus_11_11");
  for (auto _ : state) benchmark::DoNotOptimize(build_cubic(c, lab, state.range(0)));
}
BENCHMARK(BM_BuildCubic)->Arg(16)->Arg(64);

void BM_VerifyClosure(benchmark::State& state) {
  auto rep = build(QuadraticClass::QPlus11, kQ11, state.range(0));
  auto f = structure_polynomial(QuadraticClass::QPlus11, kQ11);
  for (auto _ : state) benchmark::DoNotOptimize(verify_closure(rep, f, 1e-10));
}
BENCHMARK(BM_VerifyClosure)->Arg(16)->Arg(64);

void BM_OracleCheck(benchmark::State& state) {
  auto rep = build(QuadraticClass::QPlus11, kQ11, state.range(0));
  auto real = quadratic_realization(QuadraticClass::QPlus11, kQ11);
  auto space = FockSpace::uniform(real.modes(), levels_for(rep, real));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_check(rep, real, space, 1e-10));
}
BENCHMARK(BM_OracleCheck)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BgState(benchmark::State& state) {
  auto rep = build(QuadraticClass::QPlus11, kQ11, 400);
  for (auto _ : state) benchmark::DoNotOptimize(bg_state(rep, {1.5, 0.5}, 1e-12));
}
BENCHMARK(BM_BgState);

void BM_FitOrder(benchmark::State& state) {
  auto left = to_ladder(su2_component(Rational(11, 2)));
  auto right = build(QuadraticClass::QMinus2, {Rational(11, 2), Rational(33, 4)}, 12);
  auto comp = compose(left, right, (left.n0_start - right.n0_start) / 2, Coupling::Same, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fit_order(comp, 1e-10));
}
BENCHMARK(BM_FitOrder);

void BM_Dicke(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicke_spectrum(Rational(1), Rational(state.range(0)), 1.0, 0.7));
  }
}
BENCHMARK(BM_Dicke)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
