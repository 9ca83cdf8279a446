#include <benchmark/benchmark.h>

#include "qlift/eta.hpp"
#include "qlift/lift.hpp"
#include "qlift/numerics.hpp"
#include "qlift/theta.hpp"
#include "qlift/vvform.hpp"

using namespace qlift;

namespace {

void BM_Eta38Expansion(benchmark::State& state) {
  long terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(named_form_uncached(NamedForm::Eta8, terms));
  }
}
BENCHMARK(BM_Eta38Expansion)->Arg(500)->Arg(2000)->Arg(8000);

void BM_FExpansion(benchmark::State& state) {
  long terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(named_form_uncached(NamedForm::F, terms));
  }
}
BENCHMARK(BM_FExpansion)->Arg(500)->Arg(2000)->Arg(8000);

void BM_JInvariant(benchmark::State& state) {
  long terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(named_form_uncached(NamedForm::J, terms));
  }
}
BENCHMARK(BM_JInvariant)->Arg(250)->Arg(1000)->Arg(3000);

void BM_SeriesMul(benchmark::State& state) {
  long terms = state.range(0);
  RationalSeries a = named_form(NamedForm::J3, terms);
  RationalSeries b = named_form(NamedForm::Delta3, terms);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(200)->Arg(800);

void BM_ThetaEnumeration(benchmark::State& state) {
  long terms = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_p4_vector(terms));
  }
}
BENCHMARK(BM_ThetaEnumeration)->Arg(20)->Arg(60);

void BM_BasisSolve(benchmark::State& state) {
  Rational m = make_rational(3 * state.range(0) + 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(basis_fm(m, 12));
  }
}
BENCHMARK(BM_BasisSolve)->Arg(1)->Arg(4);

void BM_EvalEta(benchmark::State& state) {
  long bits = state.range(0);
  CMPoint z_u(3, -3, -3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_eta(z_u, bits));
  }
}
BENCHMARK(BM_EvalEta)->Arg(256)->Arg(1024);

void BM_LiftPipelineWarm(benchmark::State& state) {
  // shared expansions cached by the first run; measures the per-index work
  LiftOptions opts;
  run_lift_pipeline(make_rational(2, 3), opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_lift_pipeline(make_rational(2, 3), opts));
  }
}
BENCHMARK(BM_LiftPipelineWarm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
