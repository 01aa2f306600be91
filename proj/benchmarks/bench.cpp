#include <benchmark/benchmark.h>

#include "egv/e8/e8.hpp"
#include "egv/modforms/modforms.hpp"
#include "egv/theta/theta.hpp"
#include "egv/verifier/verifier.hpp"

using namespace egv;

namespace {

TablePtr roots_table(int n) {
  VariableTable::Builder b;
  for (int i = 1; i <= n; ++i) b.add_even("x" + std::to_string(i));
  return b.build();
}

GradedElement sum_of_variables(const TablePtr& t, int cap) {
  GradedElement s(t, cap);
  for (std::size_t i = 0; i < t->size(); ++i) s += GradedElement::variable(t, cap, i, Rational(i + 1));
  return s;
}

}  // namespace

static void BM_GradedMultiply(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  TablePtr t = roots_table(4);
  GradedElement a = exp_nilpotent(sum_of_variables(t, cap));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_GradedMultiply)->Arg(8)->Arg(12)->Arg(16);

static void BM_SeriesExp(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  TablePtr t = roots_table(3);
  QSeries f = witten_factor(GradedElement::variable(t, 8, "x1"), N);
  f.set(0, f.coeff(0).filter([](const GradedElement::Term& term) { return term.degree > 0; }));
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(f));
}
BENCHMARK(BM_SeriesExp)->Arg(2)->Arg(4);

static void BM_Eisenstein(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eisenstein(6, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Eisenstein)->Arg(10)->Arg(100);

static void BM_ThetaV(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  TablePtr t = roots_table(8);
  std::vector<GradedElement> w = e8_forms(t, cap, "x", 8);
  for (auto _ : state) benchmark::DoNotOptimize(theta_V(w, 2));
}
BENCHMARK(BM_ThetaV)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyCase(benchmark::State& state, const char* id) {
  CaseSpec c = case_by_id(id);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(c, false));
}
BENCHMARK_CAPTURE(BM_VerifyCase, T3_3, "T3.3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCase, T4_6, "T4.6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCase, T3_4, "T3.4")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
