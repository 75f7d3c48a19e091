#include <benchmark/benchmark.h>

#include "premetric/electrodynamics.hpp"
#include "premetric/form_expr.hpp"
#include "premetric/hodge.hpp"
#include "premetric/random_forms.hpp"

namespace premetric {
namespace {

// Arguments: dimension n, degree p.
void BM_Wedge(benchmark::State& state) {
  const Chart c(static_cast<int>(state.range(0)));
  const int p = static_cast<int>(state.range(1));
  FormSampler rng(1, 2);
  const Form a = rng.nonzero_form(c, p);
  const Form b = rng.nonzero_form(c, c.n - p);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Args({4, 2})->Args({5, 2})->Args({6, 3});

void BM_ExteriorDerivative(benchmark::State& state) {
  const Chart c(static_cast<int>(state.range(0)));
  FormSampler rng(2, 2);
  const Form a = rng.nonzero_form(c, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ext_d(a));
}
BENCHMARK(BM_ExteriorDerivative)->Args({4, 2})->Args({5, 2})->Args({6, 3});

void BM_HodgeMinkowski(benchmark::State& state) {
  const Chart c(4);
  const MetricSpec m = MetricSpec::minkowski(c);
  FormSampler rng(3, 2);
  const Form a = rng.nonzero_form(c, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hodge(m, a));
}
BENCHMARK(BM_HodgeMinkowski);

void BM_ConservationResidual(benchmark::State& state) {
  const Chart c(static_cast<int>(state.range(0)));
  const int p = static_cast<int>(state.range(1));
  FormSampler rng(4, 2);
  const FieldConfig fc(rng.nonzero_form(c, p), rng.nonzero_form(c, c.n - p, Twist::Twisted));
  const VectorField u = rng.vector_field(c);
  for (auto _ : state) benchmark::DoNotOptimize(conservation_residual(u, fc));
}
BENCHMARK(BM_ConservationResidual)->Args({2, 1})->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  const Chart c(4);
  const std::string text = "(x0^2 - 1/3) * dx1^dx2 + x1*x3 * dx0^dx3 - 7/2 * dx2^dx3";
  for (auto _ : state) benchmark::DoNotOptimize(print_form(parse_form(text, c, 2)));
}
BENCHMARK(BM_ParsePrint);

}  // namespace
}  // namespace premetric
BENCHMARK_MAIN();
