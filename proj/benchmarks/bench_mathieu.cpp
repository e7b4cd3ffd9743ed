#include <cmath>
#include <complex>

#include <benchmark/benchmark.h>

#include "mcf/continued_fraction.hpp"
#include "mcf/mathieu.hpp"
#include "mcf/mathieu_forms.hpp"
#include "mcf/oracle.hpp"

namespace {

using namespace mcf;

void BM_AbConvergent(benchmark::State& state) {
  const auto cf = ab_form(MathieuCFParams<double>(1.0, 3.0));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergent(cf, n).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AbConvergent)->RangeMultiplier(4)->Range(16, 4096);

void BM_KappaLambdaConvergent(benchmark::State& state) {
  const auto cf = kappa_lambda_form(MathieuCFParams<double>(1.0, 3.0));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergent(cf, n).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KappaLambdaConvergent)->RangeMultiplier(4)->Range(16, 4096);

void BM_TailIdentityToWidth(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::size_t terms = 0;
  for (auto _ : state) {
    const CertifiedValue v = tail_identity_to_width(1.0, k, 1e-12);
    terms = v.terms_used;
    benchmark::DoNotOptimize(v.enclosure.lower);
  }
  state.counters["cf_terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_TailIdentityToWidth)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_DirectEnclosure(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mathieu_direct(1.0, tol).lower);
  state.counters["terms"] = static_cast<double>(direct_terms_required(1.0, tol));
}
BENCHMARK(BM_DirectEnclosure)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_Truncated(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mathieu_truncated(1.0, tol).lower);
  state.counters["terms"] = static_cast<double>(truncated_terms_required(1.0, tol));
}
BENCHMARK(BM_Truncated)->DenseRange(6, 12, 3)->Unit(benchmark::kMicrosecond);

void BM_Trigamma(benchmark::State& state) {
  std::complex<double> z{1.0, -static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(trigamma(z));
}
BENCHMARK(BM_Trigamma)->Arg(1)->Arg(10)->Arg(100);

void BM_Integral(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mathieu_integral(r, 1e-10));
}
BENCHMARK(BM_Integral)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_AsymptoticAuto(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_auto(10.0).value);
}
BENCHMARK(BM_AsymptoticAuto);

}  // namespace

BENCHMARK_MAIN();
