#include <benchmark/benchmark.h>

#include "ineqcert/catalog.hpp"
#include "ineqcert/certify.hpp"
#include "ineqcert/expr.hpp"
#include "ineqcert/primitives.hpp"
#include "ineqcert/series.hpp"
#include "ineqcert/verify.hpp"

using namespace ineqcert;

namespace {

void BM_Primitive(benchmark::State& state) {
  const auto fn = static_cast<Primitive>(state.range(0));
  const Interval x(0.7, 0.7 + 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(primitive(fn, x));
  state.SetLabel(std::string(name(fn)));
}
BENCHMARK(BM_Primitive)->DenseRange(0, 9);

void BM_IntervalSin(benchmark::State& state) {
  const Interval x(1.1, 1.2);
  for (auto _ : state) benchmark::DoNotOptimize(sin(x));
}
BENCHMARK(BM_IntervalSin);

void BM_Parse(benchmark::State& state) {
  const std::string text = "sinc(x)^3 - (cos(x)+2)/3 + xcot(x)^2 * sinhc(x/2)";
  for (auto _ : state) benchmark::DoNotOptimize(parse_expr(text));
}
BENCHMARK(BM_Parse);

void BM_Differentiate(benchmark::State& state) {
  const Expr e = parse_expr("sinc(x)^3 / cos(x) - 1");
  for (auto _ : state) benchmark::DoNotOptimize(differentiate(e));
}
BENCHMARK(BM_Differentiate);

void BM_Series(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series("xcot", n));
}
BENCHMARK(BM_Series)->Arg(10)->Arg(30)->Arg(60);

void BM_VerifySignCusa(benchmark::State& state) {
  const Expr e = parse_expr("(cos(x)+2)/3 - sinc(x)");
  const SignConfig cfg = default_sign_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_sign(e, Interval(0, 1.5707963267948966), {Interval(0.0)}, cfg, false));
  }
}
BENCHMARK(BM_VerifySignCusa)->Unit(benchmark::kMillisecond);

void BM_VerifyRecord(benchmark::State& state) {
  const auto& rec = builtin_catalog().get("thm1_upper");
  const SignConfig cfg = default_sign_config();
  for (auto _ : state) benchmark::DoNotOptimize(verify_inequality(rec, cfg));
}
BENCHMARK(BM_VerifyRecord)->Unit(benchmark::kMillisecond);

void BM_LimitAt(benchmark::State& state) {
  const auto& m = builtin_catalog().get_monotone("mono_f1");
  for (auto _ : state) benchmark::DoNotOptimize(limit_at(m.function, m.lo));
}
BENCHMARK(BM_LimitAt)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
