#include <benchmark/benchmark.h>

#include "qabel/abel.hpp"
#include "qabel/qcomb.hpp"
#include "qabel/registry.hpp"

using namespace qabel;

namespace {

void BM_QPolyGcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QPoly lhs = qfac(n).num();
  const QPoly rhs = (qfac(n / 2) * qfac(n - n / 2)).num();
  for (auto _ : state) benchmark::DoNotOptimize(gcd(lhs, rhs));
}
BENCHMARK(BM_QPolyGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_QBinom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfac(n) / (qfac(n / 2) * qfac(n - n / 2)));
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16)->Arg(32);

void BM_MPolyMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MPoly lhs = abel_poly(FamilyId::A, n);
  const MPoly rhs = abel_poly(FamilyId::G, n);
  for (auto _ : state) benchmark::DoNotOptimize(lhs * rhs);
}
BENCHMARK(BM_MPolyMultiply)->Arg(3)->Arg(6)->Arg(9);

void BM_AbelExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MPoly f = qprod(MPoly::var(Symbol::y), MPoly::var(Symbol::x), n, ProdSign::plus);
  for (auto _ : state) benchmark::DoNotOptimize(abel_expand(f));
}
BENCHMARK(BM_AbelExpand)->Arg(4)->Arg(8);

void BM_Verify13(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_identity("1.3", {{"n", n}}));
}
BENCHMARK(BM_Verify13)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
