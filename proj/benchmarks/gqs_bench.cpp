#include <benchmark/benchmark.h>

#include "gqs/checks.hpp"
#include "gqs/classification.hpp"
#include "gqs/closed_forms.hpp"

namespace {

gqs::Family family_for(int which) {
  switch (which) {
    case 0: return gqs::Family::A(1, 1);
    case 1: return gqs::Family::B(1, 1);
    case 2: return gqs::Family::B0(3);
    case 3: return gqs::Family::C(3);
    default: return gqs::Family::D(2, 2);
  }
}

void BM_ScalarMultiplyAdd(benchmark::State& state) {
  const gqs::ExactScalar a = gqs::ExactScalar::fraction(3, 7) + gqs::ExactScalar::sqrt2();
  const gqs::ExactScalar b = gqs::ExactScalar::fraction(-5, 2) * gqs::ExactScalar::sqrt2();
  gqs::ExactScalar acc;
  for (auto _ : state) {
    acc += a * b;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ScalarMultiplyAdd);

void BM_BuildAlgebra(benchmark::State& state) {
  const gqs::Family f = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gqs::build(f));
  state.SetLabel(f.name());
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CheckAlgebra(benchmark::State& state) {
  const gqs::AlgebraModel model = gqs::build(family_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gqs::check_algebra(model, 100, 1));
  state.SetLabel(model.family().name());
}
BENCHMARK(BM_CheckAlgebra)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SimpleSystems(benchmark::State& state) {
  const gqs::Family f = gqs::Family::A(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gqs::enumerate_simple_systems(f));
  state.SetLabel(f.name());
}
BENCHMARK(BM_SimpleSystems)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateAll(benchmark::State& state) {
  const gqs::Family f = family_for(static_cast<int>(state.range(0)));
  gqs::EnumerationOptions opt;
  opt.include_nondistinguished = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(gqs::enumerate_all(f, opt));
  state.SetLabel(f.name() + (opt.include_nondistinguished ? " all systems" : " distinguished"));
}
BENCHMARK(BM_EnumerateAll)->ArgsProduct({{0, 2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GenerateRelations(benchmark::State& state) {
  const gqs::ClosedForm cf = gqs::build_closed_form("pBose", 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gqs::generate_relations(cf.caos));
  state.SetLabel(cf.family.name());
}
BENCHMARK(BM_GenerateRelations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gqs::verify_closed_form("A21R", 1, 2, 2));
}
BENCHMARK(BM_VerifyClosedForm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
