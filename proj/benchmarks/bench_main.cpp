#include <benchmark/benchmark.h>

#include "ekc/autact.hpp"
#include "ekc/catalog.hpp"
#include "suites.hpp"
#include "tables.hpp"

using namespace ekc;

namespace {

void BM_ArfCyclic(benchmark::State& state) {
  const Int r = state.range(0);
  QuadraticRefinement q = cyclic_refinement({1, r, 0});
  for (auto _ : state) benchmark::DoNotOptimize(arf(q));
}
BENCHMARK(BM_ArfCyclic)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_ArfRandom(benchmark::State& state) {
  check::Rng rng(1);
  std::vector<QuadraticRefinement> qs;
  for (int i = 0; i < 64; ++i) qs.push_back(check::random_refinement(rng, 200, 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(arf(qs[i++ % qs.size()]));
}
BENCHMARK(BM_ArfRandom);

void BM_IsoSearchEnumerate(benchmark::State& state) {
  const Int n = state.range(0);
  auto t = transport({{n, n}, {{Rational(0), Rational(1, n)}, {Rational(1, n), Rational(0)}}, {}});
  for (auto _ : state) benchmark::DoNotOptimize(iso_search(t.form, t.form, {}, SearchMode::enumerate).size());
}
BENCHMARK(BM_IsoSearchEnumerate)->Arg(2)->Arg(4)->Arg(8);

void BM_ImPSplitSum(benchmark::State& state) {
  const Base B = cli::split_sum_base(1);
  for (auto _ : state) benchmark::DoNotOptimize(im_P(B).r);
}
BENCHMARK(BM_ImPSplitSum)->Unit(benchmark::kMillisecond);

void BM_ImPRandom(benchmark::State& state) {
  check::Rng rng(2);
  std::vector<Base> bases;
  for (int i = 0; i < 32; ++i) bases.push_back(check::random_base(rng, 64, 1));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(im_P(bases[i++ % bases.size()]).generator);
}
BENCHMARK(BM_ImPRandom)->Unit(benchmark::kMicrosecond);

void BM_InvariantsReport(benchmark::State& state) {
  const Manifold m = connected_sum(sphere_bundle(-112, 16), sphere_bundle(0, 112));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_report(m).d_m);
}
BENCHMARK(BM_InvariantsReport)->Unit(benchmark::kMillisecond);

void BM_DiffeoDecision(benchmark::State& state) {
  const Manifold a = connected_sum(free_piece(1, 16), homotopy_sphere(1));
  const Manifold b = reverse(a);
  for (auto _ : state) benchmark::DoNotOptimize(diffeo_decision(a.dist, b.dist));
}
BENCHMARK(BM_DiffeoDecision)->Unit(benchmark::kMicrosecond);

void BM_InertiaTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::inertia_pairs_table().matches());
}
BENCHMARK(BM_InertiaTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
