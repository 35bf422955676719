#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "strata/strata.hpp"

using namespace strata;

namespace {

void BM_FaceposetConstruction(benchmark::State& state) {
  auto torus = testing::pinched_torus(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto space = FiniteSpace::from_maximal_simplices(torus.simplices);
    benchmark::DoNotOptimize(space.size());
  }
}
BENCHMARK(BM_FaceposetConstruction)->Arg(6)->Arg(12)->Arg(24);

void BM_LocalHomologySheaf(benchmark::State& state) {
  auto torus = testing::pinched_torus(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(0)));
  auto space = FiniteSpace::from_maximal_simplices(torus.simplices);
  for (auto _ : state) {
    auto dm = make_delta_map(space, local_homology_sheaf(space, FieldSpec{2}));
    benchmark::DoNotOptimize(dm.size());
  }
  state.SetLabel(std::to_string(space.size()) + " elements");
}
BENCHMARK(BM_LocalHomologySheaf)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_LocalHomologySheafThreads(benchmark::State& state) {
  auto torus = testing::pinched_torus(12, 12);
  auto space = FiniteSpace::from_maximal_simplices(torus.simplices);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto dm = make_delta_map(space, local_homology_sheaf(space, FieldSpec{2}, threads), threads);
    benchmark::DoNotOptimize(dm.size());
  }
}
BENCHMARK(BM_LocalHomologySheafThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CoarsestStratification(benchmark::State& state) {
  auto torus = testing::pinched_torus(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(0)));
  auto space = FiniteSpace::from_maximal_simplices(torus.simplices);
  auto dm = make_delta_map(space, local_homology_sheaf(space, FieldSpec{2}));
  for (auto _ : state) {
    auto strat = coarsest_stratification(space, dm);
    benchmark::DoNotOptimize(strat.piece_count());
  }
}
BENCHMARK(BM_CoarsestStratification)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_VanishingDimension(benchmark::State& state) {
  auto f = testing::circle_hexagon();
  auto m = monomials_up_to_degree(2, static_cast<unsigned>(state.range(0)));
  std::vector<std::size_t> all(f.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto _ : state) {
    auto v = vanishing_dimension(f.points, all, m);
    benchmark::DoNotOptimize(v.dimension);
  }
}
BENCHMARK(BM_VanishingDimension)->Arg(2)->Arg(4)->Arg(6);

void BM_MapperPipeline(benchmark::State& state) {
  auto f = testing::torus_mapper(static_cast<std::size_t>(state.range(0)), 11);
  auto m = monomials_up_to_degree(3, 2);
  for (auto _ : state) {
    Cover cover = mapper_pullback_cover(f.points, f.values, f.intervals, f.radius);
    NerveComplex nerve = build_nerve(cover, static_cast<int>(cover.size()) - 1);
    auto dm = make_delta_map(nerve.space, vanishing_presheaf(nerve, f.points, m));
    auto strat = coarsest_stratification(nerve.space, dm);
    benchmark::DoNotOptimize(strat.piece_count());
  }
}
BENCHMARK(BM_MapperPipeline)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
