#include <benchmark/benchmark.h>

#include "curvedim/constructions.hpp"
#include "curvedim/curves.hpp"
#include "curvedim/theorems.hpp"

using namespace curvedim;

namespace {

SearchBudget seeded(std::uint64_t seed) {
  SearchBudget b;
  b.seed = seed;
  return b;
}

void BM_PlantThm33(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plant_on_curve_config(5, 2, 11, 2, seeded(seed++)));
  }
}
BENCHMARK(BM_PlantThm33);

void BM_DetectAllButTwo(benchmark::State& state) {
  const PlantedConfig cfg = plant_on_curve_config(5, 2, 11, 2, seeded(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_maximal_all_but(cfg.nodes, 5, 2, 2));
  }
}
BENCHMARK(BM_DetectAllButTwo);

void BM_VerifyFourCurves(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_four_curves(5, 4, seed++));
  }
}
BENCHMARK(BM_VerifyFourCurves);

void BM_Line4Census(benchmark::State& state) {
  SearchBudget b = seeded(5);
  b.coordinate_bound = 9;
  const ChungYaoLattice lat = chung_yao(random_lines_general_position(5, b));
  for (auto _ : state) {
    benchmark::DoNotOptimize(line4_census(lat));
  }
}
BENCHMARK(BM_Line4Census);

}  // namespace

BENCHMARK_MAIN();
