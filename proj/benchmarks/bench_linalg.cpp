#include <benchmark/benchmark.h>

#include "curvedim/matrix.hpp"
#include "curvedim/nodeset.hpp"
#include "curvedim/rng.hpp"

using namespace curvedim;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols,
                        std::uint64_t seed) {
  Rng rng(seed);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = Rational(rng.in_range(-9, 9), rng.in_range(1, 5));
    }
  }
  return m;
}

void BM_Rank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const RatMatrix m = random_matrix(n, n, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_Rank)->Arg(6)->Arg(12)->Arg(21);

void BM_Nullspace(benchmark::State& state) {
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  const RatMatrix m = random_matrix(rows, rows + 4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nullspace(m));
  }
}
BENCHMARK(BM_Nullspace)->Arg(8)->Arg(16);

void BM_VandermondeRank21(benchmark::State& state) {
  Rng rng(11);
  NodeSet x;
  while (x.size() < 21) {
    const Point p{Rational(rng.in_range(-30, 30), rng.in_range(1, 4)),
                  Rational(rng.in_range(-30, 30), rng.in_range(1, 4))};
    if (!x.contains(p)) x.push_back(p);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(vandermonde(x, 5)));
  }
}
BENCHMARK(BM_VandermondeRank21);

}  // namespace
