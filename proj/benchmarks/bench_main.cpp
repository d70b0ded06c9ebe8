#include <benchmark/benchmark.h>

#include "pointerlab/dephasing.hpp"
#include "pointerlab/density_matrix.hpp"
#include "pointerlab/dft.hpp"
#include "pointerlab/frame.hpp"
#include "pointerlab/grid.hpp"
#include "pointerlab/rng.hpp"
#include "pointerlab/spectral.hpp"

namespace {

using namespace pointerlab;

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double u = 2.0 * rng.uniform01() - 1.0;
      m(i, j) = u;
      m(j, i) = u;
    }
  return m;
}

void BM_JacobiEigh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = random_symmetric(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(a));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_JacobiEigh)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_DephaseConstantRho(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid grid = make_grid(n, 40.0);
  const DephasingKernel kernel(0.5, grid);
  const DensityMatrix rho = constant_rho(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dephase(rho, kernel));
  }
}
BENCHMARK(BM_DephaseConstantRho)->Arg(128)->Arg(256)->Arg(512);

void BM_CirculantEigenvaluesDft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid grid = make_grid(n, 40.0);
  const DephasingKernel kernel(0.5, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circulant_eigenvalues(kernel.first_row()));
  }
}
BENCHMARK(BM_CirculantEigenvaluesDft)->Arg(256)->Arg(512);

void BM_GramMatrix(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Grid grid = make_grid(512, 40.0);
  const PointerFrame frame = equally_spaced_frame(grid, k, 0.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_matrix(frame));
  }
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(16)->Arg(32);

void BM_GaussianState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid grid = make_grid(n, 40.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_state(grid, {17.3, 1.0}));
  }
}
BENCHMARK(BM_GaussianState)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
