#include <benchmark/benchmark.h>

#include <numbers>

#include "cvur/conjecture_lab.hpp"
#include "cvur/entropy.hpp"
#include "cvur/relations.hpp"
#include "cvur/states.hpp"
#include "cvur/symplectic.hpp"

namespace {

using namespace cvur;

void BM_RandomSymplectic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_symplectic(n, seed++));
  }
}
BENCHMARK(BM_RandomSymplectic)->Arg(1)->Arg(3);

void BM_Williamson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymplecticMatrix s = random_symplectic(n, 17);
  const GaussianState g = apply_symplectic(vacuum(n), s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(williamson_eigenvalues(g.cov));
  }
}
BENCHMARK(BM_Williamson)->Arg(1)->Arg(3);

void BM_GridEntropy1D(benchmark::State& state) {
  const GriddedDensity d = quadrature_pdf(vacuum(1), x_set(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential_entropy(d));
  }
}
BENCHMARK(BM_GridEntropy1D);

void BM_FockDensity(benchmark::State& state) {
  const FockState f = squeezed_vacuum_fock(0.8, 0.3, 64);
  const QuadratureSet q = rotated_quadrature(0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature_pdf(f, q));
  }
}
BENCHMARK(BM_FockDensity);

void BM_TightVectorEurAnalytic(benchmark::State& state) {
  const int n = 3;
  const GaussianState g = apply_symplectic(vacuum(n), random_symplectic(n, 5));
  const QuadratureSet y = quadratures_from_symplectic(random_symplectic(n, 6));
  const QuadratureSet z = quadratures_from_symplectic(random_symplectic(n, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tight_vector_eur(g, y, z));
  }
}
BENCHMARK(BM_TightVectorEurAnalytic);

void BM_Conjecture4Grid(benchmark::State& state) {
  const FockState f = fock_basis_state(1, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjecture4(f, 3));
  }
}
BENCHMARK(BM_Conjecture4Grid);

}  // namespace

BENCHMARK_MAIN();
