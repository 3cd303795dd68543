#include <random>

#include <benchmark/benchmark.h>

#include "ffl/characters.hpp"
#include "ffl/irreducible.hpp"

namespace {

using namespace ffl;

std::vector<std::pair<Poly, Poly>> random_pairs(const PolyRing& ring, unsigned deg_f, unsigned deg_q, int n) {
  std::mt19937_64 rng(42);
  std::vector<std::pair<Poly, Poly>> out;
  for (int i = 0; i < n; ++i)
    out.emplace_back(ring.monic_from_index(deg_f, rng() % ring.monic_count(deg_f)),
                     ring.monic_from_index(deg_q, rng() % ring.monic_count(deg_q)));
  return out;
}

void BM_JacobiEuclid(benchmark::State& state) {
  PolyRing ring(static_cast<std::uint32_t>(state.range(0)));
  const auto pairs = random_pairs(ring, 9, static_cast<unsigned>(state.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, Q] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(jacobi(f, Q, ring));
  }
}
BENCHMARK(BM_JacobiEuclid)->Args({3, 4})->Args({5, 4})->Args({5, 8})->Args({7, 8});

void BM_JacobiFactorization(benchmark::State& state) {
  PolyRing ring(static_cast<std::uint32_t>(state.range(0)));
  const unsigned deg_q = static_cast<unsigned>(state.range(1));
  IrreducibleTable table(ring, deg_q / 2);
  const auto pairs = random_pairs(ring, 9, deg_q, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, Q] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(jacobi_by_factorization(f, Q, table));
  }
}
BENCHMARK(BM_JacobiFactorization)->Args({3, 4})->Args({5, 4})->Args({5, 8});

}  // namespace
