#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "octoem/matrix_rep.hpp"
#include "octoem/octon.hpp"
#include "octoem/scenarios.hpp"

using namespace octoem;

namespace {

std::vector<Octon> make_octons(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Octon> v(n);
  for (Octon& o : v) o = random_octon(rng);
  return v;
}

void FullProduct(benchmark::State& state) {
  const auto a = make_octons(256, 1);
  const auto b = make_octons(256, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(a[i & 255], b[i & 255]));
    ++i;
  }
}
BENCHMARK(FullProduct);

void UnitProductLeft(benchmark::State& state) {
  const auto a = make_octons(256, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unit_multiply(Basis::PolarY, a[i & 255]));
    ++i;
  }
}
BENCHMARK(UnitProductLeft);

void MatrixPairRoundTrip(benchmark::State& state) {
  const auto a = make_octons(256, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_matrix_pair(to_matrix_pair(a[i & 255])));
    ++i;
  }
}
BENCHMARK(MatrixPairRoundTrip);

void OracleProduct(benchmark::State& state) {
  const auto a = make_octons(256, 5);
  const auto b = make_octons(256, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pair_mul(to_matrix_pair(a[i & 255]), to_matrix_pair(b[i & 255])));
    ++i;
  }
}
BENCHMARK(OracleProduct);

}  // namespace
