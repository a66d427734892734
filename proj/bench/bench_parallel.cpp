// Compares the OpenMP row-update kernels against the serial reference
// implementations: modular / rational rank on random dense matrices, and a
// full strong-Lefschetz sweep.

#include <benchmark/benchmark.h>

#include <random>

#include "lefschetz/engine.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/matrix.hpp"

using namespace lefschetz;

namespace {

ExactMatrix random_matrix(std::size_t n, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExactMatrix m(n, n, field);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m.set_integer(r, c, static_cast<long>(rng() % 19) - 9);
    }
  }
  return m;
}

void BM_RankModP(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               FieldSpec::prime_field(32003), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankModPSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               FieldSpec::prime_field(32003), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m));
}

void BM_RankRational(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               FieldSpec::rationals(), 43);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankRationalSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               FieldSpec::rationals(), 43);
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m));
}

void BM_SlpSweep(benchmark::State& state) {
  const MonomialIdeal ideal = power_family(4, 4);
  CheckOptions options;
  options.threads = static_cast<int>(state.range(0));  // 0 = all cores, 1 = serial
  options.want_witness = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_slp(ideal, FieldSpec::prime_field(32003), options));
  }
}

}  // namespace

BENCHMARK(BM_RankModP)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_RankModPSerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_RankRational)->Arg(24)->Arg(48)->Arg(96);
BENCHMARK(BM_RankRationalSerial)->Arg(24)->Arg(48)->Arg(96);
BENCHMARK(BM_SlpSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
