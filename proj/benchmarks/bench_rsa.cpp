#include <benchmark/benchmark.h>

#include "qcs/rsa.hpp"

namespace {

void BM_ModExp(benchmark::State& state) {
  qcs::SeededRandom rng(3);
  const auto key = qcs::generate_keypair(static_cast<std::size_t>(state.range(0)), rng);
  const qcs::BigInt m = qcs::random_below(key.n - 1, rng) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(qcs::mod_exp(m, key.d, key.n));
}
BENCHMARK(BM_ModExp)->Arg(16)->Arg(32)->Arg(128)->Arg(512);

void BM_GenerateKeypair(benchmark::State& state) {
  qcs::SeededRandom rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::generate_keypair(static_cast<std::size_t>(state.range(0)), rng));
  }
}
BENCHMARK(BM_GenerateKeypair)->Arg(16)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_MillerRabin(benchmark::State& state) {
  qcs::SeededRandom rng(5);
  const qcs::BigInt prime("170141183460469231731687303715884105727");
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::is_probable_prime(prime, qcs::kDefaultMillerRabinRounds, rng));
  }
}
BENCHMARK(BM_MillerRabin)->Unit(benchmark::kMicrosecond);

}  // namespace
