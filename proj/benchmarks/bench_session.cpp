#include <benchmark/benchmark.h>

#include "qcs/protocol.hpp"

namespace {

void BM_RunSession(benchmark::State& state) {
  qcs::SessionConfig config;
  config.scenario = "bob-forges";
  config.contract = {'d', 'e', 'a', 'l'};
  config.prime_bits = static_cast<std::size_t>(state.range(0));
  config.bob = qcs::PartyBehavior::forge();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(qcs::run_session(config));
  }
}
BENCHMARK(BM_RunSession)->Arg(32)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SerializeTranscript(benchmark::State& state) {
  qcs::SessionConfig config;
  config.scenario = "honest";
  config.contract = {'d', 'e', 'a', 'l'};
  const auto result = qcs::run_session(config);
  for (auto _ : state) benchmark::DoNotOptimize(qcs::serialize_transcript(result.transcript));
}
BENCHMARK(BM_SerializeTranscript)->Unit(benchmark::kMicrosecond);

}  // namespace
