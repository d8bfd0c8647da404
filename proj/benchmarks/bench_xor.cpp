#include <benchmark/benchmark.h>

#include "qcs/nonlocal_xor.hpp"
#include "qcs/qsim.hpp"

namespace {

void BM_PrepareResource(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcs::prepare_xor_resource());
}
BENCHMARK(BM_PrepareResource);

void BM_HadamardLayer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qcs::StateVector s(n);
  for (auto _ : state) {
    for (std::size_t q = 0; q < n; ++q) qcs::apply_gate_in_place(s, qcs::Gate::h(q));
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_HadamardLayer)->DenseRange(2, 8, 2);

void BM_XorRound(benchmark::State& state) {
  qcs::SeededRandom rng(1);
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::run_xor_round(k, 1, rng));
    k ^= 1;
  }
}
BENCHMARK(BM_XorRound);

void BM_XorBitstrings(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint8_t> a(len), b(len);
  for (std::size_t i = 0; i < len; ++i) {
    a[i] = i & 1;
    b[i] = (i >> 1) & 1;
  }
  const qcs::BitString ka(a), rb(b);
  qcs::SeededRandom rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(qcs::xor_bitstrings(ka, rb, rng));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_XorBitstrings)->Arg(64)->Arg(512)->Arg(2048);

}  // namespace
