#pragma once

// Reference computations for tests. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcs/random.hpp"

namespace qcs::testing {

// base^exp mod m by repeated multiplication.
inline std::uint64_t naive_mod_exp(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  for (std::uint64_t i = 0; i < exp; ++i) acc = (acc * (base % m)) % m;
  return acc;
}

// Smallest t in [1, m) with a*t = 1 mod m, by scanning.
inline std::optional<std::uint64_t> scan_inverse(std::uint64_t a, std::uint64_t m) {
  for (std::uint64_t t = 1; t < m; ++t) {
    if ((a % m) * t % m == 1) return t;
  }
  return std::nullopt;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Post-circuit 5-qubit amplitudes (order D, E, A, B, C) computed by pushing
// each even-parity resource term of the input through the classical CNOT
// truth tables: D ^= A, then E ^= B.
inline std::vector<std::complex<double>> cnot_truth_table_output(int k, int r) {
  std::vector<std::complex<double>> amps(32, 0.0);
  for (int abc = 0; abc < 8; ++abc) {
    const int a = (abc >> 2) & 1, b = (abc >> 1) & 1, c = abc & 1;
    if ((a ^ b ^ c) != 0) continue;
    int d = k, e = r;
    d ^= a;
    e ^= b;
    amps[static_cast<std::size_t>((d << 4) | (e << 3) | (a << 2) | (b << 1) | c)] += 0.5;
  }
  return amps;
}

// Probability mass per DEC outcome for a 5-qubit (D,E,A,B,C) amplitude
// vector, by summing |amp|^2 over A and B.
inline std::vector<double> dec_distribution(const std::vector<std::complex<double>>& amps) {
  std::vector<double> p(8, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::size_t d = (i >> 4) & 1, e = (i >> 3) & 1, c = i & 1;
    p[(d << 2) | (e << 1) | c] += std::norm(amps[i]);
  }
  return p;
}

// Three standard deviations of a binomial frequency.
inline double three_sigma(double p, std::size_t n) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Feeds a fixed list of uniforms, then fails loudly.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(std::vector<double> uniforms) : uniforms_(std::move(uniforms)) {}

  std::uint64_t next_u64() override { throw std::logic_error("ScriptedRandom has no raw words"); }
  double next_uniform() override {
    if (pos_ >= uniforms_.size()) throw std::logic_error("ScriptedRandom exhausted");
    return uniforms_[pos_++];
  }
  std::size_t consumed() const { return pos_; }

 private:
  std::vector<double> uniforms_;
  std::size_t pos_ = 0;
};

// Counts draws while delegating to a seeded stream.
class CountingRandom final : public RandomSource {
 public:
  explicit CountingRandom(std::uint64_t seed) : inner_(seed) {}

  std::uint64_t next_u64() override { return inner_.next_u64(); }
  double next_uniform() override {
    ++uniform_draws_;
    return inner_.next_uniform();
  }
  std::size_t uniform_draws() const { return uniform_draws_; }

 private:
  SeededRandom inner_;
  std::size_t uniform_draws_ = 0;
};

}  // namespace qcs::testing
