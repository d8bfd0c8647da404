#pragma once

#include <cstdint>
#include <random>

namespace qcs {

// Source of randomness consumed by measurements and key generation.
// Measurements draw one uniform per measured qubit; key generation draws
// raw 64-bit words.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  // Uniform in [0, 1) from the top 53 bits of next_u64(). Computed by hand
  // instead of std::uniform_real_distribution so the value sequence is the
  // same on every standard library.
  virtual double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
};

// mt19937_64 behind the RandomSource interface. Same seed, same stream.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcs
