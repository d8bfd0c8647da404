#include "qcs/nonlocal_xor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcs/errors.hpp"

namespace qcs {
namespace {

constexpr double kTol = kAmplitudeTolerance;

std::size_t idx(const char* dec_abc) {
  // "00000" style DEABC string to basis index.
  std::size_t out = 0;
  for (const char* p = dec_abc; *p; ++p) out = (out << 1) | static_cast<std::size_t>(*p - '0');
  return out;
}

void expect_support(const StateVector& s, const std::vector<const char*>& basis) {
  std::vector<std::size_t> want;
  for (auto b : basis) want.push_back(idx(b));
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const bool in = std::find(want.begin(), want.end(), i) != want.end();
    EXPECT_NEAR(std::abs(s[i] - Amplitude(in ? 0.5 : 0.0)), 0.0, kTol) << "basis " << i;
  }
}

TEST(BuildRoundState, InputKetTimesResource) {
  expect_support(build_round_state(0, 0), {"00000", "00011", "00110", "00101"});
  expect_support(build_round_state(1, 1), {"11000", "11011", "11110", "11101"});
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) EXPECT_NEAR(build_round_state(k, r).norm(), 1.0, kTol);
  }
  EXPECT_THROW(build_round_state(2, 0), ProtocolError);
}

TEST(EvolveRound, MatchesCnotTruthTable) {
  expect_support(evolve_round(build_round_state(0, 0)), {"00000", "01011", "11110", "10101"});
  expect_support(evolve_round(build_round_state(1, 0)), {"10000", "11011", "01110", "00101"});
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) {
      const auto evolved = evolve_round(build_round_state(k, r));
      const auto oracle = testing::cnot_truth_table_output(k, r);
      int nonzero = 0;
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        EXPECT_NEAR(std::abs(evolved[i] - oracle[i]), 0.0, kTol);
        if (std::abs(evolved[i]) > kTol) ++nonzero;
      }
      EXPECT_EQ(nonzero, 4);
    }
  }
}

TEST(ClosedFormOutput, EqualsCircuitAndOracle) {
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) {
      const auto closed = closed_form_output(k, r);
      EXPECT_LT(max_deviation(closed, evolve_round(build_round_state(k, r))), kTol);
      EXPECT_LT(max_deviation(closed, StateVector::from_amplitudes(testing::cnot_truth_table_output(k, r))),
                kTol);
    }
  }
}

TEST(ClosedFormOutput, SupportSetsByInputEquality) {
  const std::vector<int> equal{0b000, 0b011, 0b101, 0b110};
  const std::vector<int> differ{0b001, 0b010, 0b100, 0b111};
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) {
      const auto dist = testing::dec_distribution(get_amplitudes(closed_form_output(k, r)));
      std::vector<int> support;
      for (int dec = 0; dec < 8; ++dec) {
        if (dist[static_cast<std::size_t>(dec)] > kTol) {
          support.push_back(dec);
          EXPECT_NEAR(dist[static_cast<std::size_t>(dec)], 0.25, kTol);
        }
      }
      EXPECT_EQ(support, k == r ? equal : differ);
      EXPECT_EQ(outcome_support(k, r), support);
    }
  }
}

TEST(RunXorRound, ParityHoldsForEveryDraw) {
  SeededRandom rng(5);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_EQ(run_xor_round(0, 0, rng).xor_bit, 0);
    EXPECT_EQ(run_xor_round(1, 0, rng).xor_bit, 1);
  }
}

TEST(RunXorRound, ScriptedDrawsEnumerateTheSupport) {
  // For (0,0), P(d=1) = 1/2, then P(e=1 | d) = 1/2, then c is fixed by
  // parity. Draws 0.25 / 0.75 pick each branch; every one of the four
  // outcomes is reached exactly once, so each has probability 1/4.
  std::map<int, int> seen;
  for (double ud : {0.25, 0.75}) {
    for (double ue : {0.25, 0.75}) {
      testing::ScriptedRandom rng({ud, ue, 0.5});
      const auto round = run_xor_round(0, 0, rng);
      EXPECT_EQ(rng.consumed(), 3u);
      EXPECT_EQ(round.d, ud < 0.5 ? 1 : 0);
      EXPECT_EQ(round.e, ue < 0.5 ? 1 : 0);
      ++seen[round.dec()];
    }
  }
  EXPECT_EQ(seen, (std::map<int, int>{{0b000, 1}, {0b011, 1}, {0b101, 1}, {0b110, 1}}));
}

TEST(BitString, ParseAndValidate) {
  EXPECT_EQ(BitString::parse("0110010").to_string(), "0110010");
  EXPECT_THROW(BitString::parse(""), ProtocolError);
  EXPECT_THROW(BitString::parse("012"), ProtocolError);
  EXPECT_THROW(BitString(std::vector<std::uint8_t>{0, 2}), ProtocolError);
}

TEST(XorBitstrings, WorkedSignatures) {
  SeededRandom rng(17);
  EXPECT_EQ(xor_bitstrings(BitString::parse("0000010"), BitString::parse("0110010"), rng),
            BitString::parse("0110000"));
  EXPECT_EQ(xor_bitstrings(BitString::parse("1"), BitString::parse("0"), rng), BitString::parse("1"));
}

TEST(XorBitstrings, SelfXorIsZero) {
  SeededRandom rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> bits(1 + rng.next_u64() % 40);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1);
    const BitString b(bits);
    const auto out = xor_bitstrings(b, b, rng);
    EXPECT_EQ(out, BitString(std::vector<std::uint8_t>(bits.size(), 0)));
  }
}

TEST(XorBitstrings, LengthMismatch) {
  SeededRandom rng(1);
  EXPECT_THROW(xor_bitstrings(BitString::parse("01"), BitString::parse("011"), rng), ProtocolError);
}

TEST(XorBitstrings, OneTriplePerBit) {
  testing::CountingRandom rng(8);
  const auto rounds = run_xor_rounds(BitString::parse("1011001110"), BitString::parse("0011100101"), rng);
  EXPECT_EQ(rounds.size(), 10u);
  EXPECT_EQ(rng.uniform_draws(), 30u);  // three measurements per triple
}

TEST(XorStatistics, MarginalsAreBalanced) {
  constexpr std::size_t kN = 10000;
  SeededRandom rng(2024);
  for (int k = 0; k < 2; ++k) {
    for (int r = 0; r < 2; ++r) {
      std::array<std::size_t, 3> ones{};
      std::array<std::size_t, 8> outcomes{};
      for (std::size_t i = 0; i < kN; ++i) {
        const auto round = run_xor_round(k, r, rng);
        ones[0] += static_cast<std::size_t>(round.d);
        ones[1] += static_cast<std::size_t>(round.e);
        ones[2] += static_cast<std::size_t>(round.c);
        ++outcomes[static_cast<std::size_t>(round.dec())];
      }
      for (auto count : ones) {
        EXPECT_NEAR(static_cast<double>(count) / kN, 0.5, 3 * 0.5 / std::sqrt(double(kN)));
      }
      for (int dec : outcome_support(k, r)) {
        EXPECT_NEAR(static_cast<double>(outcomes[static_cast<std::size_t>(dec)]) / kN, 0.25,
                    testing::three_sigma(0.25, kN));
      }
    }
  }
}

}  // namespace
}  // namespace qcs
