#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/qsim.hpp"
#include "qcs/random.hpp"

namespace qcs {

// Five-qubit register used by one XOR round: D and E carry Alice's bit K
// and Bob's bit R; A, B, C hold the shared resource.
namespace reg {
inline constexpr QubitId D{0};
inline constexpr QubitId E{1};
inline constexpr QubitId A{2};
inline constexpr QubitId B{3};
inline constexpr QubitId C{4};
inline constexpr std::size_t kWidth = 5;
}  // namespace reg

// One run of the gadget. d, e and c are what Alice, Bob and Charlie
// measured; xor = d ^ e ^ c, which always equals k ^ r.
struct XorRound {
  int k = 0;
  int r = 0;
  int d = 0;
  int e = 0;
  int c = 0;
  int xor_bit = 0;

  // Outcome packed as the 3-bit string DEC, D most significant.
  int dec() const noexcept { return (d << 2) | (e << 1) | c; }
};

// Non-empty ordered sequence of bits.
class BitString {
 public:
  // Throws ProtocolError on empty input or on a value other than 0/1.
  explicit BitString(std::vector<std::uint8_t> bits);

  // Parses "0110010". Throws ProtocolError on other characters.
  static BitString parse(std::string_view text);

  std::size_t length() const noexcept { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_.at(i); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// |k r>_DE (x) resource_ABC, built with X gates on D/E and the resource
// gate sequence on A, B, C.
StateVector build_round_state(int k, int r);

// CNOT(A -> D) then CNOT(B -> E).
StateVector evolve_round(const StateVector& state);

// Post-circuit state written term by term: amplitude 1/2 on
// |k^a, r^b>_DE |a b>_AB |c>_C for abc in {000, 011, 110, 101}.
//
// The printed form of this state overbars the DE ket identically in the
// last three terms; the assignment here (K R-bar for AB=01, K-bar R-bar for
// AB=11, K-bar R for AB=10) is what the two CNOTs actually produce.
StateVector closed_form_output(int k, int r);

// The four DEC outcomes reachable for inputs (k, r), ascending.
std::vector<int> outcome_support(int k, int r);

// Build, evolve, then measure D (Alice), E (Bob), C (Charlie) in that order,
// one uniform draw each.
XorRound run_xor_round(int k, int r, RandomSource& rng);

// One independent round per bit position, each on a fresh resource triple.
// Throws ProtocolError on length mismatch.
std::vector<XorRound> run_xor_rounds(const BitString& ka, const BitString& rb,
                                     RandomSource& rng);

// Per-position xor bits of run_xor_rounds.
BitString xor_bitstrings(const BitString& ka, const BitString& rb, RandomSource& rng);

}  // namespace qcs
