#pragma once

#include <cstddef>

#include "qcs/nonlocal_xor.hpp"
#include "qcs/rsa.hpp"

namespace qcs {

// A signature value together with its zero-left-padded big-endian encoding
// at the session width L.
class SignatureBits {
 public:
  // Throws ProtocolError if value < 0, width == 0 or value >= 2^width.
  SignatureBits(BigInt value, std::size_t width);

  // Inverse of bits(); the width is the string length.
  static SignatureBits from_bits(const BitString& bits);

  const BigInt& value() const noexcept { return value_; }
  std::size_t width() const noexcept { return width_; }
  BitString bits() const;

  friend bool operator==(const SignatureBits&, const SignatureBits&) = default;

 private:
  BigInt value_;
  std::size_t width_;
};

// Bitwise XOR; throws ProtocolError on width mismatch.
SignatureBits operator^(const SignatureBits& lhs, const SignatureBits& rhs);

// Turns the broadcast s_AB into the counterpart's signature by flipping
// exactly the bits where the party's own signature is set.
SignatureBits recover_counterpart(const SignatureBits& s_ab, const SignatureBits& own);

}  // namespace qcs
