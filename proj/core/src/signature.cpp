#include "qcs/signature.hpp"

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcs/errors.hpp"
#include "qcs/verdict.hpp"

namespace qcs {

SignatureBits::SignatureBits(BigInt value, std::size_t width)
    : value_(std::move(value)), width_(width) {
  if (width_ == 0) throw ProtocolError("signature width must be >= 1");
  if (value_ < 0) throw ProtocolError("signature value must be non-negative");
  if (bit_length(value_) > width_) {
    throw ProtocolError("signature " + to_decimal(value_) + " does not fit in " +
                        std::to_string(width_) + " bits");
  }
}

SignatureBits SignatureBits::from_bits(const BitString& bits) {
  BigInt value = 0;
  for (auto b : bits.bits()) {
    value <<= 1;
    value |= b;
  }
  return SignatureBits(std::move(value), bits.length());
}

BitString SignatureBits::bits() const {
  std::vector<std::uint8_t> out(width_);
  for (std::size_t i = 0; i < width_; ++i) {
    const auto shift = static_cast<unsigned>(width_ - 1 - i);
    out[i] = boost::multiprecision::bit_test(value_, shift) ? 1 : 0;
  }
  return BitString(std::move(out));
}

SignatureBits operator^(const SignatureBits& lhs, const SignatureBits& rhs) {
  if (lhs.width() != rhs.width()) {
    throw ProtocolError("signature widths differ: " + std::to_string(lhs.width()) + " vs " +
                        std::to_string(rhs.width()));
  }
  return SignatureBits(lhs.value() ^ rhs.value(), lhs.width());
}

SignatureBits recover_counterpart(const SignatureBits& s_ab, const SignatureBits& own) {
  return s_ab ^ own;
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Valid: return "Valid";
    case Verdict::Kind::Cancelled: return "Cancelled";
    case Verdict::Kind::ClaimRejected: return "ClaimRejected";
  }
  return "?";
}

std::string Verdict::label() const {
  std::string out = to_string(kind);
  if (party) out += "(" + std::string(to_string(*party)) + ")";
  return out;
}

}  // namespace qcs
