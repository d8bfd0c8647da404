#pragma once

#include <cstdint>
#include <string_view>

namespace qcs {

enum class Party : std::uint8_t { Alice, Bob, Charlie };

constexpr std::string_view to_string(Party p) noexcept {
  switch (p) {
    case Party::Alice: return "Alice";
    case Party::Bob: return "Bob";
    case Party::Charlie: return "Charlie";
  }
  return "?";
}

// Alice <-> Bob. Charlie has no counterpart and maps to himself.
constexpr Party counterpart(Party p) noexcept {
  switch (p) {
    case Party::Alice: return Party::Bob;
    case Party::Bob: return Party::Alice;
    case Party::Charlie: return Party::Charlie;
  }
  return p;
}

}  // namespace qcs
