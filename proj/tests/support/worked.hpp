#pragma once

#include <string>
#include <vector>

#include "qcs/protocol.hpp"

namespace qcs::testing {

// Alice {p=5, q=11, d=7} -> n=55, e=23; Bob {p=7, q=11, d=13} -> n=77, e=37;
// contract byte 0x08 -> m=8, width 7, s_A=2, s_B=50.
inline SessionConfig worked_config(const std::string& scenario, std::uint64_t seed = 42) {
  SessionConfig config;
  config.scenario = scenario;
  config.contract = {0x08};
  config.seed = seed;
  const auto behaviors = scenario_behaviors(scenario);
  if (behaviors) {
    config.alice = behaviors->first;
    config.bob = behaviors->second;
  }
  config.alice_key = ForcedKey{5, 11, BigInt(7)};
  config.bob_key = ForcedKey{7, 11, BigInt(13)};
  return config;
}

inline SessionConfig generated_config(const std::string& scenario, std::uint64_t seed,
                                      std::size_t prime_bits = 32) {
  SessionConfig config;
  config.scenario = scenario;
  config.contract = {'d', 'e', 'a', 'l'};
  config.seed = seed;
  config.prime_bits = prime_bits;
  const auto behaviors = scenario_behaviors(scenario);
  if (behaviors) {
    config.alice = behaviors->first;
    config.bob = behaviors->second;
  }
  return config;
}

// Synthetic evidence for Alice claiming against Bob under the worked keys
// that drives each of Charlie's four checks independently:
//   I   S_BA = 50 passes, 49 fails
//   III/IV  (S_AA, d) = (2, 7) both pass; (2, 3) fails III only
//           (8^3 mod 55 = 17); (17, 3) fails IV only; (17, 7) fails both
//   II  s_ab = S_BA ^ S_AA passes, flipping the low bit fails
inline DisputeEvidence synthetic_evidence(bool i, bool ii, bool iii, bool iv) {
  const BigInt s_ba = i ? 50 : 49;
  BigInt s_aa;
  BigInt d;
  if (iii && iv) {
    s_aa = 2, d = 7;
  } else if (!iii && iv) {
    s_aa = 2, d = 3;
  } else if (iii && !iv) {
    s_aa = 17, d = 3;
  } else {
    s_aa = 17, d = 7;
  }
  BigInt s_ab = s_ba ^ s_aa;
  if (!ii) s_ab ^= 1;
  return DisputeEvidence{Party::Alice, SignatureBits(s_ba, 7), SignatureBits(s_aa, 7), d,
                         SignatureBits(s_ab, 7)};
}

// Messages from `log` that `reader` can see before the first message of
// kind `until` (exclusive). A party reads only messages addressed to it.
inline bool signature_seen_before(const std::vector<ProtocolMessage>& log, Party reader,
                                  const BigInt& secret, MessageKind until) {
  for (const auto& msg : log) {
    if (msg.kind() == until) return false;
    if (msg.to != reader) continue;
    for (const auto& s : msg.signatures()) {
      if (s.value() == secret) return true;
    }
  }
  return false;
}

}  // namespace qcs::testing
