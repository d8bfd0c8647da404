#pragma once

#include <optional>
#include <string>

#include "qcs/party.hpp"

namespace qcs {

// Outcomes of Charlie's four dispute checks.
struct ArbitrationChecks {
  bool counterpart_signature_valid = false;  // I:  m == s_counterpart^e mod n
  bool xor_consistent = false;               // II: s_counterpart ^ s_own == s_ab
  bool own_signature_reproduced = false;     // III: s_own == m^d mod n (disclosed d)
  bool own_signature_valid = false;          // IV: m == s_own^e mod n

  // The only pattern that convicts the accused party.
  bool convicts() const noexcept {
    return !counterpart_signature_valid && xor_consistent && own_signature_reproduced &&
           own_signature_valid;
  }

  friend bool operator==(const ArbitrationChecks&, const ArbitrationChecks&) = default;
};

struct Verdict {
  enum class Kind { Valid, Cancelled, ClaimRejected };

  Kind kind = Kind::Valid;
  // Cancelled: the cheater. ClaimRejected: the claimant. Unset for Valid.
  std::optional<Party> party;
  // Present iff arbitration ran.
  std::optional<ArbitrationChecks> checks;

  static Verdict valid() { return {}; }
  static Verdict cancelled(Party cheater, ArbitrationChecks c) { return {Kind::Cancelled, cheater, c}; }
  static Verdict claim_rejected(Party claimant, ArbitrationChecks c) {
    return {Kind::ClaimRejected, claimant, c};
  }

  // A rejected claim leaves the contract standing.
  bool contract_valid() const noexcept { return kind != Kind::Cancelled; }

  // "Valid", "Cancelled(Bob)", "ClaimRejected(Alice)".
  std::string label() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(Verdict::Kind kind);

}  // namespace qcs
