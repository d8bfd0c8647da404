#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcs/netsim.hpp"
#include "qcs/nonlocal_xor.hpp"
#include "qcs/party.hpp"
#include "qcs/random.hpp"
#include "qcs/rsa.hpp"
#include "qcs/signature.hpp"
#include "qcs/verdict.hpp"

namespace qcs {

// How a signer acts during a session.
//   Honest          signs m and reports the validation result truthfully.
//   ForgeSignature  feeds a value other than its real signature into the
//                   XOR exchange. Without an explicit value the forgery is
//                   (s - 1) mod n, which always differs from s and stays
//                   below n.
//   FalseClaim      signs honestly but reports the counterpart's signature
//                   as invalid.
struct PartyBehavior {
  enum class Kind { Honest, ForgeSignature, FalseClaim };

  Kind kind = Kind::Honest;
  std::optional<BigInt> forged_value;

  static PartyBehavior honest() { return {}; }
  static PartyBehavior forge(std::optional<BigInt> value = std::nullopt) {
    return {Kind::ForgeSignature, std::move(value)};
  }
  static PartyBehavior false_claim() { return {Kind::FalseClaim, std::nullopt}; }
};

// Primes (and optionally d) pinned instead of generated.
struct ForcedKey {
  BigInt p;
  BigInt q;
  std::optional<BigInt> d;
};

struct SessionConfig {
  std::string scenario = "custom";
  std::vector<std::uint8_t> contract;
  std::size_t prime_bits = 32;
  PartyBehavior alice;
  PartyBehavior bob;
  std::uint64_t seed = 0;
  std::optional<ForcedKey> alice_key;
  std::optional<ForcedKey> bob_key;
};

// Named scenarios: honest, bob-forges, alice-forges, alice-false-claim,
// bob-false-claim. Returns nullopt for an unknown name.
std::optional<std::pair<PartyBehavior, PartyBehavior>> scenario_behaviors(std::string_view name);
const std::vector<std::string>& scenario_names();

// What one signer has learned from the bus.
struct SignerView {
  std::optional<BigInt> m;
  std::optional<PublicKey> counterpart_key;
  std::optional<SignatureBits> s_ab;
};

// What Charlie has learned from the bus before any dispute.
struct ArbiterView {
  std::optional<PublicKey> alice_key;
  std::optional<PublicKey> bob_key;
  std::vector<XorRound> rounds;  // d, e from reports; c from his own qubit
  std::optional<SignatureBits> s_ab;
};

struct SessionState {
  explicit SessionState(SessionConfig cfg) : config(std::move(cfg)), rng(config.seed) {}

  SessionConfig config;
  SeededRandom rng;
  RsaKeyPair alice_key;
  RsaKeyPair bob_key;
  Contract contract;
  std::size_t width = 0;
  MessageBus bus;

  SignerView alice_view;
  SignerView bob_view;
  ArbiterView charlie_view;

  // Values each signer actually fed into the exchange (honest or forged).
  std::optional<SignatureBits> alice_sent;
  std::optional<SignatureBits> bob_sent;
  std::size_t triples_consumed = 0;

  const RsaKeyPair& key_of(Party p) const;
  const PartyBehavior& behavior_of(Party p) const;
  SignerView& view_of(Party p);
  const std::optional<SignatureBits>& sent_by(Party p) const;
};

// Keys are generated (or taken from the forced keys), m is encoded below
// min(n_A, n_B), the width is max(bitlen(n_A), bitlen(n_B)), and Charlie's
// contract proposal plus both public-key announcements go over the bus.
// Keygen draws from the session's seeded stream: Alice first, then Bob.
SessionState initialize_session(const SessionConfig& config);

// Runs the per-bit XOR exchange over the width-L encodings of the values
// each signer chooses to send, then Charlie broadcasts s_AB to both signers
// in one atomic bus step. Returns Charlie's s_AB.
SignatureBits exchange_signatures(SessionState& session);

// True iff s < pub.n and s^e mod n == m. A value >= n is a failed
// validation, not an error.
bool validate_signature(const SignatureBits& s, const PublicKey& pub, const BigInt& m);

struct DisputeEvidence {
  Party claimant = Party::Alice;
  SignatureBits s_counterpart_claimed;
  SignatureBits s_own_claimed;
  BigInt private_exponent;
  SignatureBits s_ab;  // Charlie's own record
};

// Charlie's four checks on a claim against the claimant's counterpart:
//   I   m == verify(s_counterpart_claimed, pub_counterpart)
//   II  s_counterpart_claimed ^ s_own_claimed == s_ab
//   III s_own_claimed == m^private_exponent mod pub_claimant.n
//   IV  m == verify(s_own_claimed, pub_claimant)
// Cancelled(counterpart) iff I fails and II-IV hold; otherwise
// ClaimRejected(claimant). Out-of-range inputs fail the affected check.
Verdict arbitrate(const DisputeEvidence& evidence, const BigInt& m,
                  const PublicKey& pub_counterpart, const PublicKey& pub_claimant);

struct SessionResult {
  SessionTranscript transcript;
  Verdict verdict;
  // Honest signatures and the values actually fed into the exchange.
  SignatureBits alice_signature;
  SignatureBits bob_signature;
  SignatureBits alice_sent;
  SignatureBits bob_sent;
};

// Initialization, exchange, validation and, if a signer reports a bad
// signature, arbitration of the first claim (Alice reports before Bob).
// Charlie closes the session by broadcasting the verdict.
SessionResult run_session(const SessionConfig& config);

std::string contract_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace qcs
