#include "qcs/protocol.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <type_traits>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

template <typename T>
const T* payload_as(const ProtocolMessage& msg) {
  return std::get_if<T>(&msg.payload);
}

RsaKeyPair make_key(const std::optional<ForcedKey>& forced, std::size_t prime_bits,
                    RandomSource& rng) {
  if (forced) return keypair_from_primes(forced->p, forced->q, forced->d);
  return generate_keypair(prime_bits, rng);
}

// Signer-side processing of everything pending on the bus.
void absorb(MessageBus& bus, Party self, SignerView& view) {
  for (const auto& msg : bus.drain(self)) {
    if (const auto* p = payload_as<ContractProposal>(msg)) {
      view.m = p->m;
    } else if (const auto* p = payload_as<PublicKeyAnnounce>(msg)) {
      view.counterpart_key = PublicKey{p->n, p->e};
    } else if (const auto* p = payload_as<XorBroadcast>(msg)) {
      view.s_ab = p->s_ab;
    }
  }
}

std::string session_id(const SessionConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config.seed));
  return config.scenario + "-" + buf;
}

SignatureBits value_to_send(const SessionState& s, Party who, const BigInt& honest) {
  const PartyBehavior& behavior = s.behavior_of(who);
  if (behavior.kind != PartyBehavior::Kind::ForgeSignature) {
    return SignatureBits(honest, s.width);
  }
  const BigInt& n = s.key_of(who).n;
  BigInt forged = behavior.forged_value ? *behavior.forged_value : (honest + n - 1) % n;
  if (forged == honest) {
    throw ProtocolError(std::string(to_string(who)) + "'s forged value equals the real signature");
  }
  return SignatureBits(std::move(forged), s.width);
}

}  // namespace

std::optional<std::pair<PartyBehavior, PartyBehavior>> scenario_behaviors(std::string_view name) {
  using B = PartyBehavior;
  if (name == "honest") return std::pair{B::honest(), B::honest()};
  if (name == "bob-forges") return std::pair{B::honest(), B::forge()};
  if (name == "alice-forges") return std::pair{B::forge(), B::honest()};
  if (name == "alice-false-claim") return std::pair{B::false_claim(), B::honest()};
  if (name == "bob-false-claim") return std::pair{B::honest(), B::false_claim()};
  return std::nullopt;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"honest", "bob-forges", "alice-forges",
                                              "alice-false-claim", "bob-false-claim"};
  return names;
}

const RsaKeyPair& SessionState::key_of(Party p) const {
  if (p == Party::Charlie) throw ProtocolError("Charlie holds no signing key");
  return p == Party::Alice ? alice_key : bob_key;
}

const PartyBehavior& SessionState::behavior_of(Party p) const {
  if (p == Party::Charlie) throw ProtocolError("Charlie has no signer behavior");
  return p == Party::Alice ? config.alice : config.bob;
}

SignerView& SessionState::view_of(Party p) {
  if (p == Party::Charlie) throw ProtocolError("Charlie has an arbiter view, not a signer view");
  return p == Party::Alice ? alice_view : bob_view;
}

const std::optional<SignatureBits>& SessionState::sent_by(Party p) const {
  if (p == Party::Charlie) throw ProtocolError("Charlie sends no signature");
  return p == Party::Alice ? alice_sent : bob_sent;
}

std::string contract_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

SessionState initialize_session(const SessionConfig& config) {
  if (config.prime_bits < 4) throw ArgumentError("prime_bits must be >= 4");

  SessionState s(config);
  s.alice_key = make_key(config.alice_key, config.prime_bits, s.rng);
  s.bob_key = make_key(config.bob_key, config.prime_bits, s.rng);
  s.contract = encode_contract(config.contract, std::min(s.alice_key.n, s.bob_key.n));
  s.width = std::max(bit_length(s.alice_key.n), bit_length(s.bob_key.n));

  const ContractProposal proposal{contract_hex(s.contract.text), s.contract.m};
  s.bus.atomic_broadcast({{Party::Charlie, Party::Alice, proposal},
                          {Party::Charlie, Party::Bob, proposal}});

  for (Party signer : {Party::Alice, Party::Bob}) {
    const PublicKey pub = s.key_of(signer).public_key();
    const PublicKeyAnnounce announce{pub.n, pub.e};
    s.bus.send({signer, counterpart(signer), announce});
    s.bus.send({signer, Party::Charlie, announce});
  }

  absorb(s.bus, Party::Alice, s.alice_view);
  absorb(s.bus, Party::Bob, s.bob_view);
  for (const auto& msg : s.bus.drain(Party::Charlie)) {
    if (const auto* p = payload_as<PublicKeyAnnounce>(msg)) {
      (msg.from == Party::Alice ? s.charlie_view.alice_key : s.charlie_view.bob_key) =
          PublicKey{p->n, p->e};
    }
  }
  return s;
}

SignatureBits exchange_signatures(SessionState& s) {
  if (!s.alice_view.m || !s.bob_view.m) throw ProtocolError("session is not initialized");

  s.alice_sent = value_to_send(s, Party::Alice, sign(*s.alice_view.m, s.alice_key));
  s.bob_sent = value_to_send(s, Party::Bob, sign(*s.bob_view.m, s.bob_key));

  const auto rounds = run_xor_rounds(s.alice_sent->bits(), s.bob_sent->bits(), s.rng);
  s.triples_consumed += rounds.size();
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    s.bus.send({Party::Alice, Party::Charlie, XorBitReport{i, rounds[i].d}});
    s.bus.send({Party::Bob, Party::Charlie, XorBitReport{i, rounds[i].e}});
  }

  // Charlie pairs the reported D and E bits with his own C measurement.
  std::map<std::size_t, std::pair<int, int>> reported;
  for (const auto& msg : s.bus.drain(Party::Charlie)) {
    if (const auto* p = payload_as<XorBitReport>(msg)) {
      (msg.from == Party::Alice ? reported[p->round].first : reported[p->round].second) = p->bit;
    }
  }
  if (reported.size() != rounds.size()) throw ProtocolError("missing XOR bit reports");

  std::vector<std::uint8_t> xor_bits;
  xor_bits.reserve(rounds.size());
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    XorRound seen = rounds[i];
    seen.k = seen.r = 0;  // Charlie never learns the inputs
    seen.d = reported[i].first;
    seen.e = reported[i].second;
    seen.xor_bit = seen.d ^ seen.e ^ seen.c;
    xor_bits.push_back(static_cast<std::uint8_t>(seen.xor_bit));
    s.charlie_view.rounds.push_back(seen);
  }
  const SignatureBits s_ab = SignatureBits::from_bits(BitString(std::move(xor_bits)));
  s.charlie_view.s_ab = s_ab;

  s.bus.atomic_broadcast({{Party::Charlie, Party::Alice, XorBroadcast{s_ab}},
                          {Party::Charlie, Party::Bob, XorBroadcast{s_ab}}});
  absorb(s.bus, Party::Alice, s.alice_view);
  absorb(s.bus, Party::Bob, s.bob_view);
  return s_ab;
}

bool validate_signature(const SignatureBits& s, const PublicKey& pub, const BigInt& m) {
  if (s.value() >= pub.n) return false;
  return verify(s.value(), pub) == m;
}

Verdict arbitrate(const DisputeEvidence& ev, const BigInt& m, const PublicKey& pub_counterpart,
                  const PublicKey& pub_claimant) {
  ArbitrationChecks checks;
  checks.counterpart_signature_valid = validate_signature(ev.s_counterpart_claimed, pub_counterpart, m);
  checks.xor_consistent = ev.s_counterpart_claimed.width() == ev.s_own_claimed.width() &&
                          ev.s_own_claimed.width() == ev.s_ab.width() &&
                          (ev.s_counterpart_claimed ^ ev.s_own_claimed) == ev.s_ab;
  checks.own_signature_reproduced =
      ev.private_exponent >= 0 &&
      ev.s_own_claimed.value() == mod_exp(m, ev.private_exponent, pub_claimant.n);
  checks.own_signature_valid = validate_signature(ev.s_own_claimed, pub_claimant, m);

  if (checks.convicts()) return Verdict::cancelled(counterpart(ev.claimant), checks);
  return Verdict::claim_rejected(ev.claimant, checks);
}

SessionResult run_session(const SessionConfig& config) {
  SessionState s = initialize_session(config);
  exchange_signatures(s);

  // Validation: each signer recovers and checks the counterpart signature.
  std::optional<Party> claimant;
  std::map<Party, SignatureBits> recovered;
  for (Party signer : {Party::Alice, Party::Bob}) {
    const SignerView& view = s.view_of(signer);
    const SignatureBits other = recover_counterpart(*view.s_ab, *s.sent_by(signer));
    recovered.emplace(signer, other);

    ValidationReport report;
    if (other.value() >= view.counterpart_key->n) {
      report = {false, "out-of-range"};
    } else {
      report = validate_signature(other, *view.counterpart_key, *view.m)
                   ? ValidationReport{true, "verified"}
                   : ValidationReport{false, "mismatch"};
    }
    if (s.behavior_of(signer).kind == PartyBehavior::Kind::FalseClaim) {
      report = {false, "mismatch"};
    }
    s.bus.send({signer, Party::Charlie, report});
    if (!report.valid && !claimant) claimant = signer;
  }

  Verdict verdict = Verdict::valid();
  if (claimant) {
    const Party accused = counterpart(*claimant);
    s.bus.send({*claimant, Party::Charlie, DisputeClaim{accused}});
    s.bus.send({*claimant, Party::Charlie,
                DisputeEvidenceMsg{recovered.at(*claimant), *s.sent_by(*claimant),
                                   s.key_of(*claimant).d}});

    std::optional<DisputeEvidence> evidence;
    for (const auto& msg : s.bus.drain(Party::Charlie)) {
      if (const auto* p = payload_as<DisputeEvidenceMsg>(msg); p && msg.from == *claimant) {
        evidence = DisputeEvidence{*claimant, p->s_counterpart_claimed, p->s_own_claimed,
                                   p->private_exponent, *s.charlie_view.s_ab};
      }
    }
    const auto& keys = s.charlie_view;
    const PublicKey& pub_claimant = *claimant == Party::Alice ? *keys.alice_key : *keys.bob_key;
    const PublicKey& pub_accused = *claimant == Party::Alice ? *keys.bob_key : *keys.alice_key;
    verdict = arbitrate(*evidence, s.contract.m, pub_accused, pub_claimant);
  }

  s.bus.atomic_broadcast({{Party::Charlie, Party::Alice, VerdictMsg{verdict}},
                          {Party::Charlie, Party::Bob, VerdictMsg{verdict}}});
  absorb(s.bus, Party::Alice, s.alice_view);
  absorb(s.bus, Party::Bob, s.bob_view);
  s.bus.close();

  SessionTranscript transcript{
      session_id(config),
      config.seed,
      config.scenario,
      contract_hex(s.contract.text),
      s.alice_key.public_key(),
      s.bob_key.public_key(),
      s.width,
      s.bus.log(),
      verdict,
      SessionStats{s.charlie_view.rounds.size(), s.triples_consumed},
  };
  return SessionResult{std::move(transcript),
                       verdict,
                       SignatureBits(sign(s.contract.m, s.alice_key), s.width),
                       SignatureBits(sign(s.contract.m, s.bob_key), s.width),
                       *s.alice_sent,
                       *s.bob_sent};
}

}  // namespace qcs
