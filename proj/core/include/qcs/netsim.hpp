#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcs/party.hpp"
#include "qcs/rsa.hpp"
#include "qcs/signature.hpp"
#include "qcs/verdict.hpp"

namespace qcs {

// Payloads, one per message kind.
struct ContractProposal {
  std::string contract_hex;
  BigInt m;
};

struct PublicKeyAnnounce {
  BigInt n;
  BigInt e;
};

// One measured bit (D from Alice, E from Bob) for one XOR round.
struct XorBitReport {
  std::size_t round = 0;
  int bit = 0;
};

struct XorBroadcast {
  SignatureBits s_ab;
};

struct ValidationReport {
  bool valid = false;
  std::string detail;
};

struct DisputeClaim {
  Party accused = Party::Alice;
};

struct DisputeEvidenceMsg {
  SignatureBits s_counterpart_claimed;
  SignatureBits s_own_claimed;
  BigInt private_exponent;
};

struct VerdictMsg {
  Verdict verdict;
};

// Alternative order matches MessageKind.
using Payload = std::variant<ContractProposal, PublicKeyAnnounce, XorBitReport, XorBroadcast,
                             ValidationReport, DisputeClaim, DisputeEvidenceMsg, VerdictMsg>;

enum class MessageKind : std::uint8_t {
  ContractProposal,
  PublicKeyAnnounce,
  XorBitReport,
  XorBroadcast,
  ValidationReport,
  DisputeClaim,
  DisputeEvidenceMsg,
  VerdictMsg,
};

std::string_view to_string(MessageKind kind) noexcept;

// A message before the bus has stamped it.
struct Envelope {
  Party from;
  Party to;
  Payload payload;
};

struct ProtocolMessage {
  std::uint64_t step = 0;
  Party from = Party::Alice;
  Party to = Party::Alice;
  Payload payload;

  MessageKind kind() const noexcept { return static_cast<MessageKind>(payload.index()); }

  // Every SignatureBits carried by the payload.
  std::vector<SignatureBits> signatures() const;
};

struct Ack {
  std::uint64_t first_step = 0;
  std::size_t count = 0;
};

// Synchronous FIFO bus between the three parties. Steps are assigned by the
// bus, start at 1, and increase by one per message. Every accepted message
// goes to the recipient's queue and to the log.
class MessageBus {
 public:
  // Throws BusError once the bus is closed.
  Ack send(Envelope envelope);

  // All envelopes get consecutive steps with nothing in between. An empty
  // list is a no-op. Throws BusError on mixed senders or a closed bus.
  Ack atomic_broadcast(std::vector<Envelope> envelopes);

  // Removes and returns the party's pending messages, oldest first.
  std::vector<ProtocolMessage> drain(Party party);

  void close() noexcept { open_ = false; }
  bool is_open() const noexcept { return open_; }

  const std::vector<ProtocolMessage>& log() const noexcept { return log_; }

 private:
  void check_open() const;
  Ack deliver(Envelope envelope);

  bool open_ = true;
  std::uint64_t next_step_ = 1;
  std::array<std::deque<ProtocolMessage>, 3> queues_;
  std::vector<ProtocolMessage> log_;
};

struct SessionStats {
  std::size_t rounds = 0;
  std::size_t triples_consumed = 0;
};

struct SessionTranscript {
  std::string session_id;
  std::uint64_t seed = 0;
  std::string scenario;
  std::string contract_hex;
  PublicKey alice_key;
  PublicKey bob_key;
  std::size_t width = 0;
  std::vector<ProtocolMessage> messages;
  Verdict verdict;
  SessionStats stats;
};

// Transcript as a JSON document. Big integers are decimal strings; object
// keys are sorted, so equal transcripts give identical text.
std::string serialize_transcript(const SessionTranscript& transcript);

}  // namespace qcs
