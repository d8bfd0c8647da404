#include "qcs/netsim.hpp"

#include <type_traits>

#include "qcs/errors.hpp"

namespace qcs {

std::string_view to_string(MessageKind kind) noexcept {
  switch (kind) {
    case MessageKind::ContractProposal: return "ContractProposal";
    case MessageKind::PublicKeyAnnounce: return "PublicKeyAnnounce";
    case MessageKind::XorBitReport: return "XorBitReport";
    case MessageKind::XorBroadcast: return "XorBroadcast";
    case MessageKind::ValidationReport: return "ValidationReport";
    case MessageKind::DisputeClaim: return "DisputeClaim";
    case MessageKind::DisputeEvidenceMsg: return "DisputeEvidenceMsg";
    case MessageKind::VerdictMsg: return "VerdictMsg";
  }
  return "?";
}

std::vector<SignatureBits> ProtocolMessage::signatures() const {
  return std::visit(
      [](const auto& p) -> std::vector<SignatureBits> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, XorBroadcast>) {
          return {p.s_ab};
        } else if constexpr (std::is_same_v<T, DisputeEvidenceMsg>) {
          return {p.s_counterpart_claimed, p.s_own_claimed};
        } else {
          return {};
        }
      },
      payload);
}

void MessageBus::check_open() const {
  if (!open_) throw BusError("message bus is closed");
}

Ack MessageBus::deliver(Envelope envelope) {
  ProtocolMessage msg{next_step_++, envelope.from, envelope.to, std::move(envelope.payload)};
  queues_[static_cast<std::size_t>(msg.to)].push_back(msg);
  log_.push_back(std::move(msg));
  return Ack{log_.back().step, 1};
}

Ack MessageBus::send(Envelope envelope) {
  check_open();
  return deliver(std::move(envelope));
}

Ack MessageBus::atomic_broadcast(std::vector<Envelope> envelopes) {
  check_open();
  if (envelopes.empty()) return Ack{next_step_, 0};
  const Party sender = envelopes.front().from;
  for (const auto& env : envelopes) {
    if (env.from != sender) throw BusError("atomic broadcast with more than one sender");
  }
  Ack ack{next_step_, envelopes.size()};
  for (auto& env : envelopes) deliver(std::move(env));
  return ack;
}

std::vector<ProtocolMessage> MessageBus::drain(Party party) {
  auto& queue = queues_[static_cast<std::size_t>(party)];
  std::vector<ProtocolMessage> out(std::make_move_iterator(queue.begin()),
                                   std::make_move_iterator(queue.end()));
  queue.clear();
  return out;
}

}  // namespace qcs
