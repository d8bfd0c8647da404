#include <nlohmann/json.hpp>

#include "qcs/netsim.hpp"

namespace qcs {

namespace {

using nlohmann::json;

json signature_json(const SignatureBits& s) {
  return json{{"value", to_decimal(s.value())}, {"bits", s.bits().to_string()}};
}

json checks_json(const ArbitrationChecks& c) {
  return json{{"I", c.counterpart_signature_valid},
              {"II", c.xor_consistent},
              {"III", c.own_signature_reproduced},
              {"IV", c.own_signature_valid}};
}

json verdict_json(const Verdict& v) {
  json out{{"kind", to_string(v.kind)}};
  if (v.party) out["party"] = std::string(to_string(*v.party));
  if (v.checks) out["checks"] = checks_json(*v.checks);
  return out;
}

struct PayloadToJson {
  json operator()(const ContractProposal& p) const {
    return {{"contract_hex", p.contract_hex}, {"m", to_decimal(p.m)}};
  }
  json operator()(const PublicKeyAnnounce& p) const {
    return {{"n", to_decimal(p.n)}, {"e", to_decimal(p.e)}};
  }
  json operator()(const XorBitReport& p) const { return {{"round", p.round}, {"bit", p.bit}}; }
  json operator()(const XorBroadcast& p) const { return {{"s_ab", signature_json(p.s_ab)}}; }
  json operator()(const ValidationReport& p) const {
    return {{"valid", p.valid}, {"detail", p.detail}};
  }
  json operator()(const DisputeClaim& p) const {
    return {{"accused", std::string(to_string(p.accused))}};
  }
  json operator()(const DisputeEvidenceMsg& p) const {
    return {{"s_counterpart_claimed", signature_json(p.s_counterpart_claimed)},
            {"s_own_claimed", signature_json(p.s_own_claimed)},
            {"private_exponent", to_decimal(p.private_exponent)}};
  }
  json operator()(const VerdictMsg& p) const { return {{"verdict", verdict_json(p.verdict)}}; }
};

json key_json(const PublicKey& k) { return {{"n", to_decimal(k.n)}, {"e", to_decimal(k.e)}}; }

}  // namespace

std::string serialize_transcript(const SessionTranscript& t) {
  json messages = json::array();
  for (const auto& msg : t.messages) {
    messages.push_back({{"step", msg.step},
                        {"from", std::string(to_string(msg.from))},
                        {"to", std::string(to_string(msg.to))},
                        {"kind", std::string(to_string(msg.kind()))},
                        {"payload", std::visit(PayloadToJson{}, msg.payload)}});
  }

  const json doc{
      {"session_id", t.session_id},
      // 64-bit seeds exceed the exact range of JSON numbers in many readers.
      {"seed", std::to_string(t.seed)},
      {"scenario", t.scenario},
      {"contract_hex", t.contract_hex},
      {"keys", {{"alice", key_json(t.alice_key)}, {"bob", key_json(t.bob_key)}}},
      {"width_L", t.width},
      {"messages", std::move(messages)},
      {"verdict", verdict_json(t.verdict)},
      {"stats", {{"rounds", t.stats.rounds}, {"triples_consumed", t.stats.triples_consumed}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace qcs
