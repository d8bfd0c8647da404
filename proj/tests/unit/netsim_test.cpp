#include "qcs/netsim.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include "qcs/errors.hpp"

namespace qcs {
namespace {

Envelope bit(Party from, Party to, std::size_t round, int b) {
  return {from, to, XorBitReport{round, b}};
}

TEST(MessageBus, FifoPerRecipient) {
  MessageBus bus;
  bus.send(bit(Party::Alice, Party::Charlie, 0, 1));
  bus.send(bit(Party::Alice, Party::Charlie, 1, 0));
  const auto got = bus.drain(Party::Charlie);
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(std::get<XorBitReport>(got[0].payload).round, 0u);
  EXPECT_EQ(std::get<XorBitReport>(got[1].payload).round, 1u);
  EXPECT_LT(got[0].step, got[1].step);
}

TEST(MessageBus, DrainIsPerPartyAndConsuming) {
  MessageBus bus;
  EXPECT_TRUE(bus.drain(Party::Bob).empty());
  bus.send(bit(Party::Alice, Party::Charlie, 0, 1));
  bus.send(bit(Party::Charlie, Party::Bob, 0, 1));
  EXPECT_TRUE(bus.drain(Party::Alice).empty());
  const auto bob = bus.drain(Party::Bob);
  ASSERT_EQ(bob.size(), 1u);
  EXPECT_EQ(bob[0].to, Party::Bob);
  EXPECT_TRUE(bus.drain(Party::Bob).empty());
  EXPECT_EQ(bus.drain(Party::Charlie).size(), 1u);
}

TEST(MessageBus, EveryMessageLoggedOnce) {
  MessageBus bus;
  for (std::size_t i = 0; i < 5; ++i) bus.send(bit(Party::Bob, Party::Charlie, i, 0));
  bus.atomic_broadcast({bit(Party::Charlie, Party::Alice, 9, 1), bit(Party::Charlie, Party::Bob, 9, 1)});
  ASSERT_EQ(bus.log().size(), 7u);
  for (std::size_t i = 0; i < bus.log().size(); ++i) EXPECT_EQ(bus.log()[i].step, i + 1);
}

TEST(MessageBus, ClosedBusRejectsSends) {
  MessageBus bus;
  bus.close();
  EXPECT_FALSE(bus.is_open());
  EXPECT_THROW(bus.send(bit(Party::Alice, Party::Bob, 0, 0)), BusError);
  EXPECT_THROW(bus.atomic_broadcast({bit(Party::Alice, Party::Bob, 0, 0)}), BusError);
}

TEST(AtomicBroadcast, ConsecutiveSteps) {
  MessageBus bus;
  bus.send(bit(Party::Alice, Party::Charlie, 0, 0));
  const auto ack = bus.atomic_broadcast(
      {bit(Party::Charlie, Party::Alice, 0, 1), bit(Party::Charlie, Party::Bob, 0, 1)});
  EXPECT_EQ(ack.first_step, 2u);
  EXPECT_EQ(ack.count, 2u);
  EXPECT_EQ(bus.log()[1].to, Party::Alice);
  EXPECT_EQ(bus.log()[2].to, Party::Bob);
  EXPECT_EQ(bus.log()[2].step, bus.log()[1].step + 1);
}

TEST(AtomicBroadcast, SingleAndEmpty) {
  MessageBus bus;
  const auto one = bus.atomic_broadcast({bit(Party::Charlie, Party::Alice, 0, 1)});
  EXPECT_EQ(one.count, 1u);
  EXPECT_EQ(bus.drain(Party::Alice).size(), 1u);
  const auto none = bus.atomic_broadcast({});
  EXPECT_EQ(none.count, 0u);
  EXPECT_EQ(bus.log().size(), 1u);
}

TEST(AtomicBroadcast, MixedSendersRejected) {
  MessageBus bus;
  EXPECT_THROW(bus.atomic_broadcast({bit(Party::Charlie, Party::Alice, 0, 1),
                                     bit(Party::Bob, Party::Alice, 0, 1)}),
               BusError);
  EXPECT_TRUE(bus.log().empty());
}

TEST(ProtocolMessage, KindAndSignatures) {
  MessageBus bus;
  const SignatureBits s(48, 7);
  bus.send({Party::Charlie, Party::Alice, XorBroadcast{s}});
  bus.send({Party::Alice, Party::Charlie,
            DisputeEvidenceMsg{SignatureBits(49, 7), SignatureBits(2, 7), BigInt(7)}});
  EXPECT_EQ(bus.log()[0].kind(), MessageKind::XorBroadcast);
  EXPECT_EQ(bus.log()[0].signatures(), std::vector<SignatureBits>{s});
  EXPECT_EQ(bus.log()[1].signatures().size(), 2u);
  EXPECT_EQ(to_string(bus.log()[1].kind()), "DisputeEvidenceMsg");
}

TEST(SerializeTranscript, SchemaAndDecimalStrings) {
  MessageBus bus;
  bus.send({Party::Alice, Party::Charlie, PublicKeyAnnounce{55, 23}});
  bus.send({Party::Charlie, Party::Alice, XorBroadcast{SignatureBits(48, 7)}});
  ArbitrationChecks checks{false, true, true, true};
  SessionTranscript t{"s-1",
                      std::uint64_t{18446744073709551615ULL},
                      "bob-forges",
                      "08",
                      PublicKey(55, 23),
                      PublicKey(77, 37),
                      7,
                      bus.log(),
                      Verdict::cancelled(Party::Bob, checks),
                      SessionStats{7, 7}};
  const auto doc = nlohmann::json::parse(serialize_transcript(t));
  for (const char* key : {"session_id", "seed", "scenario", "contract_hex", "keys", "width_L",
                          "messages", "verdict", "stats"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["seed"], "18446744073709551615");
  EXPECT_EQ(doc["keys"]["bob"]["n"], "77");
  EXPECT_EQ(doc["keys"]["alice"]["e"], "23");
  EXPECT_EQ(doc["width_L"], 7);
  EXPECT_EQ(doc["messages"][0]["kind"], "PublicKeyAnnounce");
  EXPECT_EQ(doc["messages"][0]["payload"]["n"], "55");
  EXPECT_EQ(doc["messages"][1]["payload"]["s_ab"]["bits"], "0110000");
  EXPECT_EQ(doc["messages"][1]["payload"]["s_ab"]["value"], "48");
  EXPECT_EQ(doc["verdict"]["kind"], "Cancelled");
  EXPECT_EQ(doc["verdict"]["party"], "Bob");
  EXPECT_EQ(doc["verdict"]["checks"]["I"], false);
  EXPECT_EQ(doc["verdict"]["checks"]["IV"], true);
  EXPECT_EQ(doc["stats"]["triples_consumed"], 7);
  EXPECT_EQ(serialize_transcript(t), serialize_transcript(t));
}

}  // namespace
}  // namespace qcs
