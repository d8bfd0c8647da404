#include "qcs/nonlocal_xor.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

void check_bit(int v, const char* name) {
  if (v != 0 && v != 1) throw ProtocolError(std::string(name) + " must be 0 or 1");
}

// Even-parity (a, b, c) triples carrying the resource.
constexpr std::array<std::array<int, 3>, 4> kResourceTerms{{
    {0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1}}};

std::size_t basis_index(int d, int e, int a, int b, int c) {
  return static_cast<std::size_t>((d << 4) | (e << 3) | (a << 2) | (b << 1) | c);
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ProtocolError("bit string must have length >= 1");
  for (auto b : bits_) {
    if (b > 1) throw ProtocolError("bit string entries must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ProtocolError("bit string may contain only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitString(std::move(bits));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

StateVector build_round_state(int k, int r) {
  check_bit(k, "k");
  check_bit(r, "r");
  StateVector state(reg::kWidth);
  if (k) apply_gate_in_place(state, Gate::x(reg::D.index));
  if (r) apply_gate_in_place(state, Gate::x(reg::E.index));
  prepare_xor_resource_on(state, reg::A, reg::B, reg::C);
  return state;
}

StateVector evolve_round(const StateVector& state) {
  if (state.num_qubits() != reg::kWidth) {
    throw SizeError("XOR round expects a 5-qubit register");
  }
  StateVector out = apply_gate(state, Gate::cnot(reg::A.index, reg::D.index));
  apply_gate_in_place(out, Gate::cnot(reg::B.index, reg::E.index));
  return out;
}

StateVector closed_form_output(int k, int r) {
  check_bit(k, "k");
  check_bit(r, "r");
  std::vector<Amplitude> amps(std::size_t{1} << reg::kWidth, Amplitude{0.0, 0.0});
  for (const auto& [a, b, c] : kResourceTerms) {
    amps[basis_index(k ^ a, r ^ b, a, b, c)] = 0.5;
  }
  return StateVector::from_amplitudes(std::move(amps));
}

std::vector<int> outcome_support(int k, int r) {
  check_bit(k, "k");
  check_bit(r, "r");
  std::vector<int> dec;
  for (const auto& [a, b, c] : kResourceTerms) {
    dec.push_back(((k ^ a) << 2) | ((r ^ b) << 1) | c);
  }
  std::sort(dec.begin(), dec.end());
  return dec;
}

XorRound run_xor_round(int k, int r, RandomSource& rng) {
  const StateVector evolved = evolve_round(build_round_state(k, r));

  const auto md = measure_qubit(evolved, reg::D, rng.next_uniform());
  const auto me = measure_qubit(md.post_state, reg::E, rng.next_uniform());
  const auto mc = measure_qubit(me.post_state, reg::C, rng.next_uniform());

  XorRound round{k, r, md.bit, me.bit, mc.bit, 0};
  round.xor_bit = round.d ^ round.e ^ round.c;
  return round;
}

std::vector<XorRound> run_xor_rounds(const BitString& ka, const BitString& rb,
                                     RandomSource& rng) {
  if (ka.length() != rb.length()) {
    throw ProtocolError("XOR inputs differ in length: " + std::to_string(ka.length()) +
                        " vs " + std::to_string(rb.length()));
  }
  std::vector<XorRound> rounds;
  rounds.reserve(ka.length());
  for (std::size_t i = 0; i < ka.length(); ++i) {
    rounds.push_back(run_xor_round(ka[i], rb[i], rng));
  }
  return rounds;
}

BitString xor_bitstrings(const BitString& ka, const BitString& rb, RandomSource& rng) {
  const auto rounds = run_xor_rounds(ka, rb, rng);
  std::vector<std::uint8_t> out;
  out.reserve(rounds.size());
  for (const auto& round : rounds) out.push_back(static_cast<std::uint8_t>(round.xor_bit));
  return BitString(std::move(out));
}

}  // namespace qcs
