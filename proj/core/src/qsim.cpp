#include "qcs/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_size(std::size_t num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw SizeError("register size " + std::to_string(num_qubits) +
                    " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_size(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw SizeError("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
  }
  StateVector state(static_cast<std::size_t>(std::countr_zero(dim)));
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::check_qubit(QubitId qubit) const {
  if (qubit.index >= num_qubits_) {
    throw IndexError("qubit " + std::to_string(qubit.index) + " out of range for " +
                     std::to_string(num_qubits_) + "-qubit register");
  }
}

StateVector new_state(std::size_t num_qubits) { return StateVector(num_qubits); }

void apply_gate_in_place(StateVector& state, const Gate& gate) {
  state.check_qubit(gate.target);
  const std::size_t n = state.num_qubits();
  const std::size_t target_mask = std::size_t{1} << (n - 1 - gate.target.index);
  auto amps = state.mutable_amplitudes();

  switch (gate.kind) {
    case Gate::Kind::H:
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & target_mask) continue;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | target_mask];
        amps[i] = (a0 + a1) * kInvSqrt2;
        amps[i | target_mask] = (a0 - a1) * kInvSqrt2;
      }
      break;
    case Gate::Kind::X:
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!(i & target_mask)) std::swap(amps[i], amps[i | target_mask]);
      }
      break;
    case Gate::Kind::CNOT: {
      state.check_qubit(gate.control);
      if (gate.control == gate.target) {
        throw GateError("CNOT control and target are both qubit " +
                        std::to_string(gate.target.index));
      }
      const std::size_t control_mask = std::size_t{1} << (n - 1 - gate.control.index);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & control_mask) && !(i & target_mask)) std::swap(amps[i], amps[i | target_mask]);
      }
      break;
    }
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  StateVector out = state;
  apply_gate_in_place(out, gate);
  return out;
}

double probability_of_one(const StateVector& state, QubitId qubit) {
  state.check_qubit(qubit);
  double p1 = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (state.bit_of(i, qubit)) p1 += std::norm(amps[i]);
  }
  return p1;
}

MeasurementResult measure_qubit(const StateVector& state, QubitId qubit, double u) {
  state.check_qubit(qubit);
  const double norm = state.norm();
  if (!(std::abs(norm - 1.0) <= kCorruptNormTolerance)) {
    throw CorruptStateError("state norm " + std::to_string(norm) + " is not 1");
  }

  // Clamp against rounding so that p1 + p0 == 1 exactly downstream.
  const double p1 = std::clamp(probability_of_one(state, qubit), 0.0, 1.0);
  const int bit = u < p1 ? 1 : 0;
  const double kept = bit ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(kept);

  MeasurementResult result{bit, state, p1};
  auto amps = result.post_state.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (static_cast<int>(state.bit_of(i, qubit)) == bit) {
      amps[i] *= scale;
    } else {
      amps[i] = 0.0;
    }
  }
  return result;
}

void prepare_xor_resource_on(StateVector& state, QubitId a, QubitId b, QubitId c) {
  apply_gate_in_place(state, Gate::h(a.index));
  apply_gate_in_place(state, Gate::cnot(a.index, b.index));
  apply_gate_in_place(state, Gate::cnot(a.index, c.index));
  apply_gate_in_place(state, Gate::h(a.index));
  apply_gate_in_place(state, Gate::h(b.index));
  apply_gate_in_place(state, Gate::h(c.index));
}

StateVector prepare_xor_resource() {
  StateVector state(3);
  prepare_xor_resource_on(state, QubitId{0}, QubitId{1}, QubitId{2});
  return state;
}

std::vector<Amplitude> get_amplitudes(const StateVector& state) {
  const auto amps = state.amplitudes();
  return {amps.begin(), amps.end()};
}

double max_deviation(const StateVector& lhs, const StateVector& rhs) {
  if (lhs.num_qubits() != rhs.num_qubits()) {
    throw SizeError("cannot compare registers of different sizes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.dimension(); ++i) {
    worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  }
  return worst;
}

}  // namespace qcs
