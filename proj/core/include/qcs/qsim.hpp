#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcs {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 8;
inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr double kCorruptNormTolerance = 1e-9;

// Index of a qubit inside a register. Basis indices are big-endian over
// ascending QubitId: qubit 0 is the most significant bit of the index.
struct QubitId {
  std::size_t index = 0;

  constexpr explicit QubitId(std::size_t i) : index(i) {}
  friend constexpr bool operator==(QubitId, QubitId) = default;
};

// Dense pure state over at most kMaxQubits qubits.
class StateVector {
 public:
  // Throws SizeError unless 1 <= num_qubits <= kMaxQubits.
  explicit StateVector(std::size_t num_qubits);

  // Takes ownership of raw amplitudes. The length must be a power of two
  // in range; normalization is not checked here (measure_qubit does).
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> mutable_amplitudes() noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t basis) const { return amplitudes_.at(basis); }

  // L2 norm.
  double norm() const noexcept;

  // Bit of `qubit` inside basis index `basis` under the big-endian convention.
  std::size_t bit_of(std::size_t basis, QubitId qubit) const noexcept {
    return (basis >> (num_qubits_ - 1 - qubit.index)) & 1U;
  }

  // Throws IndexError if the qubit does not exist in this register.
  void check_qubit(QubitId qubit) const;

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

// H, X and CNOT are the whole gate set.
struct Gate {
  enum class Kind : std::uint8_t { H, X, CNOT };

  Kind kind;
  QubitId target;
  QubitId control{0};  // meaningful for CNOT only

  static constexpr Gate h(std::size_t q) { return {Kind::H, QubitId{q}}; }
  static constexpr Gate x(std::size_t q) { return {Kind::X, QubitId{q}}; }
  static constexpr Gate cnot(std::size_t control, std::size_t target) {
    return {Kind::CNOT, QubitId{target}, QubitId{control}};
  }
};

struct MeasurementResult {
  int bit = 0;
  StateVector post_state{1};
  double probability_of_one = 0.0;
};

// Ground state |0...0> on num_qubits qubits.
StateVector new_state(std::size_t num_qubits);

// Returns gate applied to state. Throws IndexError for an out-of-range
// qubit and GateError for a CNOT whose control equals its target.
StateVector apply_gate(const StateVector& state, const Gate& gate);
void apply_gate_in_place(StateVector& state, const Gate& gate);

// Probability that `qubit` reads 1 (Born rule).
double probability_of_one(const StateVector& state, QubitId qubit);

// Projective Z measurement of one qubit. The outcome is 1 iff
// u < probability_of_one; the post-measurement state is projected and
// renormalized. Throws CorruptStateError if the input norm is off by more
// than kCorruptNormTolerance.
MeasurementResult measure_qubit(const StateVector& state, QubitId qubit, double u);

// Writes the even-parity resource (|000>+|011>+|110>+|101>)/2 onto qubits
// a, b, c of a register whose qubits are all |0>, using the gate sequence
//   H(a), CNOT(a,b), CNOT(a,c)      -> GHZ (|000>+|111>)/sqrt2
//   H(a), H(b), H(c)                -> even-parity superposition
void prepare_xor_resource_on(StateVector& state, QubitId a, QubitId b, QubitId c);

// Three-qubit resource state, qubit order (A, B, C).
StateVector prepare_xor_resource();

// Copy of the amplitudes in basis order.
std::vector<Amplitude> get_amplitudes(const StateVector& state);

// Largest elementwise |lhs - rhs|. Registers must have equal size.
double max_deviation(const StateVector& lhs, const StateVector& rhs);

}  // namespace qcs
