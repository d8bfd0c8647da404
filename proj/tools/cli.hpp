#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/protocol.hpp"

namespace qcs::cli {

inline constexpr int kExitValid = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCancelled = 2;
inline constexpr int kExitClaimRejected = 3;

struct ForcedKeys {
  std::optional<ForcedKey> alice;
  std::optional<ForcedKey> bob;
};

struct ScenarioConfig {
  std::string scenario;
  std::vector<std::uint8_t> contract;
  std::size_t prime_bits = 32;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;  // stdout when unset
  ForcedKeys forced_keys;
};

struct XorDemoConfig {
  int k = 0;
  int r = 0;
  std::size_t rounds = 10000;
  std::uint64_t seed = 0;
};

// "08", "0x0a0b". Throws ArgumentError on odd length or non-hex digits.
std::vector<std::uint8_t> parse_hex(std::string_view text);

// {"alice": {"p": .., "q": .., "d": ..}, "bob": {...}}; each party and each
// d are optional; integers may be JSON numbers or decimal strings.
ForcedKeys parse_forced_keys(std::string_view json_text);
ForcedKeys load_forced_keys(const std::string& path);

int exit_code_for(const Verdict& verdict) noexcept;

// Runs one session, writes the transcript JSON to output_path (or `out`)
// and prints `VERDICT: <label>` to `out`.
int cmd_run(const ScenarioConfig& config, std::ostream& out, std::ostream& err);

// Frequency table of (d, e, c) outcomes over many rounds and the inferred
// k xor r. Returns 0 iff every round agrees.
int cmd_xor_demo(const XorDemoConfig& config, std::ostream& out, std::ostream& err);

// One line per (k, r) with the max deviation between the simulated circuit
// and the closed-form output state. Returns 0 iff all are below 1e-12.
int cmd_verify_circuit(std::ostream& out);

// Parses argv and dispatches to run, xor-demo or verify-circuit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcs::cli
