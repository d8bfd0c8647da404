#include "cli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcs/errors.hpp"
#include "qcs/nonlocal_xor.hpp"
#include "qcs/random.hpp"

namespace qcs::cli {

namespace {

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower >= 'a' && lower <= 'f') return lower - 'a' + 10;
  return -1;
}

BigInt json_integer(const nlohmann::json& node, const std::string& where) {
  if (node.is_string()) return parse_decimal(node.get<std::string>());
  if (node.is_number_unsigned()) return BigInt(node.get<std::uint64_t>());
  if (node.is_number_integer()) return BigInt(node.get<std::int64_t>());
  throw ArgumentError(where + " must be an integer or a decimal string");
}

std::optional<ForcedKey> forced_key_from(const nlohmann::json& doc, const char* party) {
  if (!doc.contains(party)) return std::nullopt;
  const auto& node = doc.at(party);
  const std::string where = std::string("forced key '") + party + "'";
  if (!node.is_object() || !node.contains("p") || !node.contains("q")) {
    throw ArgumentError(where + " needs fields p and q");
  }
  ForcedKey key{json_integer(node.at("p"), where + ".p"), json_integer(node.at("q"), where + ".q"),
                std::nullopt};
  if (node.contains("d")) key.d = json_integer(node.at("d"), where + ".d");
  return key;
}

std::string dec_string(int dec) {
  std::string out(3, '0');
  for (int i = 0; i < 3; ++i) out[i] = static_cast<char>('0' + ((dec >> (2 - i)) & 1));
  return out;
}

std::string support_string(int k, int r) {
  std::string out = "{";
  const auto support = outcome_support(k, r);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out += ",";
    out += dec_string(support[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<std::uint8_t> parse_hex(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  if (text.size() % 2 != 0) throw ArgumentError("hex contract has an odd number of digits");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = hex_value(text[i]);
    const int lo = hex_value(text[i + 1]);
    if (hi < 0 || lo < 0) throw ArgumentError("malformed hex contract '" + std::string(text) + "'");
    bytes.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return bytes;
}

ForcedKeys parse_forced_keys(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("forced keys are not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("forced keys must be a JSON object");
  return ForcedKeys{forced_key_from(doc, "alice"), forced_key_from(doc, "bob")};
}

ForcedKeys load_forced_keys(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read forced keys file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_forced_keys(buffer.str());
}

int exit_code_for(const Verdict& verdict) noexcept {
  switch (verdict.kind) {
    case Verdict::Kind::Valid: return kExitValid;
    case Verdict::Kind::Cancelled: return kExitCancelled;
    case Verdict::Kind::ClaimRejected: return kExitClaimRejected;
  }
  return kExitUsage;
}

int cmd_run(const ScenarioConfig& config, std::ostream& out, std::ostream& err) {
  const auto behaviors = scenario_behaviors(config.scenario);
  if (!behaviors) {
    err << "error: unknown scenario '" << config.scenario << "'\n";
    return kExitUsage;
  }

  SessionConfig session;
  session.scenario = config.scenario;
  session.contract = config.contract;
  session.prime_bits = config.prime_bits;
  session.seed = config.seed;
  session.alice = behaviors->first;
  session.bob = behaviors->second;
  session.alice_key = config.forced_keys.alice;
  session.bob_key = config.forced_keys.bob;

  const SessionResult result = run_session(session);
  const std::string json = serialize_transcript(result.transcript);

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write '" << *config.output_path << "'\n";
      return kExitUsage;
    }
    file << json;
  } else {
    out << json;
  }
  out << "VERDICT: " << result.verdict.label() << "\n";
  return exit_code_for(result.verdict);
}

int cmd_xor_demo(const XorDemoConfig& config, std::ostream& out, std::ostream& err) {
  if (config.rounds < 1) {
    err << "error: --rounds must be >= 1\n";
    return kExitUsage;
  }
  SeededRandom rng(config.seed);
  std::array<std::size_t, 8> counts{};
  std::size_t agree = 0;
  const int expected = config.k ^ config.r;
  for (std::size_t i = 0; i < config.rounds; ++i) {
    const XorRound round = run_xor_round(config.k, config.r, rng);
    ++counts[static_cast<std::size_t>(round.dec())];
    if (round.xor_bit == expected) ++agree;
  }

  const auto total = static_cast<double>(config.rounds);
  out << "xor-demo k=" << config.k << " r=" << config.r << " rounds=" << config.rounds
      << " seed=" << config.seed << "\n";
  out << "DEC   count  frequency\n";
  for (int dec = 0; dec < 8; ++dec) {
    out << dec_string(dec) << "  " << std::setw(6) << counts[static_cast<std::size_t>(dec)]
        << "  " << std::fixed << std::setprecision(4)
        << static_cast<double>(counts[static_cast<std::size_t>(dec)]) / total << "\n";
  }
  out << "support " << support_string(config.k, config.r) << "\n";
  if (agree != config.rounds) {
    out << "inferred xor: inconsistent (" << agree << "/" << config.rounds << " rounds agree)\n";
    return kExitUsage;
  }
  out << "inferred xor: " << expected << " (all " << config.rounds << " rounds agree)\n";
  return 0;
}

int cmd_verify_circuit(std::ostream& out) {
  bool ok = true;
  for (int k = 0; k <= 1; ++k) {
    for (int r = 0; r <= 1; ++r) {
      const double dev = max_deviation(evolve_round(build_round_state(k, r)), closed_form_output(k, r));
      const bool pass = dev < kAmplitudeTolerance;
      ok = ok && pass;
      std::ostringstream dev_text;
      dev_text << std::scientific << std::setprecision(3) << dev;
      out << "k=" << k << " r=" << r << " max_deviation=" << dev_text.str()
          << " support(DEC)=" << support_string(k, r) << (pass ? " OK" : " FAIL") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum contract-signature protocol simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string contract_hex_arg;
  std::string contract_text;
  std::size_t prime_bits = 32;
  std::uint64_t run_seed = 0;
  std::string out_path;
  std::string forced_keys_path;
  auto* run = app.add_subcommand("run", "Run one protocol session and write its transcript");
  run->add_option("--scenario", scenario, "honest | bob-forges | alice-forges | alice-false-claim | bob-false-claim")
      ->required();
  auto* hex_opt = run->add_option("--contract", contract_hex_arg, "Contract bytes as hex");
  auto* text_opt = run->add_option("--contract-text", contract_text, "Contract bytes as text");
  hex_opt->excludes(text_opt);
  run->add_option("--prime-bits", prime_bits, "Bits per RSA prime")->capture_default_str();
  run->add_option("--seed", run_seed, "Session seed")->capture_default_str();
  run->add_option("--out", out_path, "Transcript path (default: stdout)");
  run->add_option("--forced-keys", forced_keys_path, "JSON file with p, q, d per party");

  XorDemoConfig demo;
  auto* xor_demo = app.add_subcommand("xor-demo", "Sample the non-local XOR gadget");
  xor_demo->add_option("--k", demo.k, "Alice's bit")->check(CLI::Range(0, 1))->capture_default_str();
  xor_demo->add_option("--r", demo.r, "Bob's bit")->check(CLI::Range(0, 1))->capture_default_str();
  xor_demo->add_option("--rounds", demo.rounds, "Number of rounds")->capture_default_str();
  xor_demo->add_option("--seed", demo.seed, "Seed")->capture_default_str();

  auto* verify = app.add_subcommand("verify-circuit", "Compare the circuit with the closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run) {
      ScenarioConfig config;
      config.scenario = scenario;
      config.prime_bits = prime_bits;
      config.seed = run_seed;
      if (*hex_opt) {
        config.contract = parse_hex(contract_hex_arg);
      } else if (*text_opt) {
        config.contract.assign(contract_text.begin(), contract_text.end());
      } else {
        err << "error: one of --contract or --contract-text is required\n";
        return kExitUsage;
      }
      if (!out_path.empty()) config.output_path = out_path;
      if (!forced_keys_path.empty()) config.forced_keys = load_forced_keys(forced_keys_path);
      return cmd_run(config, out, err);
    }
    if (*xor_demo) return cmd_xor_demo(demo, out, err);
    if (*verify) return cmd_verify_circuit(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcs::cli
