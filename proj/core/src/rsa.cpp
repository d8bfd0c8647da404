#include "qcs/rsa.hpp"

#include <array>
#include <cctype>

#include "qcs/errors.hpp"

namespace qcs {

namespace mp = boost::multiprecision;

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                67, 71, 73, 79, 83, 89, 97};

constexpr int kGenerationAttempts = 100000;

// Fixed stream for validating caller-supplied primes, so that
// keypair_from_primes stays a pure function of its arguments.
constexpr std::uint64_t kValidationSeed = 0x5eed0f0a11c0ffeeULL;

BigInt random_bits(std::size_t bits, RandomSource& rng) {
  BigInt out = 0;
  std::size_t filled = 0;
  while (filled < bits) {
    out <<= 64;
    out |= rng.next_u64();
    filled += 64;
  }
  return out >> (filled - bits);
}

bool is_prime_for_validation(const BigInt& n) {
  SeededRandom rng(kValidationSeed);
  return is_probable_prime(n, kDefaultMillerRabinRounds, rng);
}

}  // namespace

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return static_cast<std::size_t>(mp::msb(mp::abs(value))) + 1;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start) throw ArgumentError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ArgumentError("not a decimal integer: '" + text + "'");
    }
  }
  return BigInt(text);
}

BigInt mod_exp(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  if (modulus < 2) throw ArgumentError("modulus must be >= 2");
  if (exponent < 0) throw ArgumentError("exponent must be non-negative");

  BigInt b = base % modulus;
  if (b < 0) b += modulus;
  BigInt result = 1;
  const std::size_t bits = bit_length(exponent);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mp::bit_test(exponent, static_cast<unsigned>(i))) result = (result * b) % modulus;
    b = (b * b) % modulus;
  }
  return result % modulus;
}

BigInt mod_inverse(const BigInt& a, const BigInt& modulus) {
  if (modulus < 2) throw ArgumentError("modulus must be >= 2");
  BigInt r0 = modulus;
  BigInt r1 = a % modulus;
  if (r1 < 0) r1 += modulus;
  BigInt t0 = 0;
  BigInt t1 = 1;
  while (r1 != 0) {
    const BigInt quot = r0 / r1;
    BigInt next_r = r0 - quot * r1;
    r0 = std::move(r1);
    r1 = std::move(next_r);
    BigInt next_t = t0 - quot * t1;
    t0 = std::move(t1);
    t1 = std::move(next_t);
  }
  if (r0 != 1) {
    throw NoInverseError("gcd(" + to_decimal(a) + ", " + to_decimal(modulus) + ") = " +
                         to_decimal(r0));
  }
  if (t0 < 0) t0 += modulus;
  return t0;
}

bool is_probable_prime(const BigInt& n, int rounds, RandomSource& rng) {
  if (rounds < 1) throw ArgumentError("Miller-Rabin needs at least one round");
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }

  // n - 1 = 2^s * t, t odd
  const BigInt n_minus_1 = n - 1;
  const unsigned s = mp::lsb(n_minus_1);
  const BigInt t = n_minus_1 >> s;

  for (int round = 0; round < rounds; ++round) {
    const BigInt a = 2 + random_below(n - 3, rng);  // [2, n-2]
    BigInt x = mod_exp(a, t, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned j = 1; j < s; ++j) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

BigInt random_below(const BigInt& bound, RandomSource& rng) {
  if (bound <= 0) throw ArgumentError("random_below needs a positive bound");
  const std::size_t bits = bit_length(bound);
  // Rejection sampling; accepts with probability > 1/2.
  for (;;) {
    BigInt candidate = random_bits(bits, rng);
    if (candidate < bound) return candidate;
  }
}

PublicKey::PublicKey(BigInt modulus, BigInt exponent)
    : n(std::move(modulus)), e(std::move(exponent)) {
  if (n < 6) throw ArgumentError("public modulus must be >= 6");
  if (e < 1) throw ArgumentError("public exponent must be >= 1");
}

BigInt select_signing_exponent(const BigInt& z) {
  if (z < 2) throw ArgumentError("z must be >= 2");
  SeededRandom rng(kValidationSeed);
  for (BigInt d = 3;; d += 2) {
    if (mp::gcd(d, z) == 1 && is_probable_prime(d, kDefaultMillerRabinRounds, rng)) return d;
  }
}

RsaKeyPair keypair_from_primes(const BigInt& p, const BigInt& q,
                               const std::optional<BigInt>& d_override) {
  if (!is_prime_for_validation(p)) throw ArgumentError("p = " + to_decimal(p) + " is not prime");
  if (!is_prime_for_validation(q)) throw ArgumentError("q = " + to_decimal(q) + " is not prime");
  if (p == q) throw ArgumentError("p and q must be distinct");

  RsaKeyPair key;
  key.p = p;
  key.q = q;
  key.n = p * q;
  key.z = (p - 1) * (q - 1);
  if (d_override) {
    const BigInt& d = *d_override;
    if (!is_prime_for_validation(d)) {
      throw ArgumentError("d = " + to_decimal(d) + " is not prime");
    }
    if (mp::gcd(d, key.z) != 1) {
      throw ArgumentError("d = " + to_decimal(d) + " shares a factor with z = " +
                          to_decimal(key.z));
    }
    key.d = d;
  } else {
    key.d = select_signing_exponent(key.z);
  }
  key.e = mod_inverse(key.d, key.z);
  return key;
}

RsaKeyPair generate_keypair(std::size_t prime_bits, RandomSource& rng,
                            const std::optional<BigInt>& d_override) {
  if (prime_bits < 4) throw ArgumentError("prime_bits must be >= 4");

  const BigInt top = BigInt(1) << (prime_bits - 1);
  auto next_prime = [&](const std::optional<BigInt>& avoid) -> BigInt {
    for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
      BigInt candidate = random_bits(prime_bits, rng) | top | 1;
      if (avoid && candidate == *avoid) continue;
      if (is_probable_prime(candidate, kDefaultMillerRabinRounds, rng)) return candidate;
    }
    throw GenerationError("no " + std::to_string(prime_bits) + "-bit prime found after " +
                          std::to_string(kGenerationAttempts) + " attempts");
  };

  const BigInt p = next_prime(std::nullopt);
  const BigInt q = next_prime(p);
  return keypair_from_primes(p, q, d_override);
}

BigInt sign(const BigInt& m, const RsaKeyPair& key) {
  if (m <= 0 || m >= key.n) {
    throw RangeError("message " + to_decimal(m) + " outside (0, " + to_decimal(key.n) + ")");
  }
  return mod_exp(m, key.d, key.n);
}

BigInt verify(const BigInt& s, const PublicKey& pub) {
  if (s < 0 || s >= pub.n) {
    throw RangeError("signature " + to_decimal(s) + " outside [0, " + to_decimal(pub.n) + ")");
  }
  return mod_exp(s, pub.e, pub.n);
}

Contract encode_contract(std::span<const std::uint8_t> text, const BigInt& bound) {
  if (bound < 2) throw ArgumentError("contract bound must be >= 2");
  if (text.empty()) throw EncodingError("contract is empty");
  BigInt m = 0;
  for (auto byte : text) {
    m <<= 8;
    m |= byte;
  }
  if (m == 0) throw EncodingError("contract encodes to 0; add a non-zero byte");
  if (m >= bound) {
    throw EncodingError("contract value " + to_decimal(m) + " does not fit below modulus " +
                        to_decimal(bound) + "; use larger keys or a shorter contract");
  }
  return Contract{{text.begin(), text.end()}, std::move(m)};
}

}  // namespace qcs
