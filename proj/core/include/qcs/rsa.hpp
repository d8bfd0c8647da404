#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcs/random.hpp"

namespace qcs {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultMillerRabinRounds = 40;

// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigInt& value);

std::string to_decimal(const BigInt& value);
// Throws ArgumentError on anything but an optional '-' and decimal digits.
BigInt parse_decimal(const std::string& text);

// base^exponent mod modulus, square-and-multiply. Result in [0, modulus).
// Throws ArgumentError if modulus < 2 or exponent < 0.
BigInt mod_exp(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

// t in [1, modulus) with a*t = 1 (mod modulus), extended Euclid.
// Throws NoInverseError when gcd(a, modulus) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& modulus);

// Trial division by the primes below 100, then `rounds` Miller-Rabin
// rounds with random bases. Throws ArgumentError if rounds < 1.
bool is_probable_prime(const BigInt& n, int rounds, RandomSource& rng);

// Uniform value in [0, bound). bound must be positive.
BigInt random_below(const BigInt& bound, RandomSource& rng);

struct PublicKey {
  BigInt n;
  BigInt e;

  // Throws ArgumentError if n < 6 or e < 1.
  PublicKey(BigInt modulus, BigInt exponent);

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

// Textbook RSA in the signing orientation: the private exponent d is
// picked first (a prime coprime to z) and e is derived as d^-1 mod z.
struct RsaKeyPair {
  BigInt p;
  BigInt q;
  BigInt n;  // p * q
  BigInt z;  // (p - 1) * (q - 1)
  BigInt d;  // private signing exponent
  BigInt e;  // public verification exponent

  PublicKey public_key() const { return PublicKey{n, e}; }

  friend bool operator==(const RsaKeyPair&, const RsaKeyPair&) = default;
};

// Smallest prime >= 3 with gcd(d, z) = 1.
BigInt select_signing_exponent(const BigInt& z);

// Builds a key from chosen primes. With no override, d follows
// select_signing_exponent; an override must be a prime coprime to z.
// Throws ArgumentError if p or q is not prime, p == q, or the override is
// unusable.
RsaKeyPair keypair_from_primes(const BigInt& p, const BigInt& q,
                               const std::optional<BigInt>& d_override = std::nullopt);

// Samples distinct primes of exactly prime_bits bits. Throws ArgumentError
// if prime_bits < 4 and GenerationError if the retry budget runs out.
RsaKeyPair generate_keypair(std::size_t prime_bits, RandomSource& rng,
                            const std::optional<BigInt>& d_override = std::nullopt);

// s = m^d mod n. Throws RangeError unless 0 < m < n.
BigInt sign(const BigInt& m, const RsaKeyPair& key);

// m = s^e mod n; the caller compares with the contract. Throws RangeError
// unless 0 <= s < n.
BigInt verify(const BigInt& s, const PublicKey& pub);

struct Contract {
  std::vector<std::uint8_t> text;
  BigInt m;
};

// Big-endian interpretation of the bytes. Never reduces: a value of 0 or
// >= bound is an EncodingError. Throws ArgumentError if bound < 2.
Contract encode_contract(std::span<const std::uint8_t> text, const BigInt& bound);

}  // namespace qcs
