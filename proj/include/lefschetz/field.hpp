#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// The coefficient field of a computation: the rationals or F_p, p prime.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws std::invalid_argument unless p is prime (and fits 62 bits, so
  /// that modular products stay inside unsigned 128-bit arithmetic).
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals, p for F_p.
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const FieldSpec& other) const { return p_ == other.p_; }
  bool operator!=(const FieldSpec& other) const { return p_ != other.p_; }

  std::string to_string() const;
  /// Accepts "q" / "Q" / "0" for the rationals and "p:<prime>" or a bare
  /// prime for F_p.
  static FieldSpec parse(std::string_view text);

private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// Inverse of a mod p for prime p and a not divisible by p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// The largest few 61-bit-scale primes, starting at 2^61 - 1, for use as
/// randomized-certificate moduli when checking integer matrices.
std::vector<std::uint64_t> witness_primes(int count);

}  // namespace lefschetz
