#include "lefschetz/field.hpp"

#include <stdexcept>

namespace lefschetz {

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (1ull << 62))
    throw std::invalid_argument("field: characteristic must fit in 62 bits");
  if (!is_prime_u64(p))
    throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "0" || text == "rationals") return rationals();
  std::string_view digits = text;
  if (digits.rfind("p:", 0) == 0 || digits.rfind("P:", 0) == 0) digits.remove_prefix(2);
  if (digits.empty()) throw std::invalid_argument("field: empty characteristic");
  std::uint64_t p = 0;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("field: cannot parse '" + std::string(text) + "'");
    if (p > (~0ull - static_cast<std::uint64_t>(c - '0')) / 10)
      throw std::invalid_argument("field: characteristic out of range");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime_field(p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // no overflow: operands < p < 2^62
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("field: zero has no inverse");
  // Extended Euclid over signed 128-bit accumulators.
  __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a);
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    const __int128 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t0 < 0) t0 += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t0);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a known deterministic test for all 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> witness_primes(int count) {
  static const std::vector<std::uint64_t> cache = [] {
    std::vector<std::uint64_t> primes;
    std::uint64_t candidate = (1ull << 61) - 1;  // Mersenne prime
    while (primes.size() < 64) {
      if (is_prime_u64(candidate)) primes.push_back(candidate);
      candidate -= 2;
    }
    return primes;
  }();
  if (count <= static_cast<int>(cache.size()))
    return {cache.begin(), cache.begin() + count};
  std::vector<std::uint64_t> primes = cache;
  std::uint64_t candidate = primes.back() - 2;
  while (static_cast<int>(primes.size()) < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

}  // namespace lefschetz
