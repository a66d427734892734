#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/field.hpp"

namespace lefschetz {

/// A dense exact matrix over a FieldSpec: arbitrary-precision rationals, or
/// residues in [0, p) for a prime field.  Immutable use after building is
/// the norm; mutation is limited to set_* during construction.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field);
  static ExactMatrix identity(std::size_t n, FieldSpec field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const mpq_class& rational_at(std::size_t r, std::size_t c) const;
  void set_rational(std::size_t r, std::size_t c, mpq_class value);
  std::uint64_t residue_at(std::size_t r, std::size_t c) const;
  void set_residue(std::size_t r, std::size_t c, std::uint64_t value);
  /// Sets an entry from a plain integer in either kind of field.
  void set_integer(std::size_t r, std::size_t c, long value);

  bool is_zero() const;
  bool operator==(const ExactMatrix& other) const;
  bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

  ExactMatrix transposed() const;
  /// Multiplies every entry by alpha (reduced into F_p for prime fields;
  /// the denominator of alpha must then be invertible mod p).
  ExactMatrix scaled(const mpq_class& alpha) const;
  /// Reduction of a rational matrix mod p; throws std::domain_error when a
  /// denominator vanishes mod p.
  ExactMatrix reduced_mod(std::uint64_t p) const;

private:
  std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<mpq_class> qdata_;        // rationals storage
  std::vector<std::uint64_t> pdata_;    // prime-field storage
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

/// Exact rank over the matrix's own field.  Rational matrices go through
/// fraction-free (Bareiss) elimination with smallest-nonzero full pivoting;
/// prime-field matrices through modular elimination (OpenMP row updates).
std::size_t rank(const ExactMatrix& m);
/// Rank computed over another field: a rational matrix may be reduced into
/// F_p first; residues cannot be lifted back to the rationals.
std::size_t rank(const ExactMatrix& m, const FieldSpec& field);
/// Reference implementation with the parallel row-update path disabled;
/// always returns the same value as rank().
std::size_t rank_serial(const ExactMatrix& m);

struct BlockRankResult {
  std::size_t lhs_rank = 0;
  std::size_t rhs_rank = 0;
  bool equal = false;
};

/// Assembles M = [[A·P, 0], [alpha·P, P·B]] and verifies the block-rank
/// identity rank(M) = rank(P) + rank(A·P·B).  Requires alpha nonzero in the
/// field and compatible dimensions; this is a verifier, so `equal` reports
/// the comparison rather than assuming it.
BlockRankResult block_rank_check(const ExactMatrix& a, const ExactMatrix& p,
                                 const ExactMatrix& b, const mpq_class& alpha,
                                 const FieldSpec& field);

/// Exact right-kernel vector (nullopt when the matrix has full column
/// rank).  Rational path uses Gauss-Jordan over mpq and is intended for
/// small matrices; prime-field entries come back as lifted residues.
std::optional<std::vector<mpq_class>> kernel_vector(const ExactMatrix& m);

namespace detail {

/// Dense row-major matrix over F_p with entries already reduced.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, std::uint64_t prime)
      : rows(r), cols(c), p(prime), a(r * c, 0) {}
  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Dense row-major matrix over the integers.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  IntMatrix transposed() const;
};

struct RrefSummary {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// In-place Gauss-Jordan reduction mod p.  `parallel` switches the OpenMP
/// row-update kernel on; the serial path is the reference implementation
/// and both produce the identical reduced form.
RrefSummary rref_mod(ModMatrix& m, bool parallel);
std::size_t rank_mod(ModMatrix m, bool parallel);

/// Kernel vector for the first free column of m (nullopt = full column
/// rank).  Optionally reports the RREF pivot structure through summary_out.
std::optional<std::vector<std::uint64_t>> kernel_vector_mod(ModMatrix m, bool parallel,
                                                            RrefSummary* summary_out = nullptr);

/// Fraction-free Bareiss elimination with full pivoting on the
/// smallest-magnitude nonzero entry; exact rank over the rationals.
std::size_t rank_bareiss(IntMatrix m);

ModMatrix reduce_int_mod(const IntMatrix& m, std::uint64_t p);
/// Row-wise denominator clearing (rank-preserving); requires a rational
/// ExactMatrix.
IntMatrix int_matrix_from(const ExactMatrix& m);

/// Rational number with numerator and denominator below sqrt(modulus/2)
/// congruent to residue, when one exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus);

enum class KernelOutcome {
  witness,       // exact nonzero integer vector v with M v = 0 found
  full_rank,     // some prime certified full column rank (hence over Q too)
  inconclusive,  // reconstruction failed within the prime budget
};

struct KernelSearch {
  KernelOutcome outcome = KernelOutcome::inconclusive;
  std::vector<mpz_class> vector;
  std::uint64_t certifying_prime = 0;  // prime behind full_rank / first kernel prime
  std::size_t best_modular_rank = 0;   // max rank seen among the primes tried
  int primes_used = 0;
};

/// Hunts for an exact right-kernel vector of an integer matrix through
/// modular kernels, CRT, and rational reconstruction; every returned
/// witness is verified exactly over the integers.
KernelSearch integer_kernel_witness(const IntMatrix& m, int max_primes, bool parallel);

}  // namespace detail

}  // namespace lefschetz
