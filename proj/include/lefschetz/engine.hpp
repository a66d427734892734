#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/field.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

enum class LefschetzProperty { weak, strong };

/// One rank check of multiplication by ell^power from degree source_degree.
/// `certificate` names how the rank value was settled:
///   "trivial"              an empty source or target space;
///   "modular"              native elimination over the requested F_p;
///   "prime_witness"        full rank mod certificate_prime, which certifies
///                          full rank over the rationals;
///   "rational_elimination" fraction-free elimination over the integers;
///   "kernel_witness"       an exactly verified integer kernel vector
///                          certifies the deficiency; `rank` is then the
///                          best modular lower bound and rank_exact is false.
struct MapCheck {
  int source_degree = 0;
  int power = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t expected_rank = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  bool rank_exact = true;
  std::string certificate;
  std::uint64_t certificate_prime = 0;
};

enum class WitnessSide {
  kernel,    // vector in the source space killed by ell^t
  cokernel,  // functional on the target space vanishing on the image
};

/// Failure certificate in the monomial basis, normalized so the
/// revlex-largest supported monomial has coefficient 1.  Over F_p the
/// coefficients are residues lifted to integers.
struct RankWitness {
  WitnessSide side = WitnessSide::kernel;
  int source_degree = 0;
  int power = 1;
  std::vector<std::pair<Monomial, mpq_class>> terms;  // descending revlex
  Monomial leading;
};

struct LefschetzReport {
  LefschetzProperty property = LefschetzProperty::strong;
  FieldSpec field = FieldSpec::rationals();
  bool pass = false;
  int socle_degree = 0;
  IntSequence hilbert;
  /// All checked maps, ordered by (power, source_degree); the weak property
  /// checks power 1 only, the strong one every 1 <= t, i + t <= D.
  std::vector<MapCheck> maps;
  /// For failing reports: a witness for the first deficient map.
  std::optional<RankWitness> witness;

  /// First deficient map in report order, if any.
  const MapCheck* first_failure() const;
};

struct CheckOptions {
  /// 0 = library default (all available threads), 1 = serial, n = n threads.
  int threads = 0;
  bool want_witness = true;
};

/// Matrix of multiplication by ell^t = (x_1 + ... + x_n)^t from A_i to
/// A_{i+t} in the descending-revlex standard monomial bases.  Degrees
/// beyond the socle give empty dimensions.
ExactMatrix mult_matrix(const GradedQuotient& q, int i, int t, const FieldSpec& field);

/// The three nontrivial blocks of M_i^t under the basis split (monomials
/// free of x_n first, then x_n times a lower-degree monomial):
///   M_i^t = [[Mbar_i^t, 0], [t * Mbar_i^{t-1}, Mbar_{i-1}^t]].
/// `matches` verifies that equality against the directly built M_i^t.
struct BlockDecomposition {
  ExactMatrix top_left;
  ExactMatrix bottom_left;
  ExactMatrix bottom_right;
  bool matches = false;
};

/// Requires i >= 1, t >= 1 and the basis_split ideal shape.
BlockDecomposition block_decomposition(const GradedQuotient& q, int i, int t,
                                       const FieldSpec& field);

/// Strong Lefschetz check for ell = x_1 + ... + x_n over the given field.
LefschetzReport check_slp(const MonomialIdeal& ideal, const FieldSpec& field,
                          const CheckOptions& options = {});
/// Weak Lefschetz check (power 1 maps only).
LefschetzReport check_wlp(const MonomialIdeal& ideal, const FieldSpec& field,
                          const CheckOptions& options = {});

enum class HfGapKind {
  n3_injectivity_gap,  // HF(d+1) - HF(d-2) for the three-variable power family
  n4_surjectivity_gap, // HF(2d-3) - HF(2d-2) for the four-variable power family
};

long hf_gap(HfGapKind kind, int d);

std::string to_text(const LefschetzReport& report);

}  // namespace lefschetz
