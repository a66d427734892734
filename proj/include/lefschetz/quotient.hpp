#pragma once

#include <utility>
#include <vector>

#include "lefschetz/ideal.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

/// The graded artinian quotient A = R/I of a polynomial ring by a monomial
/// ideal: per-degree standard monomial bases B_k (descending revlex), the
/// Hilbert function, and the socle degree D.  Immutable after construction.
class GradedQuotient {
public:
  /// Enumerates every B_k up to the socle degree.  Throws when the ideal is
  /// not artinian or not proper.
  explicit GradedQuotient(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  int ambient() const { return ideal_.ambient(); }
  int socle_degree() const { return static_cast<int>(bases_.size()) - 1; }
  /// Basis of A_k, descending revlex; empty outside [0, socle degree].
  const std::vector<Monomial>& basis(int k) const;
  long dim(int k) const { return static_cast<long>(basis(k).size()); }
  const IntSequence& hilbert() const { return hilbert_; }
  long total_dim() const;

private:
  MonomialIdeal ideal_;
  std::vector<std::vector<Monomial>> bases_;
  IntSequence hilbert_;
};

GradedQuotient build_quotient(MonomialIdeal ideal);

/// Splits B_k as (monomials free of x_n, monomials divisible by x_n), the
/// two halves of the decomposition B_k = Bbar_k ∪ x_n Bbar_{k-1}.  Requires
/// the only generator involving the last variable to be x_n^2; throws
/// otherwise.  Both halves keep their descending revlex order, which is the
/// order they occupy inside B_k itself.
std::pair<std::vector<Monomial>, std::vector<Monomial>> basis_split(const GradedQuotient& q,
                                                                    int k);

/// The (n-1)-variable ideal obtained by deleting the pure power x_n^2 and
/// dropping the last (identically zero) exponent of the other generators.
/// Same precondition as basis_split.
MonomialIdeal delete_last_variable(const MonomialIdeal& ideal);

}  // namespace lefschetz
