#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/ideal.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// A multivariate polynomial with exact rational coefficients, stored as a
/// monomial -> coefficient map with no zero coefficients.  The map is keyed
/// in ascending graded revlex, so the last entry is the leading term.
class MultivariatePoly {
public:
  using TermMap = std::map<Monomial, mpq_class, CanonicalLess>;

  explicit MultivariatePoly(int ambient);

  static MultivariatePoly zero(int ambient) { return MultivariatePoly(ambient); }
  static MultivariatePoly constant(int ambient, const mpq_class& value);
  static MultivariatePoly from_monomial(const Monomial& m, const mpq_class& coeff = 1);
  static MultivariatePoly variable(int ambient, int var);
  /// x_1 + ... + x_n.
  static MultivariatePoly variable_sum(int ambient);

  int ambient() const { return ambient_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum term degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int* degree_out = nullptr) const;
  const TermMap& terms() const { return terms_; }
  mpq_class coefficient(const Monomial& m) const;
  /// Graded-revlex leading term; throws std::logic_error on zero.
  std::pair<Monomial, mpq_class> leading_term() const;

  /// Accumulates coeff onto the monomial's entry, erasing it when the sum
  /// cancels to zero.
  void add_term(const Monomial& m, const mpq_class& coeff);

  MultivariatePoly& operator+=(const MultivariatePoly& other);
  MultivariatePoly& operator-=(const MultivariatePoly& other);
  MultivariatePoly operator-() const;
  bool operator==(const MultivariatePoly& other) const {
    return ambient_ == other.ambient_ && terms_ == other.terms_;
  }
  bool operator!=(const MultivariatePoly& other) const { return !(*this == other); }

private:
  int ambient_;
  TermMap terms_;
};

MultivariatePoly operator+(MultivariatePoly lhs, const MultivariatePoly& rhs);
MultivariatePoly operator-(MultivariatePoly lhs, const MultivariatePoly& rhs);
MultivariatePoly operator*(const MultivariatePoly& lhs, const MultivariatePoly& rhs);
MultivariatePoly operator*(const mpq_class& scalar, const MultivariatePoly& poly);

MultivariatePoly pow(const MultivariatePoly& base, int exponent);

struct DivisionResult {
  MultivariatePoly quotient;
  MultivariatePoly remainder;
};

/// Single-divisor multivariate division with graded-revlex leading terms:
/// dividend = quotient * divisor + remainder, no remainder term divisible
/// by the divisor's leading monomial.
DivisionResult divide(const MultivariatePoly& dividend, const MultivariatePoly& divisor);
/// As divide, but a nonzero remainder throws std::domain_error.
MultivariatePoly exact_divide(const MultivariatePoly& dividend, const MultivariatePoly& divisor);

/// Substitutes images[v] for variable v+1; images must all share an ambient
/// ring, which becomes the ambient of the result.
MultivariatePoly substitute(const MultivariatePoly& poly,
                            const std::vector<MultivariatePoly>& images);

/// Deletes every term whose monomial lies in the (monomial) ideal; this is
/// reduction to the standard-monomial normal form.
MultivariatePoly reduce_mod(const MultivariatePoly& poly, const MonomialIdeal& ideal);

/// Renders terms in descending revlex; dual_variables switches x_i to X_i
/// for polynomials living in the dual ring.
std::string to_text(const MultivariatePoly& poly, bool dual_variables = false);

}  // namespace lefschetz
