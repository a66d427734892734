#include "lefschetz/inverse_system.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "lefschetz/engine.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/quotient.hpp"

namespace lefschetz {

namespace {

/// Contraction of the dual monomial X^a by x^b: falling-factorial coefficient
/// on X^(a-b), or nothing when b does not divide a.
std::optional<std::pair<Monomial, mpz_class>> contract_monomial(const Monomial& b,
                                                                const Monomial& a) {
  auto quotient = a.divided_by(b);
  if (!quotient.has_value()) return std::nullopt;
  mpz_class coeff = 1;
  for (int v = 0; v < a.ambient(); ++v) {
    for (int step = 0; step < b.exponent(v); ++step) {
      coeff *= a.exponent(v) - step;
    }
  }
  return std::make_pair(*quotient, coeff);
}

}  // namespace

MultivariatePoly apply_derivation(const MultivariatePoly& g, const MultivariatePoly& f) {
  if (g.ambient() != f.ambient()) throw std::invalid_argument("ambient mismatch");
  MultivariatePoly result(f.ambient());
  for (const auto& [b, cb] : g.terms()) {
    for (const auto& [a, ca] : f.terms()) {
      auto contracted = contract_monomial(b, a);
      if (contracted.has_value()) {
        result.add_term(contracted->first, cb * ca * mpq_class(contracted->second));
      }
    }
  }
  return result;
}

bool in_inverse_system(const MonomialIdeal& ideal, const MultivariatePoly& f) {
  if (ideal.ambient() != f.ambient()) throw std::invalid_argument("ambient mismatch");
  for (const auto& gen : ideal.generators()) {
    if (!apply_derivation(MultivariatePoly::from_monomial(gen), f).is_zero()) return false;
  }
  return true;
}

DualityRanks duality_rank(const MonomialIdeal& ideal, int i, const FieldSpec& field) {
  if (!field.is_rationals()) {
    throw std::invalid_argument("duality ranks are computed over the rationals only");
  }
  if (i < 0) throw std::invalid_argument("degree must be nonnegative");
  GradedQuotient quotient = build_quotient(ideal);

  DualityRanks out;
  out.primal_rank = rank(mult_matrix(quotient, i, 1, field));

  // The degree-k piece of the inverse system has the dual standard monomials
  // as a basis, so contraction by ell is a (dim A_i) x (dim A_{i+1}) matrix
  // whose (row, col) entry is the exponent a_v whenever removing one power of
  // x_v from the column monomial a yields the row monomial.
  const auto& source = quotient.basis(i + 1);
  const auto& target = quotient.basis(i);
  std::unordered_map<Monomial, std::size_t, MonomialHash> target_index;
  for (std::size_t r = 0; r < target.size(); ++r) target_index.emplace(target[r], r);

  ExactMatrix dual(target.size(), source.size(), field);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Monomial& a = source[c];
    for (int v = 0; v < a.ambient(); ++v) {
      const int exponent = a.exponent(v);
      if (exponent == 0) continue;
      // Divisors of standard monomials are standard, so the lookup must hit.
      auto it = target_index.find(a.divided_by(Monomial::variable(a.ambient(), v + 1)).value());
      if (it == target_index.end()) throw std::logic_error("dual basis lookup failed");
      dual.set_rational(it->second, c, exponent);
    }
  }
  out.dual_rank = rank(dual);
  return out;
}

MultivariatePoly witness_fd_bivariate(int d) {
  if (d < 3) throw std::invalid_argument("the kernel form needs degree at least 3");
  // numerator = y1^(d+1) - (-y2)^(d+1), divisible by y1 + y2.
  MultivariatePoly numerator(2);
  numerator.add_term(Monomial::pure_power(2, 1, d + 1), 1);
  numerator.add_term(Monomial::pure_power(2, 2, d + 1), (d % 2 == 0) ? 1 : -1);
  MultivariatePoly linear(2);
  linear.add_term(Monomial::variable(2, 1), 1);
  linear.add_term(Monomial::variable(2, 2), 1);
  MultivariatePoly g = exact_divide(numerator, linear);
  // Second mixed partial, as contraction by y1*y2.
  MultivariatePoly mixed = MultivariatePoly::from_monomial(
      Monomial::variable(2, 1).times(Monomial::variable(2, 2)));
  return apply_derivation(mixed, g);
}

MultivariatePoly witness_fd(int d) {
  MultivariatePoly bivariate = witness_fd_bivariate(d);
  const std::vector<MultivariatePoly> images = {
      MultivariatePoly::variable(3, 1) + MultivariatePoly::variable(3, 2),
      MultivariatePoly::variable(3, 3)};
  MultivariatePoly f = substitute(bivariate, images);

  MonomialIdeal ideal = power_family(3, d);
  MultivariatePoly cube = pow(MultivariatePoly::variable_sum(3), 3);
  if (!reduce_mod(cube * f, ideal).is_zero()) {
    throw std::logic_error("kernel form verification failed: ell^3 * f_d is nonzero");
  }
  return f;
}

bool identity_check(int d) {
  MultivariatePoly f = witness_fd_bivariate(d);
  MultivariatePoly linear(2);
  linear.add_term(Monomial::variable(2, 1), 1);
  linear.add_term(Monomial::variable(2, 2), 1);
  MultivariatePoly lhs = -(pow(linear, 3) * f);

  const mpq_class sign = (d % 2 == 0) ? 1 : -1;
  MultivariatePoly rhs(2);
  rhs.add_term(Monomial::pure_power(2, 1, d + 1), d - 1);
  rhs.add_term(Monomial::pure_power(2, 2, d + 1), sign * (d - 1));
  rhs.add_term(Monomial::pure_power(2, 1, d).times(Monomial::variable(2, 2)), d + 1);
  rhs.add_term(Monomial::variable(2, 1).times(Monomial::pure_power(2, 2, d)), sign * (d + 1));
  return lhs == rhs;
}

N5Witness witness_n5(int d) {
  if (d < 3) throw std::invalid_argument("the five-variable witnesses need degree at least 3");
  const int n = 5;
  auto var = [&](int v) { return MultivariatePoly::variable(n, v); };

  // ((x1+x2)^d - (-x3)^d) / (x1+x2+x3), degree d-1.
  const mpq_class sign_d = (d % 2 == 0) ? 1 : -1;
  MultivariatePoly num1 = pow(var(1) + var(2), d) - sign_d * pow(var(3), d);
  MultivariatePoly den1 = var(1) + var(2) + var(3);
  MultivariatePoly factor1 = exact_divide(num1, den1);

  // (x4^d - (-x5)^d) / (x4+x5), degree d-1.
  MultivariatePoly num2 = pow(var(4), d) - sign_d * pow(var(5), d);
  MultivariatePoly den2 = var(4) + var(5);
  MultivariatePoly factor2 = exact_divide(num2, den2);

  N5Witness out{factor1 * factor2, MultivariatePoly(n)};

  // (X1-X2)^(d-1) (X3-X4)^k (X4-X5)^k (X5-X3)^(k+r) with d = 3k + r.
  const int k = d / 3;
  const int r = d % 3;
  out.perp_F = pow(var(1) - var(2), d - 1) * pow(var(3) - var(4), k) * pow(var(4) - var(5), k) *
               pow(var(5) - var(3), k + r);

  MonomialIdeal ideal = power_family(n, d);
  MultivariatePoly ell = MultivariatePoly::variable_sum(n);
  if (out.kernel_f.degree() != 2 * d - 2) {
    throw std::logic_error("kernel witness has the wrong degree");
  }
  if (!reduce_mod(ell * out.kernel_f, ideal).is_zero()) {
    throw std::logic_error("kernel witness verification failed: ell * f is nonzero");
  }
  if (out.perp_F.degree() != 2 * d - 1) {
    throw std::logic_error("dual witness has the wrong degree");
  }
  if (!in_inverse_system(ideal, out.perp_F)) {
    throw std::logic_error("dual witness verification failed: F is not in the inverse system");
  }
  if (!apply_derivation(ell, out.perp_F).is_zero()) {
    throw std::logic_error("dual witness verification failed: ell o F is nonzero");
  }
  return out;
}

}  // namespace lefschetz
