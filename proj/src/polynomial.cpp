#include "lefschetz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lefschetz {

MultivariatePoly::MultivariatePoly(int ambient) : ambient_(ambient) {
  if (ambient < 1) throw std::invalid_argument("polynomial ambient must be positive");
}

MultivariatePoly MultivariatePoly::constant(int ambient, const mpq_class& value) {
  MultivariatePoly p(ambient);
  p.add_term(Monomial::one(ambient), value);
  return p;
}

MultivariatePoly MultivariatePoly::from_monomial(const Monomial& m, const mpq_class& coeff) {
  MultivariatePoly p(m.ambient());
  p.add_term(m, coeff);
  return p;
}

MultivariatePoly MultivariatePoly::variable(int ambient, int var) {
  return from_monomial(Monomial::variable(ambient, var));
}

MultivariatePoly MultivariatePoly::variable_sum(int ambient) {
  MultivariatePoly p(ambient);
  for (int v = 1; v <= ambient; ++v) p.add_term(Monomial::variable(ambient, v), 1);
  return p;
}

int MultivariatePoly::degree() const {
  if (terms_.empty()) return -1;
  // Keys ascend in graded revlex, so the last key has maximal degree.
  return terms_.rbegin()->first.degree();
}

bool MultivariatePoly::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out != nullptr) *degree_out = -1;
    return true;
  }
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  if (degree_out != nullptr) *degree_out = d;
  return true;
}

mpq_class MultivariatePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::pair<Monomial, mpq_class> MultivariatePoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void MultivariatePoly::add_term(const Monomial& m, const mpq_class& coeff) {
  if (m.ambient() != ambient_) throw std::invalid_argument("term ambient mismatch");
  // Callers may hand over a two-argument mpq_class, which GMP keeps exactly
  // as written; equality and accumulation need the canonical form.
  mpq_class value = coeff;
  value.canonicalize();
  if (value == 0) return;
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(value));
  } else {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& other) {
  if (other.ambient_ != ambient_) throw std::invalid_argument("polynomial ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& other) {
  if (other.ambient_ != ambient_) throw std::invalid_argument("polynomial ambient mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultivariatePoly MultivariatePoly::operator-() const {
  MultivariatePoly result(ambient_);
  for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
  return result;
}

MultivariatePoly operator+(MultivariatePoly lhs, const MultivariatePoly& rhs) {
  lhs += rhs;
  return lhs;
}

MultivariatePoly operator-(MultivariatePoly lhs, const MultivariatePoly& rhs) {
  lhs -= rhs;
  return lhs;
}

MultivariatePoly operator*(const MultivariatePoly& lhs, const MultivariatePoly& rhs) {
  if (lhs.ambient() != rhs.ambient()) throw std::invalid_argument("polynomial ambient mismatch");
  MultivariatePoly result(lhs.ambient());
  for (const auto& [ma, ca] : lhs.terms()) {
    for (const auto& [mb, cb] : rhs.terms()) {
      result.add_term(ma.times(mb), ca * cb);
    }
  }
  return result;
}

MultivariatePoly operator*(const mpq_class& scalar, const MultivariatePoly& poly) {
  MultivariatePoly result(poly.ambient());
  if (scalar == 0) return result;
  for (const auto& [m, c] : poly.terms()) result.add_term(m, scalar * c);
  return result;
}

MultivariatePoly pow(const MultivariatePoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  MultivariatePoly result = MultivariatePoly::constant(base.ambient(), 1);
  for (int k = 0; k < exponent; ++k) result = result * base;
  return result;
}

DivisionResult divide(const MultivariatePoly& dividend, const MultivariatePoly& divisor) {
  if (dividend.ambient() != divisor.ambient()) {
    throw std::invalid_argument("polynomial ambient mismatch");
  }
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto [lead_mono, lead_coeff] = divisor.leading_term();
  DivisionResult out{MultivariatePoly(dividend.ambient()), MultivariatePoly(dividend.ambient())};
  MultivariatePoly work = dividend;
  while (!work.is_zero()) {
    const auto [m, c] = work.leading_term();
    auto factor = m.divided_by(lead_mono);
    if (factor.has_value()) {
      const mpq_class q = c / lead_coeff;
      out.quotient.add_term(*factor, q);
      work -= q * (MultivariatePoly::from_monomial(*factor) * divisor);
    } else {
      out.remainder.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return out;
}

MultivariatePoly exact_divide(const MultivariatePoly& dividend, const MultivariatePoly& divisor) {
  DivisionResult result = divide(dividend, divisor);
  if (!result.remainder.is_zero()) {
    throw std::domain_error("exact division left a nonzero remainder");
  }
  return result.quotient;
}

MultivariatePoly substitute(const MultivariatePoly& poly,
                            const std::vector<MultivariatePoly>& images) {
  if (static_cast<int>(images.size()) != poly.ambient()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  const int target = images.empty() ? 1 : images.front().ambient();
  for (const auto& image : images) {
    if (image.ambient() != target) throw std::invalid_argument("image ambient mismatch");
  }
  MultivariatePoly result(target);
  for (const auto& [m, c] : poly.terms()) {
    MultivariatePoly term = MultivariatePoly::constant(target, c);
    for (int v = 0; v < poly.ambient(); ++v) {
      if (m.exponent(v) > 0) term = term * pow(images[v], m.exponent(v));
    }
    result += term;
  }
  return result;
}

MultivariatePoly reduce_mod(const MultivariatePoly& poly, const MonomialIdeal& ideal) {
  if (poly.ambient() != ideal.ambient()) throw std::invalid_argument("ambient mismatch");
  MultivariatePoly result(poly.ambient());
  for (const auto& [m, c] : poly.terms()) {
    if (!ideal.contains(m)) result.add_term(m, c);
  }
  return result;
}

std::string to_text(const MultivariatePoly& poly, bool dual_variables) {
  if (poly.is_zero()) return "0";
  const char* name = dual_variables ? "X" : "x";
  std::ostringstream out;
  bool first = true;
  // Descending revlex, leading term first.
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = magnitude == 1;
    if (!unit || m.is_one()) out << magnitude.get_str();
    bool printed_var = false;
    for (int v = 0; v < m.ambient(); ++v) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (!unit || printed_var) out << "*";
      out << name << (v + 1);
      if (e > 1) out << "^" << e;
      printed_var = true;
    }
  }
  return out.str();
}

}  // namespace lefschetz
