#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

/// A monomial in a fixed polynomial ring k[x_1..x_n], stored as its exponent
/// vector.  Immutable after construction; the ambient variable count n is
/// carried along so that mixed-ring operations fail loudly.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  /// The unit monomial 1 in n variables.
  static Monomial one(int ambient);
  /// x_var, with var counted from 1.
  static Monomial variable(int ambient, int var);
  /// x_var^e, with var counted from 1.
  static Monomial pure_power(int ambient, int var, int e);

  int ambient() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  /// Exponent of x_{k+1} (0-based slot access).
  int exponent(int k) const { return exponents_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  /// True when exactly one variable has a nonzero exponent; reports which
  /// (1-based) through var_out if requested.
  bool is_pure_power(int* var_out = nullptr) const;

  Monomial times(const Monomial& other) const;
  /// Multiply by x_{k+1} (0-based slot).
  Monomial times_var(int k) const;
  /// this / other when other | this, otherwise nullopt.
  std::optional<Monomial> divided_by(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

enum class Ordering { less, equal, greater };

/// Graded reverse lexicographic comparison: lower total degree compares
/// smaller; within a degree, a > b iff the last nonzero entry of the
/// exponent difference a - b is negative.
Ordering revlex_compare(const Monomial& a, const Monomial& b);
bool revlex_greater(const Monomial& a, const Monomial& b);
bool revlex_less(const Monomial& a, const Monomial& b);

/// Strict weak order for canonical ascending containers (degree, then revlex).
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) == Ordering::less;
  }
};

/// Comparator that sorts ranges into descending revlex order.
struct RevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) == Ordering::greater;
  }
};

bool divides(const Monomial& a, const Monomial& b);

/// All degree-d monomials in n variables, descending revlex.  With
/// squarefree_only set, restricts to squarefree ones.
std::vector<Monomial> monomials_of_degree(int n, int d, bool squarefree_only = false);

/// Renders as "x1^2*x3"; the unit monomial renders as "1".
std::string to_text(const Monomial& m);
/// Parses the to_text format (also accepts "x1" for exponent 1).
Monomial parse_monomial(std::string_view text, int ambient);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// n choose k as a long; callers keep arguments small enough not to overflow.
long binomial(int n, int k);

}  // namespace lefschetz
