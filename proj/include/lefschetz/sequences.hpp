#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace lefschetz {

/// A finitely supported integer sequence, normalized so that both the first
/// and the last stored entry are nonzero (the zero sequence stores nothing).
/// Reads outside the stored window return 0, negative indices included.
class IntSequence {
public:
  IntSequence() = default;
  IntSequence(std::initializer_list<long> values);
  explicit IntSequence(std::vector<mpz_class> values);

  /// Number of stored entries after normalization; 0 for the zero sequence.
  long length() const { return static_cast<long>(values_.size()); }
  bool is_zero() const { return values_.empty(); }
  /// Entry at index k, with 0 outside the stored window.
  const mpz_class& at(long k) const;
  const std::vector<mpz_class>& entries() const { return values_; }

  bool operator==(const IntSequence& other) const { return values_ == other.values_; }
  bool operator!=(const IntSequence& other) const { return !(*this == other); }

private:
  std::vector<mpz_class> values_;
};

std::string to_text(const IntSequence& s);
/// Parses a comma-separated list such as "1, 4, 1".
IntSequence parse_sequence(const std::string& text);

/// Coefficients of (1+t)^(n-j) * (1 + j t + (j-i-1) t^2), the closed-form
/// Hilbert series of the two-parameter quadratic quotient family.
IntSequence closed_form_hs(int n, int i, int j);

/// Discriminant j^2 - 4(j - i - 1) of the quadratic factor above.
long quadratic_discriminant(int i, int j);

/// Mid-heavy: in the zero-padded extension, every pair of indices p < q
/// satisfies both implications
///   s_p <= s_q  =>  s_{p-1} <= s_{q+1}   and
///   s_p >= s_q  =>  s_{p-1} >= s_{q+1},
/// i.e. comparisons propagate outward.  Quantifying over p in [-1, len-1]
/// and q in [0, len] suffices, since beyond that both sides are zero.  The
/// zero sequence is vacuously mid-heavy.
bool is_mid_heavy(const IntSequence& s);

/// Class-H membership for a Hilbert-type sequence h_0..h_D (h_0 >= 1, no
/// internal zeros): true iff one of the two chains of inequalities holds for
/// every 1 <= i <= floor(D/2):
///   (1)  h_{i-1} <= h_{D-i} <= h_i, or
///   (2)  h_{D-i+1} <= h_i <= h_{D-i}.
/// Throws std::invalid_argument when h_0 < 1 or the support has gaps.
bool is_class_H(const IntSequence& s);

/// Multiply by (1+t): out(k) = s(k) + s(k-1).
IntSequence shift_and_add(const IntSequence& s);

struct ShapeReport {
  bool unimodal = false;
  bool log_concave = false;
  bool symmetric = false;
  bool mid_heavy = false;
  bool class_H = false;
};

ShapeReport shape_report(const IntSequence& s);

bool is_unimodal(const IntSequence& s);
bool is_log_concave(const IntSequence& s);
bool is_symmetric(const IntSequence& s);

}  // namespace lefschetz
