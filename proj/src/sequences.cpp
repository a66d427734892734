#include "lefschetz/sequences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

const mpz_class kZero = 0;

void normalize(std::vector<mpz_class>& v) {
  std::size_t first = 0;
  while (first < v.size() && v[first] == 0) ++first;
  std::size_t last = v.size();
  while (last > first && v[last - 1] == 0) --last;
  v = std::vector<mpz_class>(v.begin() + static_cast<std::ptrdiff_t>(first),
                             v.begin() + static_cast<std::ptrdiff_t>(last));
}

}  // namespace

IntSequence::IntSequence(std::initializer_list<long> values) {
  values_.reserve(values.size());
  for (long v : values) values_.emplace_back(v);
  normalize(values_);
}

IntSequence::IntSequence(std::vector<mpz_class> values) : values_(std::move(values)) {
  normalize(values_);
}

const mpz_class& IntSequence::at(long k) const {
  if (k < 0 || k >= length()) return kZero;
  return values_[static_cast<std::size_t>(k)];
}

std::string to_text(const IntSequence& s) {
  std::ostringstream out;
  out << '(';
  for (long k = 0; k < s.length(); ++k) {
    if (k) out << ", ";
    out << s.at(k);
  }
  out << ')';
  return out.str();
}

IntSequence parse_sequence(const std::string& text) {
  std::vector<mpz_class> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t()");
    if (first == std::string::npos) throw std::invalid_argument("sequence: empty entry");
    const auto last = token.find_last_not_of(" \t()");
    values.emplace_back(token.substr(first, last - first + 1));
  }
  return IntSequence(std::move(values));
}

IntSequence closed_form_hs(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("closed_form_hs: need 1 <= i < j <= n");
  IntSequence quadratic({1, j, static_cast<long>(j) - i - 1});
  for (int k = 0; k < n - j; ++k) quadratic = shift_and_add(quadratic);
  return quadratic;
}

long quadratic_discriminant(int i, int j) {
  return static_cast<long>(j) * j - 4 * (static_cast<long>(j) - i - 1);
}

bool is_mid_heavy(const IntSequence& s) {
  // Quantify over pairs p < q in the zero-padded extension; restricting to
  // p in [-1, len-1] and q in [0, len] covers every pair where either side
  // of an implication can be nonzero.
  const long len = s.length();
  for (long p = -1; p < len; ++p) {
    for (long q = std::max(p + 1, 0l); q <= len; ++q) {
      const mpz_class& sp = s.at(p);
      const mpz_class& sq = s.at(q);
      const mpz_class& sp1 = s.at(p - 1);
      const mpz_class& sq1 = s.at(q + 1);
      if (sp <= sq && !(sp1 <= sq1)) return false;
      if (sp >= sq && !(sp1 >= sq1)) return false;
    }
  }
  return true;
}

bool is_class_H(const IntSequence& s) {
  if (s.is_zero() || s.at(0) < 1)
    throw std::invalid_argument("is_class_H: sequence must start with a positive entry");
  const long D = s.length() - 1;
  for (long k = 0; k <= D; ++k)
    if (s.at(k) <= 0) throw std::invalid_argument("is_class_H: support must be gap-free");
  bool chain1 = true;
  bool chain2 = true;
  for (long k = 1; k <= D / 2; ++k) {
    if (!(s.at(k - 1) <= s.at(D - k) && s.at(D - k) <= s.at(k))) chain1 = false;
    if (!(s.at(D - k + 1) <= s.at(k) && s.at(k) <= s.at(D - k))) chain2 = false;
  }
  return chain1 || chain2;
}

IntSequence shift_and_add(const IntSequence& s) {
  std::vector<mpz_class> out(static_cast<std::size_t>(s.length()) + 1);
  for (long k = 0; k <= s.length(); ++k) out[static_cast<std::size_t>(k)] = s.at(k) + s.at(k - 1);
  return IntSequence(std::move(out));
}

bool is_unimodal(const IntSequence& s) {
  long k = 1;
  while (k < s.length() && s.at(k - 1) <= s.at(k)) ++k;
  while (k < s.length() && s.at(k - 1) >= s.at(k)) ++k;
  return k >= s.length();
}

bool is_log_concave(const IntSequence& s) {
  for (long k = 1; k + 1 < s.length(); ++k)
    if (s.at(k) * s.at(k) < s.at(k - 1) * s.at(k + 1)) return false;
  return true;
}

bool is_symmetric(const IntSequence& s) {
  const long D = s.length() - 1;
  for (long k = 0; k <= D / 2; ++k)
    if (s.at(k) != s.at(D - k)) return false;
  return true;
}

ShapeReport shape_report(const IntSequence& s) {
  ShapeReport report;
  report.unimodal = is_unimodal(s);
  report.log_concave = is_log_concave(s);
  report.symmetric = is_symmetric(s);
  report.mid_heavy = is_mid_heavy(s);
  bool hilbert_type = !s.is_zero() && s.at(0) >= 1;
  for (long k = 0; k < s.length() && hilbert_type; ++k)
    if (s.at(k) <= 0) hilbert_type = false;
  report.class_H = hilbert_type && is_class_H(s);
  return report;
}

}  // namespace lefschetz
