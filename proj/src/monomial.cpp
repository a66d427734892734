#include "lefschetz/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lefschetz {

namespace {

[[noreturn]] void bad_monomial(const std::string& what) {
  throw std::invalid_argument("monomial: " + what);
}

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    bad_monomial("mixed ambient variable counts " + std::to_string(a.ambient()) + " and " +
                 std::to_string(b.ambient()));
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0) bad_monomial("negative exponent");
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(int ambient) {
  if (ambient < 1) bad_monomial("ambient must be positive");
  return Monomial(std::vector<int>(static_cast<std::size_t>(ambient), 0));
}

Monomial Monomial::variable(int ambient, int var) { return pure_power(ambient, var, 1); }

Monomial Monomial::pure_power(int ambient, int var, int e) {
  if (var < 1 || var > ambient) bad_monomial("variable index out of range");
  std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
  exps[static_cast<std::size_t>(var - 1)] = e;
  return Monomial(std::move(exps));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool Monomial::is_pure_power(int* var_out) const {
  int hit = 0;
  for (int k = 0; k < ambient(); ++k) {
    if (exponents_[static_cast<std::size_t>(k)] > 0) {
      if (hit != 0) return false;
      hit = k + 1;
    }
  }
  if (hit == 0) return false;
  if (var_out) *var_out = hit;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<int> exps(exponents_);
  for (std::size_t k = 0; k < exps.size(); ++k) exps[k] += other.exponents_[k];
  return Monomial(std::move(exps));
}

Monomial Monomial::times_var(int k) const {
  std::vector<int> exps(exponents_);
  exps.at(static_cast<std::size_t>(k)) += 1;
  return Monomial(std::move(exps));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<int> exps(exponents_);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    exps[k] -= other.exponents_[k];
    if (exps[k] < 0) return std::nullopt;
  }
  return Monomial(std::move(exps));
}

Ordering revlex_compare(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? Ordering::less : Ordering::greater;
  // Same degree: scan the difference from the last variable backwards.  The
  // first (i.e. rightmost) nonzero difference decides: negative means a > b.
  for (int k = a.ambient() - 1; k >= 0; --k) {
    const int diff = a.exponent(k) - b.exponent(k);
    if (diff != 0) return diff < 0 ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

bool revlex_greater(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == Ordering::greater;
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == Ordering::less;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (int k = 0; k < a.ambient(); ++k)
    if (a.exponent(k) > b.exponent(k)) return false;
  return true;
}

namespace {

void enumerate_rec(int slot, int remaining, bool squarefree_only, std::vector<int>& current,
                   std::vector<Monomial>& out) {
  const int n = static_cast<int>(current.size());
  if (slot == n - 1) {
    if (!squarefree_only || remaining <= 1) {
      current[static_cast<std::size_t>(slot)] = remaining;
      out.emplace_back(current);
    }
    return;
  }
  const int cap = squarefree_only ? std::min(remaining, 1) : remaining;
  for (int e = cap; e >= 0; --e) {
    current[static_cast<std::size_t>(slot)] = e;
    enumerate_rec(slot + 1, remaining - e, squarefree_only, current, out);
  }
  current[static_cast<std::size_t>(slot)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d, bool squarefree_only) {
  if (n < 1) bad_monomial("ambient must be positive");
  if (d < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  enumerate_rec(0, d, squarefree_only, current, out);
  // The recursion emits lexicographically by exponent vector (front-loaded
  // first), which is exactly descending revlex within a degree; sorting is
  // still done once here to keep the contract independent of the recursion.
  std::sort(out.begin(), out.end(), RevlexDescending{});
  return out;
}

std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int k = 0; k < m.ambient(); ++k) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(k + 1);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) bad_monomial("expected a number in '" + std::string(s) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
  if (ec != std::errc{}) bad_monomial("number out of range in '" + std::string(s) + "'");
  return value;
}

void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int ambient) {
  std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) bad_monomial("empty monomial text");
  if (text[pos] == '1' && pos + 1 == text.size()) return Monomial(exps);
  bool first = true;
  while (pos < text.size()) {
    if (!first) {
      if (text[pos] != '*') bad_monomial("expected '*' in '" + std::string(text) + "'");
      ++pos;
      skip_space(text, pos);
    }
    first = false;
    if (pos >= text.size() || text[pos] != 'x')
      bad_monomial("expected a variable in '" + std::string(text) + "'");
    ++pos;
    const int var = parse_int(text, pos);
    if (var < 1 || var > ambient)
      bad_monomial("variable x" + std::to_string(var) + " outside ambient " +
                   std::to_string(ambient));
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_int(text, pos);
    }
    exps[static_cast<std::size_t>(var - 1)] += e;
    skip_space(text, pos);
  }
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = static_cast<std::size_t>(m.ambient()) * 1469598103934665603ull;
  for (int k = 0; k < m.ambient(); ++k) {
    h ^= static_cast<std::size_t>(m.exponent(k)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long result = 1;
  for (int t = 1; t <= k; ++t) result = result * (n - k + t) / t;
  return result;
}

}  // namespace lefschetz
