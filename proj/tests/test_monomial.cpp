#include <doctest.h>

#include <algorithm>
#include <set>

#include "lefschetz/monomial.hpp"

using namespace lefschetz;

namespace {

// Independent revlex oracle: a > b iff deg a > deg b, or degrees tie and the
// last index where the exponents differ has a smaller exponent in a.
bool oracle_revlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int v = a.ambient() - 1; v >= 0; --v) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v);
  }
  return false;
}

long oracle_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long value = 1;
  for (int s = 1; s <= k; ++s) value = value * (n - k + s) / s;
  return value;
}

}  // namespace

TEST_CASE("monomial construction and accessors") {
  const Monomial m = parse_monomial("x1^2*x3", 4);
  CHECK(m.ambient() == 4);
  CHECK(m.degree() == 3);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(1) == 0);
  CHECK(m.exponent(2) == 1);
  CHECK(to_text(m) == "x1^2*x3");
  CHECK(to_text(Monomial::one(3)) == "1");
  CHECK(Monomial::one(3).is_one());
  int var = 0;
  CHECK(Monomial::pure_power(5, 4, 7).is_pure_power(&var));
  CHECK(var == 4);
  CHECK_FALSE(parse_monomial("x1*x2", 2).is_pure_power());
  CHECK(parse_monomial("x1*x2", 2).is_squarefree());
  CHECK_FALSE(m.is_squarefree());
}

TEST_CASE("monomial parse accepts repeated variables and rejects junk") {
  CHECK(parse_monomial("x1*x1*x2", 2) == parse_monomial("x1^2*x2", 2));
  CHECK(parse_monomial("1", 3) == Monomial::one(3));
  CHECK_THROWS_AS(parse_monomial("x0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("y1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1^", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("", 3), std::invalid_argument);
}

TEST_CASE("multiplication and division") {
  const Monomial a = parse_monomial("x1^2*x2", 3);
  const Monomial b = parse_monomial("x2*x3^2", 3);
  CHECK(to_text(a.times(b)) == "x1^2*x2^2*x3^2");
  CHECK(a.times_var(2) == parse_monomial("x1^2*x2*x3", 3));
  CHECK(a.times(b).divided_by(b).value() == a);
  CHECK_FALSE(a.divided_by(b).has_value());
  CHECK(divides(a, a.times(b)));
  CHECK_FALSE(divides(b, a));
}

TEST_CASE("revlex order agrees with an independent oracle") {
  const auto all = monomials_of_degree(4, 3, false);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const Ordering c = revlex_compare(a, b);
      if (a == b) {
        CHECK(c == Ordering::equal);
      } else {
        CHECK((c == Ordering::greater) == oracle_revlex_greater(a, b));
        CHECK((c == Ordering::less) == oracle_revlex_greater(b, a));
      }
    }
  }
  // Degree dominates.
  CHECK(revlex_greater(parse_monomial("x3^3", 3), parse_monomial("x1^2", 3)));
}

TEST_CASE("revlex on the paper's standard examples") {
  // In three variables: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2.
  const char* expected[] = {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"};
  const auto quadrics = monomials_of_degree(3, 2, false);
  REQUIRE(quadrics.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(to_text(quadrics[k]) == expected[k]);
  for (std::size_t k = 0; k + 1 < 6; ++k) CHECK(revlex_greater(quadrics[k], quadrics[k + 1]));
}

TEST_CASE("monomials_of_degree counts and order") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 5; ++d) {
      const auto all = monomials_of_degree(n, d, false);
      CHECK(static_cast<long>(all.size()) == oracle_binomial(n + d - 1, d));
      const auto squarefree = monomials_of_degree(n, d, true);
      CHECK(static_cast<long>(squarefree.size()) == oracle_binomial(n, d));
      // Strictly descending revlex, no duplicates.
      for (std::size_t k = 0; k + 1 < all.size(); ++k) {
        CHECK(revlex_greater(all[k], all[k + 1]));
      }
      for (const auto& m : squarefree) CHECK(m.is_squarefree());
    }
  }
}

TEST_CASE("binomial helper") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle_binomial(n, k));
  }
}

TEST_CASE("canonical comparator is a strict weak order consistent with revlex") {
  auto all = monomials_of_degree(3, 4, false);
  std::sort(all.begin(), all.end(), CanonicalLess{});
  for (std::size_t k = 0; k + 1 < all.size(); ++k) {
    CHECK(revlex_greater(all[k + 1], all[k]));
  }
  std::set<Monomial, CanonicalLess> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
}

TEST_CASE("monomial hash treats equal monomials equally") {
  const MonomialHash hash;
  const Monomial a = parse_monomial("x1^2*x2", 3);
  const Monomial b = parse_monomial("x1*x1*x2", 3);
  CHECK(a == b);
  CHECK(hash(a) == hash(b));
}
