#pragma once

#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// A monomial ideal, stored as its unique minimal generating set sorted in
/// canonical order (ascending degree, descending revlex within a degree).
/// Construction minimalizes whatever generator list it is given.
class MonomialIdeal {
public:
  MonomialIdeal(int ambient_n, std::vector<Monomial> generators);

  int ambient() const { return ambient_n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// Membership: m lies in the ideal iff some generator divides it.
  bool contains(const Monomial& m) const;
  /// Artinian iff every variable has a pure-power generator.
  bool is_artinian() const;
  /// Proper iff the unit monomial is not a generator.
  bool is_proper() const;
  bool is_generator(const Monomial& m) const;

  MonomialIdeal with_extra_generator(const Monomial& m) const;
  /// Removes a minimal generator; throws if m is not one.
  MonomialIdeal without_generator(const Monomial& m) const;

  bool operator==(const MonomialIdeal& other) const {
    return ambient_n_ == other.ambient_n_ && generators_ == other.generators_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  int ambient_n_ = 0;
  std::vector<Monomial> generators_;
};

/// Simple graph on vertices 1..vertex_count with normalized edges (a < b).
struct SimpleGraph {
  int vertex_count = 0;
  std::set<std::pair<int, int>> edges;
};

/// All squarefree quadratic monomials >= x_i x_j in revlex, descending.
/// Requires 1 <= i < j <= n; the count is C(j-1,2) + i.
std::vector<Monomial> rlex_generators(int n, int i, int j);

/// The two-parameter family (x_1^2,...,x_n^2) + rlex_generators(n,i,j).
MonomialIdeal family_ideal(int n, int i, int j);

/// Member of the family (or the square complete intersection when mu = n)
/// with exactly mu minimal generators.  Requires n <= mu <= C(n+1,2).
MonomialIdeal mu_to_family(int n, long mu);

/// The graph whose edge ideal is rlex_generators(n,i,j): K_{j-1} plus vertex
/// j joined to vertices 1..i; vertices j+1..n isolated.
SimpleGraph graph_of_rlex(int n, int i, int j);

/// Edge monomials x_a x_b of a graph, descending revlex (for round-trips).
std::vector<Monomial> edge_ideal_generators(const SimpleGraph& g);

/// (x_1,x_2)^d + (x_3^d,...,x_n^d); requires n >= 3, d >= 3.
MonomialIdeal power_family(int n, int d);
/// Cubes of eight variables plus six extra cubics (see the fixture table).
MonomialIdeal sec5_cubic8();
/// (x1^8, x2^8, x3^8, x1^4 x2^2 x3^2, x1^3 x2^3 x3^2) in three variables.
MonomialIdeal sec5_J();

enum class SpecialIdealKind { power_family, sec5_cubic8, sec5_J };
/// Dispatcher over the named constructions; n, d only read for power_family.
MonomialIdeal special_ideal(SpecialIdealKind kind, int n = 0, int d = 0);

/// Generators of I viewed in n+1 variables, plus x_{n+1}^e; realizes the
/// tensor product with k[y]/(y^e).  Requires e >= 1.
MonomialIdeal adjoin_power_variable(const MonomialIdeal& ideal, int e);

/// A seeded random artinian monomial ideal: one pure power x_k^{e_k} per
/// variable with e_k in [1, max_power], plus extra_generators random
/// monomials of degree in [2, max_power] (redundant picks are minimalized
/// away).  Deterministic for a given generator state.
MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int n, int max_power,
                                    int extra_generators);

/// Text format: "n=4; x1^2, x2^2, x1*x2".  Round-trips through parse_ideal.
std::string to_text(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(std::string_view text);

}  // namespace lefschetz
