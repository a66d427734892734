#include "lefschetz/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

[[noreturn]] void bad_ideal(const std::string& what) {
  throw std::invalid_argument("ideal: " + what);
}

void require_family_indices(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) bad_ideal("need 1 <= i < j <= n");
}

std::vector<Monomial> minimalize(int ambient, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.ambient() != ambient) bad_ideal("generator ambient mismatch");
  // Sort ascending by degree so that any divisor of a generator appears
  // earlier; a generator is kept iff no kept generator divides it.
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) minimal.push_back(g);
  }
  // Canonical presentation: ascending degree, descending revlex inside.
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_greater(a, b);
  });
  return minimal;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int ambient_n, std::vector<Monomial> generators)
    : ambient_n_(ambient_n) {
  if (ambient_n < 1) bad_ideal("ambient must be positive");
  generators_ = minimalize(ambient_n, std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_artinian() const {
  for (int var = 1; var <= ambient_n_; ++var) {
    bool covered = std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) {
      int pure_var = 0;
      return g.is_pure_power(&pure_var) && pure_var == var;
    });
    if (!covered) return false;
  }
  return true;
}

bool MonomialIdeal::is_proper() const {
  return std::none_of(generators_.begin(), generators_.end(),
                      [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::is_generator(const Monomial& m) const {
  return std::find(generators_.begin(), generators_.end(), m) != generators_.end();
}

MonomialIdeal MonomialIdeal::with_extra_generator(const Monomial& m) const {
  std::vector<Monomial> gens = generators_;
  gens.push_back(m);
  return MonomialIdeal(ambient_n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::without_generator(const Monomial& m) const {
  std::vector<Monomial> gens = generators_;
  auto it = std::find(gens.begin(), gens.end(), m);
  if (it == gens.end()) bad_ideal("cannot remove " + to_text(m) + ": not a minimal generator");
  gens.erase(it);
  return MonomialIdeal(ambient_n_, std::move(gens));
}

std::vector<Monomial> rlex_generators(int n, int i, int j) {
  require_family_indices(n, i, j);
  const Monomial pivot = Monomial::variable(n, i).times(Monomial::variable(n, j));
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(n, 2, /*squarefree_only=*/true)) {
    if (!revlex_less(m, pivot)) out.push_back(m);
  }
  return out;  // monomials_of_degree already emits descending revlex
}

MonomialIdeal family_ideal(int n, int i, int j) {
  require_family_indices(n, i, j);
  std::vector<Monomial> gens;
  for (int var = 1; var <= n; ++var) gens.push_back(Monomial::pure_power(n, var, 2));
  for (const Monomial& m : rlex_generators(n, i, j)) gens.push_back(m);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal mu_to_family(int n, long mu) {
  if (n < 1) bad_ideal("ambient must be positive");
  const long top = binomial(n + 1, 2);
  if (mu < n || mu > top)
    bad_ideal("mu = " + std::to_string(mu) + " outside [n, C(n+1,2)] = [" + std::to_string(n) +
              ", " + std::to_string(top) + "]");
  std::vector<Monomial> squares;
  for (int var = 1; var <= n; ++var) squares.push_back(Monomial::pure_power(n, var, 2));
  if (mu == n) return MonomialIdeal(n, std::move(squares));
  // mu = n + C(j-1,2) + i with 1 <= i < j; the counts are consecutive as
  // (i,j) walks down the revlex order, so (i,j) is determined uniquely.
  const long extra = mu - n;
  for (int j = 2; j <= n; ++j) {
    const long base = binomial(j - 1, 2);
    if (extra > base && extra <= base + (j - 1))
      return family_ideal(n, static_cast<int>(extra - base), j);
  }
  bad_ideal("unreachable mu decomposition");
}

SimpleGraph graph_of_rlex(int n, int i, int j) {
  require_family_indices(n, i, j);
  SimpleGraph g;
  g.vertex_count = n;
  for (const Monomial& m : rlex_generators(n, i, j)) {
    int a = 0, b = 0;
    for (int k = 0; k < n; ++k) {
      if (m.exponent(k) == 1) (a == 0 ? a : b) = k + 1;
    }
    g.edges.emplace(a, b);
  }
  return g;
}

std::vector<Monomial> edge_ideal_generators(const SimpleGraph& g) {
  std::vector<Monomial> out;
  for (const auto& [a, b] : g.edges) {
    if (a == b || a < 1 || b < 1 || a > g.vertex_count || b > g.vertex_count)
      bad_ideal("graph edge out of range or a loop");
    out.push_back(Monomial::variable(g.vertex_count, a).times(Monomial::variable(g.vertex_count, b)));
  }
  std::sort(out.begin(), out.end(), RevlexDescending{});
  return out;
}

MonomialIdeal power_family(int n, int d) {
  if (n < 3 || d < 3) bad_ideal("power_family needs n >= 3 and d >= 3");
  std::vector<Monomial> gens;
  for (int k = 0; k <= d; ++k) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    exps[0] = d - k;
    exps[1] = k;
    gens.emplace_back(std::move(exps));
  }
  for (int var = 3; var <= n; ++var) gens.push_back(Monomial::pure_power(n, var, d));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal sec5_cubic8() {
  const int n = 8;
  std::vector<Monomial> gens;
  for (int var = 1; var <= n; ++var) gens.push_back(Monomial::pure_power(n, var, 3));
  for (const char* text : {"x1^2*x2", "x1*x2^2", "x1^2*x3", "x1*x2*x3", "x2^2*x3", "x1*x3^2"})
    gens.push_back(parse_monomial(text, n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal sec5_J() {
  const int n = 3;
  std::vector<Monomial> gens;
  gens.push_back(Monomial::pure_power(n, 1, 8));
  gens.push_back(Monomial::pure_power(n, 2, 8));
  gens.push_back(Monomial::pure_power(n, 3, 8));
  gens.push_back(parse_monomial("x1^4*x2^2*x3^2", n));
  gens.push_back(parse_monomial("x1^3*x2^3*x3^2", n));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal special_ideal(SpecialIdealKind kind, int n, int d) {
  switch (kind) {
    case SpecialIdealKind::power_family:
      return power_family(n, d);
    case SpecialIdealKind::sec5_cubic8:
      return sec5_cubic8();
    case SpecialIdealKind::sec5_J:
      return sec5_J();
  }
  bad_ideal("unknown special ideal kind");
}

MonomialIdeal adjoin_power_variable(const MonomialIdeal& ideal, int e) {
  if (e < 1) bad_ideal("adjoined power must be >= 1");
  const int n = ideal.ambient();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> exps = g.exponents();
    exps.push_back(0);
    gens.emplace_back(std::move(exps));
  }
  gens.push_back(Monomial::pure_power(n + 1, n + 1, e));
  return MonomialIdeal(n + 1, std::move(gens));
}

std::string to_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n=" << ideal.ambient() << ";";
  bool first = true;
  for (const Monomial& g : ideal.generators()) {
    out << (first ? " " : ", ") << to_text(g);
    first = false;
  }
  return out.str();
}

MonomialIdeal parse_ideal(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) bad_ideal("expected 'n=<count>; <generators>'");
  std::string head(text.substr(0, semi));
  head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return c == ' ' || c == '\t'; }),
             head.end());
  if (head.rfind("n=", 0) != 0) bad_ideal("expected 'n=<count>' before ';'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(head.substr(2), &used);
    if (used != head.size() - 2) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    bad_ideal("bad variable count in '" + head + "'");
  }
  std::vector<Monomial> gens;
  std::string token;
  std::istringstream in{std::string(text.substr(semi + 1))};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (gens.empty() && in.eof()) break;  // "n=3;" with no generators
      bad_ideal("empty generator entry");
    }
    const auto last = token.find_last_not_of(" \t");
    gens.push_back(parse_monomial(token.substr(first, last - first + 1), n));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int n, int max_power,
                                    int extra_generators) {
  if (n < 1 || max_power < 1 || extra_generators < 0) {
    throw std::invalid_argument("bad random ideal parameters");
  }
  std::uniform_int_distribution<int> power(1, max_power);
  std::vector<Monomial> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(Monomial::pure_power(n, v, power(rng)));
  if (max_power >= 2) {
    std::uniform_int_distribution<int> extra_degree(2, max_power);
    std::uniform_int_distribution<int> variable(0, n - 1);
    for (int g = 0; g < extra_generators; ++g) {
      std::vector<int> exponents(n, 0);
      const int degree = extra_degree(rng);
      for (int step = 0; step < degree; ++step) ++exponents[variable(rng)];
      gens.emplace_back(exponents);
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace lefschetz
