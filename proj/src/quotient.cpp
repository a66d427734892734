#include "lefschetz/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lefschetz {

namespace {

void require_split_shape(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  if (n < 2)
    throw std::invalid_argument("basis_split: need at least two variables");
  const Monomial last_square = Monomial::pure_power(n, n, 2);
  for (const Monomial& g : ideal.generators()) {
    if (g.exponent(n - 1) > 0 && g != last_square)
      throw std::invalid_argument(
          "basis_split: generator " + to_text(g) +
          " involves the last variable but is not its square");
  }
  if (!ideal.is_generator(last_square))
    throw std::invalid_argument("basis_split: x_n^2 must be a minimal generator");
}

}  // namespace

GradedQuotient::GradedQuotient(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_proper())
    throw std::invalid_argument("quotient: ideal contains a unit");
  if (!ideal_.is_artinian())
    throw std::invalid_argument("quotient: ideal is not artinian");
  const int n = ideal_.ambient();
  bases_.push_back({Monomial::one(n)});
  // Standard monomials are closed under division, so every element of
  // B_{k+1} is x_v times an element of B_k; extend degree by degree until a
  // level comes up empty (for artinian monomial ideals nothing reappears).
  while (true) {
    const std::vector<Monomial>& previous = bases_.back();
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> next;
    for (const Monomial& m : previous) {
      for (int k = 0; k < n; ++k) {
        Monomial candidate = m.times_var(k);
        if (seen.count(candidate)) continue;
        seen.insert(candidate);
        if (!ideal_.contains(candidate)) next.push_back(std::move(candidate));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), RevlexDescending{});
    bases_.push_back(std::move(next));
  }
  std::vector<mpz_class> counts;
  counts.reserve(bases_.size());
  for (const auto& basis : bases_) counts.emplace_back(static_cast<long>(basis.size()));
  hilbert_ = IntSequence(std::move(counts));
}

const std::vector<Monomial>& GradedQuotient::basis(int k) const {
  static const std::vector<Monomial> empty;
  if (k < 0 || k >= static_cast<int>(bases_.size())) return empty;
  return bases_[static_cast<std::size_t>(k)];
}

long GradedQuotient::total_dim() const {
  long total = 0;
  for (const auto& basis : bases_) total += static_cast<long>(basis.size());
  return total;
}

GradedQuotient build_quotient(MonomialIdeal ideal) { return GradedQuotient(std::move(ideal)); }

std::pair<std::vector<Monomial>, std::vector<Monomial>> basis_split(const GradedQuotient& q,
                                                                    int k) {
  require_split_shape(q.ideal());
  const int last = q.ambient() - 1;
  std::pair<std::vector<Monomial>, std::vector<Monomial>> parts;
  for (const Monomial& m : q.basis(k)) {
    (m.exponent(last) == 0 ? parts.first : parts.second).push_back(m);
  }
  return parts;
}

MonomialIdeal delete_last_variable(const MonomialIdeal& ideal) {
  require_split_shape(ideal);
  const int n = ideal.ambient();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    if (g.exponent(n - 1) > 0) continue;
    std::vector<int> exps(g.exponents().begin(), g.exponents().end() - 1);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(n - 1, std::move(gens));
}

}  // namespace lefschetz
