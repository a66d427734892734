#include "lefschetz/search.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lefschetz/inverse_system.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

namespace {

/// Advances a k-subset of {0..pool-1} in lexicographic order; false at the end.
bool next_combination(std::vector<int>& combo, int pool) {
  const int k = static_cast<int>(combo.size());
  for (int slot = k - 1; slot >= 0; --slot) {
    if (combo[slot] < pool - (k - slot)) {
      ++combo[slot];
      for (int later = slot + 1; later < k; ++later) combo[later] = combo[later - 1] + 1;
      return true;
    }
  }
  return false;
}

struct CandidatePool {
  std::vector<Monomial> pure;
  std::vector<Monomial> extras;  // descending revlex
};

CandidatePool candidate_pool(int n, int d) {
  CandidatePool pool;
  for (int v = 1; v <= n; ++v) pool.pure.push_back(Monomial::pure_power(n, v, d));
  for (const auto& m : monomials_of_degree(n, d, false)) {
    if (!m.is_pure_power()) pool.extras.push_back(m);
  }
  return pool;
}

MonomialIdeal assemble(const CandidatePool& pool, const std::vector<int>& combo) {
  std::vector<Monomial> gens = pool.pure;
  for (int index : combo) gens.push_back(pool.extras[index]);
  return MonomialIdeal(pool.pure.front().ambient(), std::move(gens));
}

long failing_map_count(const LefschetzReport& report) {
  long fails = 0;
  for (const auto& map : report.maps) {
    if (!map.full_rank) ++fails;
  }
  return fails;
}

/// Evaluates a batch of candidate combos and returns the position of the
/// first SLP pass (or -1).  Batch members are independent, so they go to an
/// OpenMP work queue; the lowest index wins regardless of thread count.
int evaluate_batch(const CandidatePool& pool, const std::vector<std::vector<int>>& batch,
                   const FieldSpec& field, bool parallel, LefschetzReport* winner_report) {
  const int count = static_cast<int>(batch.size());
  std::vector<LefschetzReport> reports(count);
  std::vector<char> passed(count, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
#endif
  for (int b = 0; b < count; ++b) {
    CheckOptions options;
    options.threads = 1;
    options.want_witness = false;
    reports[b] = check_slp(assemble(pool, batch[b]), field, options);
    passed[b] = reports[b].pass ? 1 : 0;
  }
  for (int b = 0; b < count; ++b) {
    if (passed[b]) {
      if (winner_report != nullptr) *winner_report = reports[b];
      return b;
    }
  }
  return -1;
}

}  // namespace

std::string to_text(SearchStrategy strategy) {
  switch (strategy) {
    case SearchStrategy::exhaustive: return "exhaustive";
    case SearchStrategy::random: return "random";
    case SearchStrategy::greedy: return "greedy";
  }
  throw std::logic_error("unknown strategy");
}

SearchStrategy parse_strategy(const std::string& text) {
  if (text == "exhaustive") return SearchStrategy::exhaustive;
  if (text == "random") return SearchStrategy::random;
  if (text == "greedy") return SearchStrategy::greedy;
  throw std::invalid_argument("unknown search strategy '" + text + "'");
}

std::string to_text(FixtureLevel level) {
  return level == FixtureLevel::fast ? "fast" : "full";
}

FixtureLevel parse_fixture_level(const std::string& text) {
  if (text == "fast") return FixtureLevel::fast;
  if (text == "full") return FixtureLevel::full;
  throw std::invalid_argument("unknown fixture level '" + text + "'");
}

SearchCertificate search(const SearchSpec& spec) {
  if (spec.n < 3 || spec.d < 3) throw std::invalid_argument("search needs n >= 3 and d >= 3");
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(spec.n + spec.d - 1),
               static_cast<unsigned long>(spec.d));
  if (spec.mu < spec.n || mpz_class(spec.mu) > total) {
    throw std::invalid_argument("mu must lie in [n, C(n+d-1,d)] = [" + std::to_string(spec.n) +
                                ", " + total.get_str() + "]");
  }

  SearchCertificate cert;
  cert.field = spec.field;
  cert.seed = spec.seed;
  cert.strategy = spec.strategy;

  const CandidatePool pool = candidate_pool(spec.n, spec.d);
  const int pool_size = static_cast<int>(pool.extras.size());
  const int k = spec.mu - spec.n;
  const bool parallel = spec.threads != 1;
  const long trial_cap = spec.max_trials > 0 ? spec.max_trials : -1;

  auto finish = [&](const std::vector<int>& combo, const LefschetzReport& report) {
    cert.ideal = assemble(pool, combo);
    cert.report = report;
    if (!cert.ideal->is_artinian()) throw std::logic_error("search produced a non-artinian ideal");
    if (spec.recertify_rationals) {
      CheckOptions options;
      options.threads = spec.threads;
      cert.rational_report = check_slp(*cert.ideal, FieldSpec::rationals(), options);
      cert.recertified = cert.rational_report->pass;
    }
  };

  if (spec.strategy == SearchStrategy::exhaustive) {
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    bool more = true;
    while (more) {
      std::vector<std::vector<int>> batch;
      constexpr int kBatch = 32;
      while (more && static_cast<int>(batch.size()) < kBatch &&
             (trial_cap < 0 || cert.trials + static_cast<long>(batch.size()) < trial_cap)) {
        batch.push_back(combo);
        more = next_combination(combo, pool_size);
      }
      if (batch.empty()) break;
      LefschetzReport report;
      const int hit = evaluate_batch(pool, batch, spec.field, parallel, &report);
      if (hit >= 0) {
        cert.trials += hit + 1;
        finish(batch[hit], report);
        return cert;
      }
      cert.trials += static_cast<long>(batch.size());
      if (trial_cap >= 0 && cert.trials >= trial_cap) break;
    }
    return cert;
  }

  if (spec.strategy == SearchStrategy::random) {
    if (trial_cap < 0) {
      throw std::invalid_argument("the random strategy needs max_trials >= 1");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<int> indices(pool_size);
    while (cert.trials < trial_cap) {
      std::vector<std::vector<int>> batch;
      constexpr int kBatch = 32;
      const long room = trial_cap - cert.trials;
      const int want = static_cast<int>(std::min<long>(kBatch, room));
      for (int b = 0; b < want; ++b) {
        // Partial Fisher-Yates: the first k slots become a uniform k-subset.
        std::iota(indices.begin(), indices.end(), 0);
        for (int slot = 0; slot < k; ++slot) {
          std::uniform_int_distribution<int> pick(slot, pool_size - 1);
          std::swap(indices[slot], indices[pick(rng)]);
        }
        std::vector<int> combo(indices.begin(), indices.begin() + k);
        std::sort(combo.begin(), combo.end());
        batch.push_back(std::move(combo));
      }
      LefschetzReport report;
      const int hit = evaluate_batch(pool, batch, spec.field, parallel, &report);
      if (hit >= 0) {
        cert.trials += hit + 1;
        finish(batch[hit], report);
        return cert;
      }
      cert.trials += static_cast<long>(batch.size());
    }
    return cert;
  }

  // Greedy: grow the extra-generator set one monomial at a time, keeping the
  // candidate with the fewest rank-deficient maps (ties to the revlex-larger
  // monomial, i.e. the lower pool index).
  std::vector<int> chosen;
  LefschetzReport last_report;
  CheckOptions options;
  options.threads = spec.threads;
  options.want_witness = false;
  if (k == 0) {
    last_report = check_slp(assemble(pool, chosen), spec.field, options);
    ++cert.trials;
  }
  for (int step = 0; step < k; ++step) {
    long best_fails = -1;
    int best_index = -1;
    LefschetzReport best_report;
    for (int index = 0; index < pool_size; ++index) {
      if (std::find(chosen.begin(), chosen.end(), index) != chosen.end()) continue;
      std::vector<int> attempt = chosen;
      attempt.push_back(index);
      LefschetzReport report = check_slp(assemble(pool, attempt), spec.field, options);
      ++cert.trials;
      const long fails = failing_map_count(report);
      if (best_fails < 0 || fails < best_fails) {
        best_fails = fails;
        best_index = index;
        best_report = report;
      }
      if (trial_cap >= 0 && cert.trials >= trial_cap) break;
    }
    if (best_index < 0) break;
    chosen.push_back(best_index);
    last_report = best_report;
    if (trial_cap >= 0 && cert.trials >= trial_cap) break;
  }
  if (static_cast<int>(chosen.size()) == k && last_report.pass) {
    finish(chosen, last_report);
  }
  return cert;
}

namespace {

std::string deficiency_detail(const LefschetzReport& report) {
  if (report.pass) return "all maps full rank";
  const MapCheck* failure = report.first_failure();
  std::ostringstream out;
  out << "first deficiency at (i=" << failure->source_degree << ", t=" << failure->power
      << "), rank " << failure->rank << " of " << failure->expected_rank;
  return out.str();
}

void append_check(FixtureReport& report, const std::string& name, bool pass,
                  const std::string& detail) {
  report.checks.push_back(FixtureCheck{name, pass, detail});
  report.pass = report.pass && pass;
}

}  // namespace

FixtureReport verify_sec5_fixtures(FixtureLevel level, int threads) {
  FixtureReport out;
  out.level = level;
  out.pass = true;
  CheckOptions options;
  options.threads = threads;
  options.want_witness = false;

  const MonomialIdeal base = sec5_J();
  LefschetzReport report = check_slp(base, FieldSpec::rationals(), options);
  append_check(out, "sec5_J has SLP over Q", report.pass, deficiency_detail(report));

  for (const char* text : {"x1^4*x2^2*x3^2", "x1^3*x2^3*x3^2"}) {
    const Monomial gen = parse_monomial(text, 3);
    report = check_slp(base.without_generator(gen), FieldSpec::rationals(), options);
    append_check(out, std::string("sec5_J minus ") + text + " loses SLP", !report.pass,
                 deficiency_detail(report));
  }

  if (level == FixtureLevel::full) {
    const MonomialIdeal cubic = sec5_cubic8();
    report = check_slp(cubic, FieldSpec::prime_field(32003), options);
    append_check(out, "sec5_cubic8 has SLP over F_32003", report.pass,
                 deficiency_detail(report));

    long outside = 0;
    long broken = 0;
    for (const auto& m : monomials_of_degree(8, 3, false)) {
      if (cubic.contains(m)) continue;
      ++outside;
      const LefschetzReport wlp =
          check_wlp(cubic.with_extra_generator(m), FieldSpec::rationals(), options);
      if (!wlp.pass) ++broken;
    }
    std::ostringstream detail;
    detail << broken << "/" << outside << " single-cubic extensions lose WLP";
    append_check(out, "every cubic extension of sec5_cubic8 loses WLP", broken == outside,
                 detail.str());
  }
  return out;
}

FixtureReport verify_paper_suite(FixtureLevel level, int threads) {
  const bool full = level == FixtureLevel::full;
  FixtureReport out;
  out.level = level;
  out.pass = true;
  CheckOptions options;
  options.threads = threads;
  options.want_witness = false;

  // Closed-form Hilbert series against brute-force quotient bases.
  {
    const int n_max = full ? 8 : 6;
    bool ok = true;
    long cases = 0;
    for (int n = 2; n <= n_max && ok; ++n) {
      for (int j = 2; j <= n && ok; ++j) {
        for (int i = 1; i < j && ok; ++i) {
          ++cases;
          ok = build_quotient(family_ideal(n, i, j)).hilbert() == closed_form_hs(n, i, j);
        }
      }
    }
    append_check(out, "closed-form Hilbert series matches brute force", ok,
                 std::to_string(cases) + " (n,i,j) cases, n <= " + std::to_string(n_max));
  }

  // Shape predicates of the family coefficient sequences.
  {
    const int n_max = full ? 8 : 6;
    bool ok = true;
    long cases = 0;
    for (int n = 2; n <= n_max && ok; ++n) {
      for (int j = 2; j <= n && ok; ++j) {
        for (int i = 1; i < j && ok; ++i) {
          ++cases;
          const IntSequence hs = closed_form_hs(n, i, j);
          ok = is_unimodal(hs) && is_log_concave(hs) && is_mid_heavy(hs) && is_class_H(hs) &&
               (is_symmetric(hs) == (j - i - 1 == 1)) &&
               (quadratic_discriminant(i, j) ==
                static_cast<long>(j - 2) * (j - 2) + 4L * i) &&
               (quadratic_discriminant(i, j) > 0);
        }
      }
    }
    append_check(out, "family coefficient shape predicates", ok,
                 std::to_string(cases) + " cases: unimodal, log-concave, mid-heavy, class H, "
                 "symmetry iff j-i-1=1, discriminant");
  }

  // SLP for the quadratic families over the rationals and small prime fields.
  {
    const int n_max = full ? 6 : 5;
    bool ok = true;
    long checks = 0;
    for (int n = 2; n <= n_max && ok; ++n) {
      for (int j = 2; j <= n && ok; ++j) {
        for (int i = 1; i < j && ok; ++i) {
          const MonomialIdeal ideal = family_ideal(n, i, j);
          LefschetzReport report = check_slp(ideal, FieldSpec::rationals(), options);
          ok = report.pass;
          ++checks;
          if (!ok) break;
          const int socle = report.socle_degree;
          for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            if (p <= static_cast<std::uint64_t>(socle)) continue;
            report = check_slp(ideal, FieldSpec::prime_field(p), options);
            ++checks;
            if (!report.pass) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    append_check(out, "family SLP over Q and over F_p for p > socle degree", ok,
                 std::to_string(checks) + " Lefschetz sweeps, n <= " + std::to_string(n_max));
  }

  // Three-variable kernel forms and the Hilbert-function gap.
  {
    const int d_max = full ? 8 : 6;
    bool ok = true;
    std::string detail = "d = 3.." + std::to_string(d_max);
    try {
      for (int d = 3; d <= d_max && ok; ++d) {
        ok = hf_gap(HfGapKind::n3_injectivity_gap, d) == d - 3;
        if (!ok) {
          detail = "hf gap mismatch at d=" + std::to_string(d);
          break;
        }
        witness_fd(d);  // throws if the kernel property fails
        const LefschetzReport report =
            check_slp(power_family(3, d), FieldSpec::rationals(), options);
        const MapCheck* failure = report.first_failure();
        ok = !report.pass && failure != nullptr && failure->source_degree == d - 2 &&
             failure->power == 3;
        if (!ok) detail = "unexpected deficiency pattern at d=" + std::to_string(d);
      }
    } catch (const std::exception& error) {
      ok = false;
      detail = error.what();
    }
    append_check(out, "three-variable kernel forms and SLP deficiency at (d-2, 3)", ok, detail);
  }

  // The bivariate identity behind the kernel forms.
  {
    bool ok = true;
    for (int d = 3; d <= 20 && ok; ++d) ok = identity_check(d);
    append_check(out, "bivariate kernel identity for d <= 20", ok, "exact coefficient match");
  }

  // Four- and five-variable witnesses and WLP failures.
  {
    bool ok = true;
    std::string detail;
    try {
      const int d_max = full ? 6 : 5;
      for (int d = 3; d <= d_max && ok; ++d) {
        const MonomialIdeal ideal = power_family(4, d);
        ok = hf_gap(HfGapKind::n4_surjectivity_gap, d) == d * (d - 1) / 2 - d;
        if (!ok) {
          detail = "hf gap mismatch at d=" + std::to_string(d);
          break;
        }
        mpz_class squares = 0;
        for (int s = 1; s <= d; ++s) squares += s * s;
        ok = build_quotient(ideal).dim(2 * d - 2) == squares;
        if (!ok) {
          detail = "square-sum dimension mismatch at d=" + std::to_string(d);
          break;
        }
        const MultivariatePoly big_f =
            pow(MultivariatePoly::variable(4, 1) - MultivariatePoly::variable(4, 2), d - 1) *
            pow(MultivariatePoly::variable(4, 3) - MultivariatePoly::variable(4, 4), d - 1);
        ok = in_inverse_system(ideal, big_f) &&
             apply_derivation(MultivariatePoly::variable_sum(4), big_f).is_zero();
        if (!ok) {
          detail = "four-variable dual witness failed at d=" + std::to_string(d);
          break;
        }
      }
      const int n5_max = full ? 5 : 4;
      for (int d = 3; d <= n5_max && ok; ++d) witness_n5(d);
      for (int n = 4; n <= (full ? 7 : 5) && ok; ++n) {
        const LefschetzReport report =
            check_wlp(power_family(n, 3), FieldSpec::rationals(), options);
        ok = !report.pass;
        if (!ok) detail = "expected WLP failure missing at n=" + std::to_string(n);
      }
      if (ok) detail = "gap, dual witnesses, and WLP failures all verified";
    } catch (const std::exception& error) {
      ok = false;
      detail = error.what();
    }
    append_check(out, "higher-variable witnesses and WLP failures", ok, detail);
  }

  // Generator-count family sweep.
  {
    const int n_max = full ? 6 : 5;
    bool ok = true;
    long cases = 0;
    for (int n = 2; n <= n_max && ok; ++n) {
      for (long mu = n; mu <= n + static_cast<long>(n) * (n - 1) / 2 && ok; ++mu) {
        const MonomialIdeal ideal = mu_to_family(n, mu);
        ok = static_cast<long>(ideal.generator_count()) == mu &&
             check_slp(ideal, FieldSpec::rationals(), options).pass;
        ++cases;
      }
    }
    append_check(out, "every generator count in [n, C(n+1,2)] admits SLP", ok,
                 std::to_string(cases) + " ideals, n <= " + std::to_string(n_max));
  }

  // Primal/dual rank agreement on random artinian ideals.
  {
    std::mt19937_64 rng(20260818);
    bool ok = true;
    const int samples = full ? 60 : 25;
    for (int s = 0; s < samples && ok; ++s) {
      std::uniform_int_distribution<int> pick_n(2, 4);
      const int n = pick_n(rng);
      const MonomialIdeal ideal = random_artinian_ideal(rng, n, 5, 3);
      const GradedQuotient quotient = build_quotient(ideal);
      std::uniform_int_distribution<int> pick_i(0, quotient.socle_degree());
      const DualityRanks ranks = duality_rank(ideal, pick_i(rng), FieldSpec::rationals());
      ok = ranks.primal_rank == ranks.dual_rank;
    }
    append_check(out, "multiplication and contraction ranks agree", ok,
                 std::to_string(samples) + " random artinian ideals");
  }

  // Large fixtures.
  FixtureReport fixtures = verify_sec5_fixtures(level, threads);
  for (auto& check : fixtures.checks) {
    out.pass = out.pass && check.pass;
    out.checks.push_back(std::move(check));
  }
  return out;
}

}  // namespace lefschetz
