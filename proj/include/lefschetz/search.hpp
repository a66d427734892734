#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/engine.hpp"
#include "lefschetz/field.hpp"
#include "lefschetz/ideal.hpp"

namespace lefschetz {

enum class SearchStrategy { exhaustive, random, greedy };

std::string to_text(SearchStrategy strategy);
SearchStrategy parse_strategy(const std::string& text);

/// Parameters for the generator-count search: find an artinian monomial
/// ideal generated by mu monomials of degree d in n variables whose quotient
/// has the SLP.  Candidate generator sets always contain all pure powers
/// x_k^d (artinian-ness in a single degree forces this).
struct SearchSpec {
  int n = 3;
  int d = 3;
  int mu = 3;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t seed = 1;           ///< random strategy only; always reported
  long max_trials = 0;              ///< 0 = unlimited (exhaustive/greedy); random requires >= 1
  FieldSpec field = FieldSpec::prime_field(32003);
  bool recertify_rationals = false; ///< re-run the found candidate over the rationals
  int threads = 0;                  ///< 0 = library default, 1 = serial
};

/// Outcome of a search.  When an ideal was found, `report` is the SLP report
/// over `field` for that ideal, so the certificate re-verifies by feeding the
/// stored ideal back to check_slp.
struct SearchCertificate {
  std::optional<MonomialIdeal> ideal;
  LefschetzReport report;           ///< meaningful only when ideal is set
  std::optional<LefschetzReport> rational_report;  ///< set when re-certified
  long trials = 0;                  ///< candidate sets examined
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  bool recertified = false;
};

/// Runs the search.  The exhaustive strategy enumerates extra-generator
/// combinations in descending revlex preference (deterministic first find);
/// random samples candidate sets without replacement inside each trial;
/// greedy grows the generator set one monomial at a time, keeping the choice
/// that minimizes the number of rank-deficient maps.
/// Throws std::invalid_argument when n or d < 3 or mu is out of range.
SearchCertificate search(const SearchSpec& spec);

enum class FixtureLevel { fast, full };

std::string to_text(FixtureLevel level);
FixtureLevel parse_fixture_level(const std::string& text);

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FixtureReport {
  FixtureLevel level = FixtureLevel::fast;
  bool pass = false;
  std::vector<FixtureCheck> checks;
};

/// Checks the stored large-fixture claims.  The fast level verifies that
/// sec5_J has the SLP over the rationals and that deleting either of its two
/// non-pure generators breaks the SLP.  The full level additionally certifies
/// sec5_cubic8's SLP over F_32003 and, for every cubic monomial m outside
/// that ideal, that adjoining m breaks even the WLP (the slow sweep).
FixtureReport verify_sec5_fixtures(FixtureLevel level, int threads = 0);

/// Curated end-to-end suite over the whole library: closed-form Hilbert
/// series against brute force, the shape predicates, Lefschetz checks for the
/// quadratic families, the higher-degree kernel witnesses, and the large
/// fixtures.  The full level widens the ranges and includes the slow sweep.
FixtureReport verify_paper_suite(FixtureLevel level, int threads = 0);

}  // namespace lefschetz
