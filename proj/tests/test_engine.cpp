#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lefschetz/engine.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/quotient.hpp"

using namespace lefschetz;

namespace {

// Independent oracle: build the matrix of ell^t by honest polynomial
// multiplication and reduction, then read off coefficients per basis column.
ExactMatrix oracle_mult_matrix(const GradedQuotient& q, int i, int t, const FieldSpec& field) {
  const auto& source = q.basis(i);
  const auto& target = q.basis(i + t);
  ExactMatrix out(target.size(), source.size(), field);
  const MultivariatePoly ell_t = pow(MultivariatePoly::variable_sum(q.ambient()), t);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const MultivariatePoly image =
        reduce_mod(ell_t * MultivariatePoly::from_monomial(source[c]), q.ideal());
    for (std::size_t r = 0; r < target.size(); ++r) {
      const mpq_class coeff = image.coefficient(target[r]);
      if (field.is_rationals())
        out.set_rational(r, c, coeff);
      else
        out.set_residue(r, c,
                        mpz_fdiv_ui(coeff.get_num().get_mpz_t(), field.characteristic()));
    }
  }
  return out;
}

std::size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  const auto it = std::find(basis.begin(), basis.end(), m);
  REQUIRE(it != basis.end());
  return static_cast<std::size_t>(it - basis.begin());
}

// Checks that a reported witness genuinely annihilates (or co-annihilates)
// the map it blames, over the report's own field.
bool witness_annihilates(const MonomialIdeal& ideal, const RankWitness& w,
                         const FieldSpec& field) {
  const GradedQuotient q(ideal);
  ExactMatrix m = mult_matrix(q, w.source_degree, w.power, field);
  if (w.side == WitnessSide::cokernel) m = m.transposed();
  const auto& basis =
      w.side == WitnessSide::kernel ? q.basis(w.source_degree) : q.basis(w.source_degree + w.power);
  ExactMatrix v(m.cols(), 1, field);
  for (const auto& [monomial, coeff] : w.terms) {
    const std::size_t at = index_of(basis, monomial);
    if (field.is_rationals())
      v.set_rational(at, 0, coeff);
    else
      v.set_residue(at, 0, mpz_fdiv_ui(coeff.get_num().get_mpz_t(), field.characteristic()));
  }
  return multiply(m, v).is_zero();
}

std::set<std::pair<int, int>> deficient_pairs(const LefschetzReport& report) {
  std::set<std::pair<int, int>> out;
  for (const MapCheck& check : report.maps)
    if (!check.full_rank) out.insert({check.source_degree, check.power});
  return out;
}

}  // namespace

TEST_CASE("multiplication matrix against hand-checked entries") {
  const GradedQuotient q = build_quotient(family_ideal(4, 2, 4));
  // B_1 = {x1, x2, x3, x4}, B_2 = {x3*x4}: only x3 and x4 survive.
  const ExactMatrix m11 = mult_matrix(q, 1, 1, FieldSpec::rationals());
  REQUIRE(m11.rows() == 1);
  REQUIRE(m11.cols() == 4);
  CHECK(m11.rational_at(0, 0) == 0);
  CHECK(m11.rational_at(0, 1) == 0);
  CHECK(m11.rational_at(0, 2) == 1);
  CHECK(m11.rational_at(0, 3) == 1);

  const ExactMatrix m01 = mult_matrix(q, 0, 1, FieldSpec::rationals());
  REQUIRE(m01.rows() == 4);
  REQUIRE(m01.cols() == 1);
  for (std::size_t r = 0; r < 4; ++r) CHECK(m01.rational_at(r, 0) == 1);

  // ell^2 * 1 has coefficient 2 on x3*x4 (the cross term).
  const ExactMatrix m02 = mult_matrix(q, 0, 2, FieldSpec::rationals());
  REQUIRE(m02.rows() == 1);
  REQUIRE(m02.cols() == 1);
  CHECK(m02.rational_at(0, 0) == 2);

  CHECK_THROWS_AS(mult_matrix(q, -1, 1, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(mult_matrix(q, 0, 0, FieldSpec::rationals()), std::invalid_argument);
  // Past the socle the target space is empty.
  CHECK(mult_matrix(q, 2, 1, FieldSpec::rationals()).rows() == 0);
}

TEST_CASE("multiplication matrices match the polynomial oracle") {
  std::mt19937_64 rng(51);
  const FieldSpec rationals = FieldSpec::rationals();
  const FieldSpec f5 = FieldSpec::prime_field(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const GradedQuotient q = build_quotient(random_artinian_ideal(rng, n, 4, 2));
    for (int t = 1; t <= std::min(3, q.socle_degree()); ++t) {
      for (int i = 0; i + t <= q.socle_degree(); ++i) {
        CAPTURE(trial);
        CAPTURE(i);
        CAPTURE(t);
        CHECK(mult_matrix(q, i, t, rationals) == oracle_mult_matrix(q, i, t, rationals));
        CHECK(mult_matrix(q, i, t, f5) == oracle_mult_matrix(q, i, t, f5));
      }
    }
  }
  // The paper families, exercised densely.
  for (const MonomialIdeal& ideal :
       {family_ideal(4, 2, 4), family_ideal(5, 1, 4), power_family(3, 4)}) {
    const GradedQuotient q = build_quotient(ideal);
    for (int t = 1; t <= q.socle_degree(); ++t)
      for (int i = 0; i + t <= q.socle_degree(); ++i)
        CHECK(mult_matrix(q, i, t, rationals) == oracle_mult_matrix(q, i, t, rationals));
  }
}

TEST_CASE("a power map is the product of its single steps") {
  const GradedQuotient q = build_quotient(power_family(3, 4));
  const FieldSpec field = FieldSpec::rationals();
  for (int t = 2; t <= q.socle_degree(); ++t) {
    for (int i = 0; i + t <= q.socle_degree(); ++i) {
      ExactMatrix product = mult_matrix(q, i, 1, field);
      for (int s = 1; s < t; ++s) product = multiply(mult_matrix(q, i + s, 1, field), product);
      CHECK(mult_matrix(q, i, t, field) == product);
    }
  }
}

TEST_CASE("block decomposition reproduces the full map") {
  for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
    for (const MonomialIdeal& ideal : {family_ideal(4, 2, 3), family_ideal(5, 2, 4)}) {
      const GradedQuotient q = build_quotient(ideal);
      for (int t = 1; t <= q.socle_degree(); ++t) {
        for (int i = 1; i + t <= q.socle_degree(); ++i) {
          const BlockDecomposition blocks = block_decomposition(q, i, t, field);
          CAPTURE(i);
          CAPTURE(t);
          CHECK(blocks.matches);
          if (t == 1) {
            // The coupling block of a single step is the identity.
            const std::size_t dim = blocks.bottom_left.rows();
            CHECK(blocks.bottom_left == ExactMatrix::identity(dim, field));
          }
        }
      }
    }
  }
  const GradedQuotient q = build_quotient(family_ideal(4, 2, 3));
  CHECK_THROWS_AS(block_decomposition(q, 0, 1, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(block_decomposition(q, 1, 0, FieldSpec::rationals()), std::invalid_argument);
  // The cubic-generated ideal violates the x_n^2 shape requirement.
  CHECK_THROWS_AS(block_decomposition(build_quotient(power_family(3, 3)), 1, 1,
                                      FieldSpec::rationals()),
                  std::invalid_argument);
}

TEST_CASE("strong check passes on the quadratic monomial complete intersection") {
  const LefschetzReport report =
      check_slp(parse_ideal("n=3; x1^2, x2^2, x3^2"), FieldSpec::rationals());
  CHECK(report.pass);
  CHECK(report.property == LefschetzProperty::strong);
  CHECK(report.socle_degree == 3);
  CHECK(report.hilbert == IntSequence{1, 3, 3, 1});
  CHECK(report.first_failure() == nullptr);
  CHECK(!report.witness.has_value());
  // Maps come ordered by (power, source degree): 3 + 2 + 1 of them.
  REQUIRE(report.maps.size() == 6);
  const std::vector<std::pair<int, int>> want = {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(report.maps[k].power == want[k].first);
    CHECK(report.maps[k].source_degree == want[k].second);
    CHECK(report.maps[k].full_rank);
    CHECK(report.maps[k].rank_exact);
    CHECK(report.maps[k].certificate == "rational_elimination");
    CHECK(report.maps[k].expected_rank ==
          std::min(report.maps[k].rows, report.maps[k].cols));
  }
  // The weak variant checks the power-1 maps only.
  const LefschetzReport weak =
      check_wlp(parse_ideal("n=3; x1^2, x2^2, x3^2"), FieldSpec::rationals());
  CHECK(weak.pass);
  CHECK(weak.property == LefschetzProperty::weak);
  REQUIRE(weak.maps.size() == 3);
  for (const MapCheck& check : weak.maps) CHECK(check.power == 1);
}

TEST_CASE("three-variable power algebras fail strongly at the known spots") {
  const std::vector<std::vector<std::pair<int, int>>> expected = {
      {{1, 3}},                                          // d = 3
      {{2, 3}, {2, 4}, {1, 5}},                          // d = 4
      {{3, 3}, {3, 4}, {2, 5}, {3, 5}, {2, 6}, {1, 7}},  // d = 5
  };
  const std::vector<IntSequence> hilberts = {
      IntSequence{1, 3, 6, 5, 3},
      IntSequence{1, 3, 6, 10, 9, 7, 4},
      IntSequence{1, 3, 6, 10, 15, 14, 12, 9, 5},
  };
  for (int d = 3; d <= 5; ++d) {
    const MonomialIdeal ideal = power_family(3, d);
    const LefschetzReport report = check_slp(ideal, FieldSpec::rationals());
    CAPTURE(d);
    CHECK(!report.pass);
    CHECK(report.hilbert == hilberts[static_cast<std::size_t>(d - 3)]);
    CHECK(deficient_pairs(report) ==
          std::set<std::pair<int, int>>(expected[static_cast<std::size_t>(d - 3)].begin(),
                                        expected[static_cast<std::size_t>(d - 3)].end()));
    // First failure in report order is always (i = d-2, t = 3): the cube of
    // the linear form dies first, never any power below 3.
    const MapCheck* failure = report.first_failure();
    REQUIRE(failure != nullptr);
    CHECK(failure->source_degree == d - 2);
    CHECK(failure->power == 3);
    for (const MapCheck& check : report.maps)
      if (check.power <= 2) CHECK(check.full_rank);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->source_degree == d - 2);
    CHECK(report.witness->power == 3);
    CHECK(report.witness->terms.front().second == 1);
    CHECK(report.witness->leading == report.witness->terms.front().first);
    CHECK(witness_annihilates(ideal, *report.witness, FieldSpec::rationals()));
  }
  // The d = 3 witness is the classic kernel form x1 + x2 - x3.
  const LefschetzReport d3 = check_slp(power_family(3, 3), FieldSpec::rationals());
  REQUIRE(d3.witness.has_value());
  CHECK(d3.witness->side == WitnessSide::kernel);
  REQUIRE(d3.witness->terms.size() == 3);
  CHECK(d3.witness->terms[0].first == parse_monomial("x1", 3));
  CHECK(d3.witness->terms[0].second == 1);
  CHECK(d3.witness->terms[1].first == parse_monomial("x2", 3));
  CHECK(d3.witness->terms[1].second == 1);
  CHECK(d3.witness->terms[2].first == parse_monomial("x3", 3));
  CHECK(d3.witness->terms[2].second == -1);
}

TEST_CASE("weak check pinpoints the surjectivity failures for cubic powers") {
  struct Case {
    int n;
    int bad_degree;
    std::size_t rank;
    std::size_t expected;
    IntSequence hilbert;
    WitnessSide side;
  };
  const std::vector<Case> cases = {
      {4, 3, 13, 14, IntSequence{1, 4, 10, 14, 14, 8, 3}, WitnessSide::kernel},
      {5, 4, 35, 36, IntSequence{1, 5, 15, 28, 38, 36, 25, 11, 3}, WitnessSide::cokernel},
      {6, 5, 96, 99, IntSequence{1, 6, 21, 48, 81, 102, 99, 72, 39, 14, 3},
       WitnessSide::cokernel},
  };
  for (const Case& c : cases) {
    const MonomialIdeal ideal = power_family(c.n, 3);
    const LefschetzReport report = check_wlp(ideal, FieldSpec::rationals());
    CAPTURE(c.n);
    CHECK(!report.pass);
    CHECK(report.hilbert == c.hilbert);
    const auto bad = deficient_pairs(report);
    REQUIRE(bad.size() == 1);
    CHECK(bad.begin()->first == c.bad_degree);
    CHECK(bad.begin()->second == 1);
    const MapCheck* failure = report.first_failure();
    CHECK(failure->rank == c.rank);
    CHECK(failure->expected_rank == c.expected);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->side == c.side);
    CHECK(witness_annihilates(ideal, *report.witness, FieldSpec::rationals()));
  }
}

TEST_CASE("prime-field checks: characteristic can break a rational pass") {
  // Over F_2 the square of the linear form already lands in the ideal, so
  // the complete intersection loses the strong property.
  const MonomialIdeal ci = parse_ideal("n=3; x1^2, x2^2, x3^2");
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const LefschetzReport broken = check_slp(ci, f2);
  CHECK(!broken.pass);
  for (const MapCheck& check : broken.maps) {
    CHECK(check.certificate == "modular");
    CHECK(check.certificate_prime == 2);
    CHECK(check.rank_exact);
  }
  REQUIRE(broken.witness.has_value());
  CHECK(witness_annihilates(ci, *broken.witness, f2));
  // The t = 2 map from degree 0 is literally zero: ell^2 = sum of squares
  // plus an even cross term.
  bool saw_zero_map = false;
  for (const MapCheck& check : broken.maps)
    if (check.power == 2 && check.source_degree == 0) {
      CHECK(check.rank == 0);
      saw_zero_map = true;
    }
  CHECK(saw_zero_map);

  // In large characteristic the family keeps its rational behavior.
  for (std::uint64_t p : {3ull, 5ull, 32003ull}) {
    const LefschetzReport report = check_slp(family_ideal(4, 2, 4), FieldSpec::prime_field(p));
    CAPTURE(p);
    CHECK(report.pass);
  }
}

TEST_CASE("strong property holds for the quadratic families over the rationals") {
  for (int n = 3; n <= 4; ++n)
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(check_slp(family_ideal(n, i, j), FieldSpec::rationals()).pass);
      }
  CHECK(check_slp(family_ideal(5, 2, 4), FieldSpec::rationals()).pass);
  CHECK(check_slp(family_ideal(5, 3, 5), FieldSpec::rationals()).pass);
}

TEST_CASE("serial and threaded runs return the identical report") {
  const MonomialIdeal ideal = power_family(3, 5);
  for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(32003)}) {
    CheckOptions serial;
    serial.threads = 1;
    CheckOptions threaded;
    threaded.threads = 0;
    const LefschetzReport a = check_slp(ideal, field, serial);
    const LefschetzReport b = check_slp(ideal, field, threaded);
    CHECK(a.pass == b.pass);
    REQUIRE(a.maps.size() == b.maps.size());
    CHECK(to_text(a) == to_text(b));
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->terms == b.witness->terms);
  }
}

TEST_CASE("witness extraction can be disabled") {
  CheckOptions options;
  options.want_witness = false;
  const LefschetzReport report =
      check_slp(power_family(3, 3), FieldSpec::rationals(), options);
  CHECK(!report.pass);
  CHECK(!report.witness.has_value());
}

TEST_CASE("hilbert-function gaps match their closed forms") {
  for (int d = 3; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(hf_gap(HfGapKind::n3_injectivity_gap, d) == d - 3);
    const GradedQuotient q = build_quotient(power_family(3, d));
    CHECK(mpz_class(q.hilbert().at(d + 1) - q.hilbert().at(d - 2)) ==
          hf_gap(HfGapKind::n3_injectivity_gap, d));
  }
  for (int d = 3; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(hf_gap(HfGapKind::n4_surjectivity_gap, d) == static_cast<long>(d) * (d - 1) / 2 - d);
  }
  CHECK_THROWS_AS(hf_gap(HfGapKind::n3_injectivity_gap, 2), std::invalid_argument);
}

TEST_CASE("report rendering names the failure and the witness") {
  const std::string text = to_text(check_slp(power_family(3, 3), FieldSpec::rationals()));
  CHECK(text.find("SLP over Q: FAIL") != std::string::npos);
  CHECK(text.find("first failure: i=1 t=3") != std::string::npos);
  CHECK(text.find("witness (kernel, i=1, t=3): x1 + x2 - x3") != std::string::npos);
  const std::string ok =
      to_text(check_wlp(parse_ideal("n=2; x1^2, x2^2"), FieldSpec::prime_field(3)));
  CHECK(ok.find("WLP over F_3: PASS") != std::string::npos);
}
