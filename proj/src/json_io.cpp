#include "lefschetz/json_io.hpp"

#include <stdexcept>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

namespace {

Json json_integer(const mpz_class& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

std::string rational_text(const mpq_class& value) {
  return value.get_str();  // "p/q" or "p", canonical form
}

}  // namespace

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    Json row = Json::array();
    for (int v = 0; v < ideal.ambient(); ++v) row.push_back(g.exponent(v));
    gens.push_back(std::move(row));
  }
  return Json{{"n", ideal.ambient()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& document) {
  if (!document.is_object() || !document.contains("n") || !document.contains("gens")) {
    throw std::invalid_argument("ideal JSON needs {\"n\": ..., \"gens\": [...]}");
  }
  const int n = document.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& row : document.at("gens")) {
    std::vector<int> exponents = row.get<std::vector<int>>();
    if (static_cast<int>(exponents.size()) != n) {
      throw std::invalid_argument("generator row length differs from n");
    }
    gens.emplace_back(std::move(exponents));
  }
  return MonomialIdeal(n, std::move(gens));
}

Json to_json(const IntSequence& s) {
  Json out = Json::array();
  for (int k = 0; k < s.length(); ++k) out.push_back(json_integer(s.at(k)));
  return out;
}

Json to_json(const ShapeReport& report) {
  return Json{{"unimodal", report.unimodal},
              {"log_concave", report.log_concave},
              {"symmetric", report.symmetric},
              {"mid_heavy", report.mid_heavy},
              {"class_H", report.class_H}};
}

Json to_json(const MapCheck& map) {
  Json out{{"i", map.source_degree},
           {"t", map.power},
           {"rows", map.rows},
           {"cols", map.cols},
           {"expected_rank", map.expected_rank},
           {"rank", map.rank},
           {"full_rank", map.full_rank},
           {"rank_exact", map.rank_exact},
           {"certificate", map.certificate}};
  if (map.certificate_prime != 0) out["certificate_prime"] = map.certificate_prime;
  return out;
}

Json to_json(const RankWitness& witness) {
  Json terms = Json::array();
  MultivariatePoly poly(witness.terms.empty() ? 1 : witness.terms.front().first.ambient());
  for (const auto& [monomial, coeff] : witness.terms) {
    terms.push_back(Json{{"monomial", to_text(monomial)}, {"coefficient", rational_text(coeff)}});
    poly.add_term(monomial, coeff);
  }
  return Json{{"side", witness.side == WitnessSide::kernel ? "kernel" : "cokernel"},
              {"i", witness.source_degree},
              {"t", witness.power},
              {"polynomial", to_text(poly)},
              {"terms", std::move(terms)}};
}

Json to_json(const LefschetzReport& report) {
  Json maps = Json::array();
  for (const auto& map : report.maps) maps.push_back(to_json(map));
  Json out{{"property", report.property == LefschetzProperty::strong ? "SLP" : "WLP"},
           {"field", report.field.to_string()},
           {"pass", report.pass},
           {"socle_degree", report.socle_degree},
           {"hilbert", to_json(report.hilbert)},
           {"maps", std::move(maps)}};
  if (report.witness.has_value()) out["witness"] = to_json(*report.witness);
  return out;
}

Json to_json(const SearchCertificate& certificate) {
  Json out{{"found", certificate.ideal.has_value()},
           {"strategy", to_text(certificate.strategy)},
           {"seed", certificate.seed},
           {"trials", certificate.trials},
           {"field", certificate.field.to_string()}};
  if (certificate.ideal.has_value()) {
    out["ideal"] = to_json(*certificate.ideal);
    out["ideal_text"] = to_text(*certificate.ideal);
    out["report"] = to_json(certificate.report);
  }
  out["recertified_over_rationals"] = certificate.recertified;
  if (certificate.rational_report.has_value()) {
    out["rational_report"] = to_json(*certificate.rational_report);
  }
  return out;
}

Json to_json(const FixtureReport& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    checks.push_back(
        Json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
  }
  return Json{{"level", to_text(report.level)},
              {"pass", report.pass},
              {"checks", std::move(checks)}};
}

}  // namespace lefschetz
