#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lefschetz/engine.hpp"
#include "lefschetz/inverse_system.hpp"
#include "lefschetz/json_io.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/search.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

namespace {

std::string trimmed(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

MonomialIdeal ideal_from_text_or_json(const std::string& body) {
  const std::string text = trimmed(body);
  if (text.empty()) throw std::invalid_argument("empty ideal description");
  if (text.front() == '{') {
    Json document;
    try {
      document = Json::parse(text);
    } catch (const Json::parse_error& error) {
      throw std::invalid_argument(std::string("bad ideal JSON: ") + error.what());
    }
    return ideal_from_json(document);
  }
  return parse_ideal(text);
}

}  // namespace

MonomialIdeal load_ideal_argument(const std::string& argument) {
  const std::string text = trimmed(argument);
  if (text.empty()) throw std::invalid_argument("empty ideal argument");
  if (text.front() == '@') {
    const std::string name = text.substr(1);
    if (name == "sec5_J") return sec5_J();
    if (name == "sec5_cubic8") return sec5_cubic8();
    throw std::invalid_argument("unknown fixture '@" + name +
                                "' (available: @sec5_J, @sec5_cubic8)");
  }
  if (text.front() == '{' || text.find(';') != std::string::npos) {
    return ideal_from_text_or_json(text);
  }
  std::ifstream file(text);
  if (!file) throw std::invalid_argument("cannot open ideal file '" + text + "'");
  std::ostringstream body;
  body << file.rdbuf();
  return ideal_from_text_or_json(body.str());
}

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct LefschetzCommand {
  std::string ideal_text;
  std::string field_text = "q";
  int threads = 0;
  bool json = false;
};

int run_lefschetz_check(const LefschetzCommand& cmd, LefschetzProperty property,
                        std::ostream& out) {
  const MonomialIdeal ideal = load_ideal_argument(cmd.ideal_text);
  const FieldSpec field = FieldSpec::parse(cmd.field_text);
  CheckOptions options;
  options.threads = cmd.threads;
  const LefschetzReport report = property == LefschetzProperty::strong
                                     ? check_slp(ideal, field, options)
                                     : check_wlp(ideal, field, options);
  if (cmd.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.pass ? kExitPass : kExitFail;
}

void emit_shape(const IntSequence& s, bool hilbert_type, bool json, std::ostream& out) {
  const ShapeReport shape = shape_report(s);
  if (json) {
    Json document{{"sequence", to_json(s)}};
    Json flags = to_json(shape);
    document.update(flags);
    if (!hilbert_type) document["class_H"] = nullptr;  // undefined off Hilbert-type input
    out << document.dump(2) << "\n";
    return;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "sequence:    " << to_text(s) << "\n";
  out << "unimodal:    " << yn(shape.unimodal) << "\n";
  out << "log-concave: " << yn(shape.log_concave) << "\n";
  out << "symmetric:   " << yn(shape.symmetric) << "\n";
  out << "mid-heavy:   " << yn(shape.mid_heavy) << "\n";
  out << "class H:     " << (hilbert_type ? yn(shape.class_H) : "n/a") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lefschetz-property toolkit for artinian monomial ideals"};
  app.require_subcommand(1);

  // family
  auto* family = app.add_subcommand("family", "Print a quadratic family ideal");
  int fam_n = 0, fam_i = 0, fam_j = 0;
  long fam_mu = -1;
  bool fam_json = false;
  family->add_option("--n", fam_n, "number of variables")->required();
  family->add_option("--i", fam_i, "family index i (1 <= i < j)");
  family->add_option("--j", fam_j, "family index j (i < j <= n)");
  family->add_option("--mu", fam_mu, "pick the family member with mu minimal generators");
  family->add_flag("--json", fam_json, "emit JSON");

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a family member or ideal");
  int hil_n = 0, hil_i = 0, hil_j = 0;
  std::string hil_ideal;
  hilbert->add_option("--n", hil_n, "number of variables (with --i/--j)");
  hilbert->add_option("--i", hil_i, "family index i");
  hilbert->add_option("--j", hil_j, "family index j");
  hilbert->add_option("--ideal", hil_ideal, "ideal (inline text, JSON, @fixture, or file)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Shape predicates of a coefficient sequence");
  std::string ana_sequence;
  int ana_n = 0, ana_i = 0, ana_j = 0;
  bool ana_text = false;
  analyze->add_option("--sequence", ana_sequence, "sequence such as \"1,4,1\" or \"(1, 4, 1)\"");
  analyze->add_option("--n", ana_n, "number of variables (with --i/--j)");
  analyze->add_option("--i", ana_i, "family index i");
  analyze->add_option("--j", ana_j, "family index j");
  analyze->add_flag("--text", ana_text, "plain-text output instead of JSON");

  // slp / wlp
  LefschetzCommand slp_cmd, wlp_cmd;
  auto* slp = app.add_subcommand("slp", "Decide the strong Lefschetz property");
  slp->add_option("--ideal", slp_cmd.ideal_text, "ideal (inline text, JSON, @fixture, or file)")
      ->required();
  slp->add_option("--field", slp_cmd.field_text, "q for rationals or p:<prime>");
  slp->add_option("--threads", slp_cmd.threads, "worker count (0 = all, 1 = serial)")
      ->envname("LEFSCHETZ_THREADS");
  slp->add_flag("--json", slp_cmd.json, "emit JSON");
  auto* wlp = app.add_subcommand("wlp", "Decide the weak Lefschetz property");
  wlp->add_option("--ideal", wlp_cmd.ideal_text, "ideal (inline text, JSON, @fixture, or file)")
      ->required();
  wlp->add_option("--field", wlp_cmd.field_text, "q for rationals or p:<prime>");
  wlp->add_option("--threads", wlp_cmd.threads, "worker count (0 = all, 1 = serial)")
      ->envname("LEFSCHETZ_THREADS");
  wlp->add_flag("--json", wlp_cmd.json, "emit JSON");

  // witness
  auto* witness = app.add_subcommand("witness", "Higher-degree kernel witnesses");
  witness->require_subcommand(1);
  auto* wit_fd = witness->add_subcommand("fd", "three-variable kernel form f_d");
  int fd_d = 0;
  wit_fd->add_option("--d", fd_d, "generator degree d >= 3")->required();
  auto* wit_n5 = witness->add_subcommand("n5", "five-variable witness pair");
  int n5_d = 0;
  wit_n5->add_option("--d", n5_d, "generator degree d >= 3")->required();
  auto* wit_identity = witness->add_subcommand("identity", "bivariate kernel identity sweep");
  int identity_d_max = 20;
  wit_identity->add_option("--d-max", identity_d_max, "check 3 <= d <= d-max (default 20)");

  // search
  auto* search_cmd = app.add_subcommand("search", "Search for an SLP ideal with mu generators");
  SearchSpec spec;
  std::string search_field = "p:32003";
  std::string strategy_text = "exhaustive";
  bool search_json = false;
  search_cmd->add_option("--n", spec.n, "number of variables")->required();
  search_cmd->add_option("--d", spec.d, "generator degree")->required();
  search_cmd->add_option("--mu", spec.mu, "number of minimal generators")->required();
  search_cmd->add_option("--strategy", strategy_text, "exhaustive | random | greedy");
  search_cmd->add_option("--seed", spec.seed, "random strategy seed (default 1)");
  search_cmd->add_option("--max-trials", spec.max_trials,
                         "trial budget (0 = unlimited; random requires >= 1)");
  search_cmd->add_option("--field", search_field, "q or p:<prime> (default p:32003)");
  search_cmd->add_flag("--recertify", spec.recertify_rationals,
                       "re-certify the found ideal over the rationals");
  search_cmd->add_option("--threads", spec.threads, "worker count (0 = all, 1 = serial)")
      ->envname("LEFSCHETZ_THREADS");
  search_cmd->add_flag("--json", search_json, "emit JSON");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the stored end-to-end fixture suite");
  std::string level_text = "fast";
  int verify_threads = 0;
  bool verify_json = false;
  verify->add_option("--level", level_text, "fast | full");
  verify->add_option("--threads", verify_threads, "worker count (0 = all, 1 = serial)")
      ->envname("LEFSCHETZ_THREADS");
  verify->add_flag("--json", verify_json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    std::ostringstream capture_out;
    const int code = app.exit(error, capture_out, err);
    out << capture_out.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (family->parsed()) {
      MonomialIdeal ideal = [&] {
        if (fam_mu >= 0) {
          if (family->count("--i") != 0 || family->count("--j") != 0) {
            throw std::invalid_argument("give either --mu or --i/--j, not both");
          }
          return mu_to_family(fam_n, fam_mu);
        }
        if (family->count("--i") == 0 || family->count("--j") == 0) {
          throw std::invalid_argument("family needs --i and --j (or --mu)");
        }
        return family_ideal(fam_n, fam_i, fam_j);
      }();
      if (fam_json) {
        Json document = to_json(ideal);
        document["mu"] = ideal.generator_count();
        document["text"] = to_text(ideal);
        out << document.dump(2) << "\n";
      } else {
        out << to_text(ideal) << "\n";
      }
      return kExitPass;
    }

    if (hilbert->parsed()) {
      IntSequence hf = [&] {
        const bool family_form = hilbert->count("--n") != 0;
        if (family_form && !hil_ideal.empty()) {
          throw std::invalid_argument("give either --n/--i/--j or --ideal, not both");
        }
        if (family_form) {
          if (hilbert->count("--i") == 0 || hilbert->count("--j") == 0) {
            throw std::invalid_argument("hilbert needs --i and --j with --n");
          }
          return closed_form_hs(hil_n, hil_i, hil_j);
        }
        if (hil_ideal.empty()) {
          throw std::invalid_argument("hilbert needs --n/--i/--j or --ideal");
        }
        return build_quotient(load_ideal_argument(hil_ideal)).hilbert();
      }();
      out << to_json(hf).dump() << "\n";
      return kExitPass;
    }

    if (analyze->parsed()) {
      const bool family_form = analyze->count("--n") != 0;
      if (family_form == !ana_sequence.empty()) {
        throw std::invalid_argument("analyze needs exactly one of --sequence or --n/--i/--j");
      }
      IntSequence s = family_form ? closed_form_hs(ana_n, ana_i, ana_j)
                                  : parse_sequence(ana_sequence);
      // Class H is defined for Hilbert-type sequences (positive, no internal
      // zeros, leading 1); report it as n/a otherwise.
      const bool hilbert_type = s.length() > 0 && s.at(0) == 1 && [&] {
        for (int k = 0; k < s.length(); ++k) {
          if (s.at(k) <= 0) return false;
        }
        return true;
      }();
      emit_shape(s, hilbert_type, !ana_text, out);
      return kExitPass;
    }

    if (slp->parsed()) return run_lefschetz_check(slp_cmd, LefschetzProperty::strong, out);
    if (wlp->parsed()) return run_lefschetz_check(wlp_cmd, LefschetzProperty::weak, out);

    if (witness->parsed()) {
      if (wit_fd->parsed()) {
        Json document{{"kind", "fd"}, {"d", fd_d}};
        try {
          const MultivariatePoly f = witness_fd(fd_d);
          document["f"] = to_text(f);
          document["degree"] = f.degree();
          document["cube_multiple_vanishes"] = true;
          out << document.dump(2) << "\n";
          return kExitPass;
        } catch (const std::logic_error& error) {
          document["cube_multiple_vanishes"] = false;
          document["error"] = error.what();
          out << document.dump(2) << "\n";
          return kExitFail;
        }
      }
      if (wit_n5->parsed()) {
        Json document{{"kind", "n5"}, {"d", n5_d}};
        try {
          const N5Witness pair = witness_n5(n5_d);
          document["kernel_f"] = to_text(pair.kernel_f);
          document["kernel_f_degree"] = pair.kernel_f.degree();
          document["perp_F"] = to_text(pair.perp_F, /*dual_variables=*/true);
          document["perp_F_degree"] = pair.perp_F.degree();
          document["verified"] = true;
          out << document.dump(2) << "\n";
          return kExitPass;
        } catch (const std::logic_error& error) {
          document["verified"] = false;
          document["error"] = error.what();
          out << document.dump(2) << "\n";
          return kExitFail;
        }
      }
      // identity sweep
      if (identity_d_max < 3) throw std::invalid_argument("--d-max must be at least 3");
      Json entries = Json::array();
      bool all_hold = true;
      for (int d = 3; d <= identity_d_max; ++d) {
        const bool holds = identity_check(d);
        all_hold = all_hold && holds;
        entries.push_back(Json{{"d", d}, {"holds", holds}});
      }
      Json document{{"kind", "identity"}, {"d_max", identity_d_max},
                    {"all_hold", all_hold}, {"checks", std::move(entries)}};
      out << document.dump(2) << "\n";
      return all_hold ? kExitPass : kExitFail;
    }

    if (search_cmd->parsed()) {
      spec.strategy = parse_strategy(strategy_text);
      spec.field = FieldSpec::parse(search_field);
      if (spec.strategy == SearchStrategy::random && search_cmd->count("--max-trials") == 0) {
        spec.max_trials = 10000;
      }
      const SearchCertificate certificate = search(spec);
      if (search_json) {
        out << to_json(certificate).dump(2) << "\n";
      } else if (certificate.ideal.has_value()) {
        out << "found after " << certificate.trials << " candidate(s): "
            << to_text(*certificate.ideal) << "\n";
        out << "SLP verified over " << certificate.field.to_string();
        if (certificate.recertified) out << ", re-certified over Q";
        out << "\n";
      } else {
        out << "no SLP ideal found after " << certificate.trials << " candidate(s)\n";
      }
      return certificate.ideal.has_value() ? kExitPass : kExitFail;
    }

    if (verify->parsed()) {
      const FixtureReport report =
          verify_paper_suite(parse_fixture_level(level_text), verify_threads);
      if (verify_json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        for (const auto& check : report.checks) {
          out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
          if (!check.detail.empty()) out << " — " << check.detail;
          out << "\n";
        }
        out << (report.pass ? "all checks passed" : "some checks FAILED") << "\n";
      }
      return report.pass ? kExitPass : kExitFail;
    }
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace lefschetz
