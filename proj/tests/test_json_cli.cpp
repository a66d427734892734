#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/cli.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/json_io.hpp"
#include "lefschetz/sequences.hpp"

using namespace lefschetz;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ideal serialization round-trips through JSON") {
  const MonomialIdeal ideal = family_ideal(4, 2, 4);
  const Json document = to_json(ideal);
  CHECK(document.at("n") == 4);
  REQUIRE(document.at("gens").size() == 9);
  CHECK(document.at("gens")[0] == Json::array({2, 0, 0, 0}));  // leading generator x1^2
  CHECK(to_text(ideal_from_json(document)) == to_text(ideal));
  // Through an actual byte round trip as well.
  const Json reparsed = Json::parse(document.dump());
  CHECK(to_text(ideal_from_json(reparsed)) == to_text(ideal));
}

TEST_CASE("ideal deserialization rejects malformed documents") {
  CHECK_THROWS_AS(ideal_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(Json{{"n", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(Json{{"gens", Json::array()}}), std::invalid_argument);
  const Json short_row{{"n", 3}, {"gens", Json::array({Json::array({1, 0})})}};
  CHECK_THROWS_AS(ideal_from_json(short_row), std::invalid_argument);
}

TEST_CASE("sequence serialization keeps small entries numeric and big ones textual") {
  CHECK(to_json(IntSequence{1, 5, 8, 5, 1}).dump() == "[1,5,8,5,1]");
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 100);
  const Json document = to_json(IntSequence(std::vector<mpz_class>{1, big}));
  REQUIRE(document.size() == 2);
  CHECK(document[0] == 1);
  REQUIRE(document[1].is_string());
  CHECK(document[1].get<std::string>() == big.get_str());
}

TEST_CASE("cli family prints members by indices or generator count") {
  const std::string expected =
      "n=4; x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, x1*x4, x2*x4, x4^2\n";
  const CliResult by_indices = run({"family", "--n", "4", "--i", "2", "--j", "4"});
  CHECK(by_indices.code == 0);
  CHECK(by_indices.out == expected);
  const CliResult by_mu = run({"family", "--n", "4", "--mu", "9"});
  CHECK(by_mu.code == 0);
  CHECK(by_mu.out == expected);

  const CliResult json = run({"family", "--n", "4", "--mu", "9", "--json"});
  CHECK(json.code == 0);
  const Json document = Json::parse(json.out);
  CHECK(document.at("n") == 4);
  CHECK(document.at("mu") == 9);
  CHECK(document.at("text").get<std::string>() + "\n" == expected);

  CHECK(run({"family", "--n", "4", "--mu", "9", "--i", "2"}).code == 2);
  const CliResult missing = run({"family", "--n", "4", "--i", "1"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "error:"));
}

TEST_CASE("cli hilbert covers family parameters, inline ideals, fixtures, and files") {
  const CliResult family_form = run({"hilbert", "--n", "5", "--i", "1", "--j", "3"});
  CHECK(family_form.code == 0);
  CHECK(family_form.out == "[1,5,8,5,1]\n");

  const CliResult inline_form = run({"hilbert", "--ideal", "n=3; x1^3, x2^3, x3^3"});
  CHECK(inline_form.code == 0);
  CHECK(inline_form.out == "[1,3,6,7,6,3,1]\n");

  const CliResult fixture = run({"hilbert", "--ideal", "@sec5_J"});
  CHECK(fixture.code == 0);
  CHECK(fixture.out == "[1,3,6,10,15,21,28,36,40,41,39,34,27,19,12,5,1]\n");

  const std::string path = "cli_test_ideal.json";
  {
    std::ofstream file(path);
    file << R"({"n": 2, "gens": [[2,0],[1,1],[0,3]]})";
  }
  const CliResult from_file = run({"hilbert", "--ideal", path});
  std::remove(path.c_str());
  CHECK(from_file.code == 0);
  CHECK(from_file.out == "[1,2,1]\n");

  CHECK(run({"hilbert", "--n", "5", "--i", "1", "--j", "3", "--ideal", "@sec5_J"}).code == 2);
  CHECK(run({"hilbert"}).code == 2);
}

TEST_CASE("cli analyze reports shape predicates") {
  const CliResult text = run({"analyze", "--sequence", "1,4,1", "--text"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "unimodal:    yes"));
  CHECK(contains(text.out, "class H:     yes"));

  const CliResult json = run({"analyze", "--sequence", "2,1"});
  CHECK(json.code == 0);
  const Json document = Json::parse(json.out);
  CHECK(document.at("sequence") == Json::array({2, 1}));
  CHECK(document.at("unimodal") == true);
  // Class H only makes sense for Hilbert-type input (leading 1).
  CHECK(document.at("class_H").is_null());

  const CliResult family_form = run({"analyze", "--n", "6", "--i", "2", "--j", "4"});
  CHECK(family_form.code == 0);
  CHECK(Json::parse(family_form.out).at("class_H") == true);

  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--sequence", "1,2", "--n", "4", "--i", "1", "--j", "2"}).code == 2);
}

TEST_CASE("cli slp reports the mixed-cubic failure with its witness") {
  // (x1,x2)^3 + (x3^3): fails SLP at the cube map out of degree one.
  const std::string ideal = "n=3; x1^3, x1^2*x2, x1*x2^2, x2^3, x3^3";
  const CliResult text = run({"slp", "--ideal", ideal});
  CHECK(text.code == 1);
  CHECK(contains(text.out, "SLP over Q: FAIL"));
  CHECK(contains(text.out, "first failure: i=1 t=3"));
  CHECK(contains(text.out, "witness (kernel, i=1, t=3): x1 + x2 - x3"));

  const CliResult json = run({"slp", "--ideal", ideal, "--json"});
  CHECK(json.code == 1);
  const Json document = Json::parse(json.out);
  CHECK(document.at("property") == "SLP");
  CHECK(document.at("field") == "Q");
  CHECK(document.at("pass") == false);
  CHECK(document.at("socle_degree") == 4);
  CHECK(document.at("hilbert") == Json::array({1, 3, 6, 5, 3}));
  CHECK(document.at("witness").at("side") == "kernel");
  CHECK(document.at("witness").at("polynomial") == "x1 + x2 - x3");
  bool saw_failure = false;
  for (const auto& map : document.at("maps")) {
    if (map.at("i") == 1 && map.at("t") == 3) {
      saw_failure = true;
      CHECK(map.at("rank") == 2);
      CHECK(map.at("expected_rank") == 3);
      CHECK(map.at("full_rank") == false);
      CHECK(map.at("rank_exact") == true);
      CHECK(map.at("certificate") == "rational_elimination");
    }
  }
  CHECK(saw_failure);

  // Serial and default runs agree byte for byte.
  const CliResult serial = run({"slp", "--ideal", ideal, "--threads", "1"});
  CHECK(serial.out == text.out);
}

TEST_CASE("cli wlp and slp split on the same ideal over F_2") {
  const std::string ideal = "n=2; x1^2, x2^2";
  const CliResult weak = run({"wlp", "--ideal", ideal, "--field", "p:2"});
  CHECK(weak.code == 0);
  CHECK(contains(weak.out, "WLP over F_2: PASS"));
  // (x1+x2)^2 = 2*x1*x2 vanishes mod 2, so the strong property fails.
  const CliResult strong = run({"slp", "--ideal", ideal, "--field", "p:2"});
  CHECK(strong.code == 1);
  CHECK(contains(strong.out, "SLP over F_2: FAIL"));
}

TEST_CASE("cli rejects bad fields, fixtures, files, and usage") {
  CHECK(run({"slp", "--ideal", "n=2; x1^2, x2^2", "--field", "p:4"}).code == 2);
  const CliResult fixture = run({"hilbert", "--ideal", "@nope"});
  CHECK(fixture.code == 2);
  CHECK(contains(fixture.err, "unknown fixture"));
  const CliResult file = run({"hilbert", "--ideal", "no/such/file.txt"});
  CHECK(file.code == 2);
  CHECK(contains(file.err, "cannot open ideal file"));
  const CliResult bad_json = run({"hilbert", "--ideal", "{oops}"});
  CHECK(bad_json.code == 2);
  CHECK(contains(bad_json.err, "bad ideal JSON"));
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "slp"));
  CHECK(contains(help.out, "search"));
}

TEST_CASE("cli search output is stable and reports both outcomes") {
  const std::vector<std::string> args = {"search", "--n", "3", "--d", "3",
                                         "--mu", "5", "--json"};
  const CliResult first = run(args);
  const CliResult second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const Json document = Json::parse(first.out);
  CHECK(document.at("found") == true);
  CHECK(document.at("strategy") == "exhaustive");
  CHECK(document.at("trials") == 2);
  CHECK(document.at("field") == "F_32003");
  CHECK(document.at("ideal_text") == "n=3; x1^3, x1^2*x2, x2^3, x1^2*x3, x3^3");
  CHECK(document.at("report").at("pass") == true);
  CHECK(document.at("recertified_over_rationals") == false);

  const CliResult text = run({"search", "--n", "3", "--d", "3", "--mu", "5", "--recertify"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "found after 2 candidate(s): n=3; x1^3"));
  CHECK(contains(text.out, "re-certified over Q"));

  const CliResult exhausted =
      run({"search", "--n", "3", "--d", "3", "--mu", "5", "--max-trials", "1"});
  CHECK(exhausted.code == 1);
  CHECK(contains(exhausted.out, "no SLP ideal found after 1 candidate(s)"));
}

TEST_CASE("cli witness subcommands") {
  const CliResult fd = run({"witness", "fd", "--d", "4"});
  CHECK(fd.code == 0);
  const Json fd_doc = Json::parse(fd.out);
  // -3*y1^2 + 4*y1*y2 - 3*y2^2 under y1 -> x1 + x2, y2 -> x3.
  CHECK(fd_doc.at("f") ==
        "-3*x1^2 - 6*x1*x2 - 3*x2^2 + 4*x1*x3 + 4*x2*x3 - 3*x3^2");
  CHECK(fd_doc.at("degree") == 2);
  CHECK(fd_doc.at("cube_multiple_vanishes") == true);

  const CliResult n5 = run({"witness", "n5", "--d", "3"});
  CHECK(n5.code == 0);
  const Json n5_doc = Json::parse(n5.out);
  CHECK(n5_doc.at("verified") == true);
  CHECK(n5_doc.at("kernel_f_degree") == 4);
  CHECK(n5_doc.at("perp_F_degree") == 5);
  CHECK(contains(n5_doc.at("perp_F").get<std::string>(), "X1"));

  const CliResult identity = run({"witness", "identity", "--d-max", "6"});
  CHECK(identity.code == 0);
  const Json id_doc = Json::parse(identity.out);
  CHECK(id_doc.at("all_hold") == true);
  CHECK(id_doc.at("checks").size() == 4);
  CHECK(run({"witness", "identity", "--d-max", "2"}).code == 2);
  CHECK(run({"witness"}).code == 2);
}

TEST_CASE("cli verify-paper fast level passes") {
  const CliResult report = run({"verify-paper", "--level", "fast"});
  CHECK(report.code == 0);
  CHECK(contains(report.out, "[PASS]"));
  CHECK(!contains(report.out, "[FAIL]"));
  CHECK(contains(report.out, "all checks passed"));

  const CliResult json = run({"verify-paper", "--level", "fast", "--json"});
  CHECK(json.code == 0);
  const Json document = Json::parse(json.out);
  CHECK(document.at("level") == "fast");
  CHECK(document.at("pass") == true);
  CHECK(document.at("checks").size() >= 11);
  CHECK(run({"verify-paper", "--level", "medium"}).code == 2);
}
