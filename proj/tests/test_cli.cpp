#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "linkslope/cli.hpp"
#include "linkslope/expression_parser.hpp"
#include "linkslope/fox.hpp"
#include "support.hpp"

using namespace linkslope;
using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code == kExitOk);
  return json::parse(r.out);
}

std::filesystem::path scratch_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "linkslope-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("symbolic Whitehead slope") {
    const json j = run_json({"slope", "--link", "L5a1", "--route", "symbolic"});
    const std::string v = j["results"][0]["value"];
    CHECK(parse_rational_function(v, 2) == parse_rational_function("(1-t1)*(1-t1^-1)", 2));
  }

  TEST_CASE("pointwise slopes") {
    const Run r = run({"slope", "--link", "L7n1", "--route", "fox", "--at", "zeta(2)"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "2/3"));
    CHECK(contains(r.out, "0.666666"));
    const json j = run_json({"slope", "--link", "L7n1", "--swap-roles", "--at", "-1"});
    CHECK(j["results"][0]["value"] == "6");
  }

  TEST_CASE("role exchange on L10n2") {
    const json j = run_json({"slope", "--link", "L10n2", "--route", "symbolic", "--swap-roles"});
    const std::string v = j["results"][0]["value"];
    CHECK(parse_rational_function(v, 2) == parse_rational_function("-(t1-1)^4/(t1^4-3*t1^3+5*t1^2-3*t1+1)", 2));
    const json k = run_json({"slope", "--link", "L10n2", "--route", "symbolic"});
    CHECK(k["results"][0]["value"] == "0");
  }

  TEST_CASE("JSON report values round-trip") {
    const json j = run_json({"slope", "--link", "L11n353", "--at", "zeta(5), zeta(5)^2; zeta(7)^3, zeta(7)"});
    const Presentation p = support::group("L11n353");
    const auto chars = parse_character_list("zeta(5), zeta(5)^2; zeta(7)^3, zeta(7)");
    REQUIRE(j["results"].size() == chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const SlopeValue s = slope_at(p, chars[i]);
      const json& row = j["results"][i];
      CHECK(row["value"] == s.to_string());
      CHECK(row["approx"][0].get<double>() == doctest::Approx(s.approximate().real()).epsilon(1e-12));
      CHECK(row["approx"][1].get<double>() == doctest::Approx(0.0));
      const json again = json::parse(row.dump());
      CHECK(again == row);
    }
    const json sym = run_json({"slope", "--link", "L11n384", "--route", "symbolic"});
    const std::string v = sym["results"][0]["value"];
    CHECK(parse_rational_function(v, 3) == slope_symbolic(support::group("L11n384")).symbolic());
  }

  TEST_CASE("defect and catalog") {
    const Run d = run({"defect", "--lambda", "1,1", "--at", "zeta(2),zeta(2)"});
    CHECK(d.code == kExitOk);
    CHECK(contains(d.out, "0"));
    const json dj = run_json({"defect", "--lambda", "1,1", "--at", "zeta(3),zeta(3)"});
    CHECK(dj["results"][0]["defect"] == -1);
    const json cat = run_json({"catalog"});
    CHECK(cat["entries"].size() >= 8);
    const Run verify = run({"catalog", "--verify"});
    CHECK(verify.code == kExitOk);
  }

  TEST_CASE("signature from a C-complex file") {
    const auto path = scratch_file("hopf.json", R"({"mu": 1, "rank": 1, "thetas": {"+": [[-1]]}, "kappa": [0], "b0": 1})");
    const json j = run_json({"signature", "--ccomplex", path.string(), "--at", "zeta(2)"});
    CHECK(j["results"][0]["signature"] == -1);
    CHECK(j["results"][0]["nullity"] == 0);
    const Run h = run({"signature", "--ccomplex", path.string(), "--at", "zeta(2)"});
    CHECK(contains(h.out, "signature -1"));
  }

  TEST_CASE("slope from PD and presentation files") {
    const auto pd = scratch_file("l4a1.pd", *support::entry("L4a1").pd + " colors{K: c1; 1: c2}");
    const json a = run_json({"slope", "--pd", pd.string(), "--at", "-1"});
    CHECK(a["results"][0]["value"] == "-2");
    const auto pres = scratch_file("wh.json", support::whitehead_json);
    const json b = run_json({"slope", "--presentation", pres.string(), "--route", "symbolic"});
    CHECK(parse_rational_function(b["results"][0]["value"].get<std::string>(), 2) ==
          parse_rational_function("(1-t1)*(1-t1^-1)", 2));
  }

  TEST_CASE("conway and seifert routes") {
    const json c = run_json({"slope", "--link", "L5a1", "--route", "conway", "--at", "-1"});
    CHECK(c["results"][0]["value"] == "4");
    const json s = run_json({"slope", "--link", "twist-family-2", "--route", "seifert", "--at", "-1"});
    CHECK(s["results"][0]["value"] == "-4/5");
    const json n = run_json({"slope", "--link", "L5a1", "--route", "conway", "--nabla-link",
                             "(s-s^-1)*(s1-s1^-1)", "--nabla-sublink", "1/(s1-s1^-1)", "--at", "zeta(3)"});
    CHECK(n["results"][0]["value"] == "3");
  }

  TEST_CASE("alexander order") {
    const json j = run_json({"alexander", "--link", "L11n353"});
    CHECK(are_associates(parse_laurent(j["order"].get<std::string>(), 3), parse_laurent("(t2-1)*(t-1)^3*(t1-1)", 3)));
  }

  TEST_CASE("non-concordance certificate") {
    const Run r = run({"slope", "--compare", "L4a1", "L7n1", "--at", "-1"});
    CHECK(r.code == kExitNotConcordant);
    CHECK(contains(r.out, "not concordant"));
    const Run root = run({"slope", "--compare", "L5a1", "split-unlink", "--at", "zeta(6)"});
    CHECK(root.code == kExitOk);
    const Run same = run({"slope", "--compare", "L5a1", "L5a1", "--at", "zeta(5)"});
    CHECK(same.code == kExitOk);
    const Run cert = run({"slope", "--compare", "L5a1", "split-unlink", "--at", "zeta(5)"});
    CHECK(cert.code == kExitNotConcordant);
  }

  TEST_CASE("splice reports") {
    const auto g = scratch_file("generic.json", R"j({"mode": "generic",
      "first": {"signature": 2, "nullity": 1, "lambda": [1, 1], "omega": "zeta(3)^2, zeta(3)^2"},
      "second": {"signature": -1, "nullity": 2, "lambda": [1, 1], "omega": "zeta(3), zeta(3)"}})j");
    const json a = run_json({"splice", g.string()});
    CHECK(a["signature"] == 0);
    CHECK(a["nullity"] == 3);
    const auto ad = scratch_file("admissible.json", R"j({"mode": "admissible",
      "first": {"signature": 1, "nullity": 0, "defect": 0, "slope": "inf"},
      "second": {"signature": 0, "nullity": 1, "lambda": [0], "omega": "-1", "slope": "inf"}})j");
    const json b = run_json({"splice", ad.string()});
    CHECK(b["signature"] == 2);
    CHECK(b["delta_sigma"] == 1);
    CHECK(b["nullity_correction"] == "pending");
    const auto bad = scratch_file("bad.json", R"j({"mode": "generic",
      "first": {"signature": 0, "lambda": [0], "omega": "-1"}, "second": {"signature": 0, "lambda": [0], "omega": "-1"}})j");
    CHECK(run({"splice", bad.string()}).code == kExitPrecondition);
  }

  TEST_CASE("exit codes for bad input") {
    CHECK(run({"slope", "--link", "L4a1", "--at", "zeta(3)"}).code == kExitPrecondition);
    CHECK(run({"slope", "--link", "no-such-link"}).code == kExitPrecondition);
    CHECK(run({"slope", "--pd", "/nonexistent/file.pd"}).code == kExitPrecondition);
    CHECK(run({"slope", "--link", "L4a1", "--route", "symbolic"}).code == kExitPrecondition);
    const auto bad = scratch_file("bad.pd", "PD[X[1,2,3]]");
    CHECK(run({"slope", "--pd", bad.string(), "--at", "-1"}).code == kExitParse);
    CHECK(run({"slope", "--link", "L5a1", "--at", "zeta(5"}).code == kExitParse);
    CHECK(run({"slope", "--no-such-flag"}).code == kExitParse);
    const Run r = run({"slope", "--link", "L4a1", "--at", "zeta(3)"});
    CHECK(contains(r.out + r.err, "not admissible"));
  }

  TEST_CASE("catalog path override") {
    const auto path = scratch_file("catalog.json", R"({"entries": [{"name": "only", "kind": "ccomplex",
      "ccomplex": {"mu": 1, "rank": 1, "thetas": {"+": [[1]]}, "kappa": [0]},
      "expected": [{"quantity": "signature", "at": "-1", "signature": 1, "nullity": 0}]}]})");
    setenv("SLOPE_CATALOG", path.c_str(), 1);
    const Run listing = run({"catalog", "--json"});
    const Run verify = run({"catalog", "--verify"});
    const Run missing = run({"slope", "--link", "L5a1"});
    unsetenv("SLOPE_CATALOG");
    REQUIRE(listing.code == kExitOk);
    const json j = json::parse(listing.out);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["name"] == "only");
    CHECK(verify.code == kExitOk);
    CHECK(missing.code == kExitPrecondition);
    CHECK(run({"catalog", "--json"}).code == kExitOk);
  }
}
