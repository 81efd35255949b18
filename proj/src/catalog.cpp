#include "linkslope/catalog.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "linkslope/errors.hpp"
#include "linkslope/evaluation.hpp"
#include "linkslope/expression_parser.hpp"
#include "linkslope/fox.hpp"

#ifndef LINKSLOPE_CATALOG_PATH
#define LINKSLOPE_CATALOG_PATH "data/catalog.json"
#endif

namespace linkslope {

using json = nlohmann::json;

ColoredDiagram apply_transform(const ColoredDiagram& d, const std::string& transform) {
  if (transform == "mirror") return d.mirror();
  if (transform == "swap") return d.swapped_roles();
  if (transform.rfind("reverse ", 0) == 0) return d.reversed(d.component_index(transform.substr(8)));
  throw ParseError("unknown diagram transform '" + transform + "'");
}

ColoredDiagram CatalogEntry::diagram() const {
  if (!pd) throw PreconditionError("catalog entry " + name + " has no diagram");
  ColoredDiagram d = parse_pd(*pd);
  for (const auto& t : transforms) d = apply_transform(d, t);
  if (coloring) d = d.with_coloring(parse_coloring("colors{" + *coloring + "}"));
  return d;
}

Presentation CatalogEntry::presentation(bool swap_roles) const {
  if (pd) return wirtinger(swap_roles ? diagram().swapped_roles() : diagram());
  if (!presentation_json) throw PreconditionError("catalog entry " + name + " has no group presentation");
  if (swap_roles) throw PreconditionError("role exchange needs a diagram");
  return parse_presentation_json(*presentation_json);
}

Presentation CatalogEntry::sublink_presentation() const {
  const ColoredDiagram d = diagram();
  const auto k = d.knot_component();
  if (!k) return wirtinger(d);
  return wirtinger(d.without_components({*k}));
}

namespace {

Expectation parse_expectation(const json& j) {
  Expectation e;
  const std::string q = j.at("quantity").get<std::string>();
  if (q == "slope") e.quantity = Expectation::Quantity::Slope;
  else if (q == "signature") e.quantity = Expectation::Quantity::Signature;
  else if (q == "nullity") e.quantity = Expectation::Quantity::Nullity;
  else if (q == "alexander") e.quantity = Expectation::Quantity::Alexander;
  else if (q == "linking") e.quantity = Expectation::Quantity::LinkingNumber;
  else throw ParseError("catalog: unknown quantity '" + q + "'");
  e.route = j.value("route", std::string(e.quantity == Expectation::Quantity::Signature ? "seifert" : "fox"));
  e.at = j.value("at", std::string());
  e.swap_roles = j.value("swap_roles", false);
  if (j.contains("value")) e.value = j["value"].is_string() ? j["value"].get<std::string>() : j["value"].dump();
  e.r = j.value("r", 0);
  e.sublink = j.value("sublink", false);
  e.signature = j.value("signature", 0);
  e.nullity = j.value("nullity", 0);
  e.note = j.value("note", std::string());
  return e;
}

CatalogEntry parse_entry(const json& j) {
  CatalogEntry c;
  c.name = j.at("name").get<std::string>();
  c.kind = j.at("kind").get<std::string>();
  c.description = j.value("description", std::string());
  if (j.contains("pd")) c.pd = j["pd"].get<std::string>();
  if (j.contains("transforms")) c.transforms = j["transforms"].get<std::vector<std::string>>();
  if (j.contains("coloring")) c.coloring = j["coloring"].get<std::string>();
  if (j.contains("presentation")) c.presentation_json = j["presentation"].dump();
  if (j.contains("ccomplex")) c.ccomplex = parse_ccomplex_json(j["ccomplex"].dump());
  if (j.contains("conway")) {
    c.nabla_link = j["conway"].at("link").get<std::string>();
    c.nabla_sublink = j["conway"].at("sublink").get<std::string>();
  }
  if (j.contains("expected"))
    for (const auto& e : j["expected"]) c.expected.push_back(parse_expectation(e));
  const bool payload_ok = (c.kind == "pd" && c.pd) || (c.kind == "presentation" && c.presentation_json) ||
                          (c.kind == "ccomplex" && c.ccomplex);
  if (!payload_ok) throw ParseError("catalog entry " + c.name + ": missing payload for kind '" + c.kind + "'");
  return c;
}

}  // namespace

Catalog Catalog::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog JSON: ") + e.what(), e.byte);
  }
  Catalog cat;
  std::set<std::string> names;
  try {
    for (const auto& e : j.at("entries")) {
      cat.entries_.push_back(parse_entry(e));
      if (!names.insert(cat.entries_.back().name).second)
        throw ParseError("catalog: duplicate entry " + cat.entries_.back().name);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog JSON: ") + e.what());
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("SLOPE_CATALOG"); env && *env) return env;
  return LINKSLOPE_CATALOG_PATH;
}

const CatalogEntry& Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw PreconditionError("no catalog entry named '" + name + "'");
}

std::string describe(const Expectation& e) {
  std::string s;
  switch (e.quantity) {
    case Expectation::Quantity::Slope:
      s = "slope[" + e.route + (e.swap_roles ? ",swap" : "") + "]" + (e.at.empty() ? "" : " at " + e.at);
      break;
    case Expectation::Quantity::Signature:
      s = "signature at " + e.at;
      break;
    case Expectation::Quantity::Nullity:
      s = "nullity[" + e.route + "] at " + e.at;
      break;
    case Expectation::Quantity::Alexander:
      s = std::string("alexander order r=") + std::to_string(e.r) + (e.sublink ? " (sublink)" : "");
      break;
    case Expectation::Quantity::LinkingNumber:
      s = "linking vector";
      break;
  }
  return s;
}

namespace {

SlopeValue compute_slope(const CatalogEntry& entry, const Expectation& e, const Character& omega) {
  if (e.route == "fox" || e.route == "symbolic") return slope_at(entry.presentation(e.swap_roles), omega);
  if (!entry.ccomplex && e.route != "conway") throw PreconditionError("route " + e.route + " needs a C-complex datum");
  if (e.route == "seifert") return slope_c_complex(*entry.ccomplex, omega);
  if (e.route == "seifert-matrix") {
    if (entry.ccomplex->mu != 1) throw PreconditionError("seifert-matrix route needs one color");
    return slope_seifert(entry.ccomplex->thetas.at("+"), entry.ccomplex->kappa, omega);
  }
  if (e.route == "conway") {
    if (!entry.nabla_link || !entry.nabla_sublink) throw PreconditionError("conway route needs potentials");
    const std::size_t nv = omega.size() + 1;
    return conway_slope(parse_rational_function(*entry.nabla_link, nv, VariableFamily::S),
                        parse_rational_function(*entry.nabla_sublink, nv, VariableFamily::S), omega);
  }
  throw PreconditionError("unknown route '" + e.route + "'");
}

bool slope_matches(const SlopeValue& got, const std::string& expected, const Character& omega) {
  if (expected == "inf") return got.is_infinity();
  if (expected.rfind("undefined", 0) == 0) {
    if (!got.is_undefined()) return false;
    return expected == "undefined" || expected == got.to_string();
  }
  if (!got.is_finite()) return false;
  const std::size_t nv = omega.size() + 1;
  const RationalFunction f = parse_rational_function(expected, nv);
  if (omega.kind() == Character::Kind::Symbolic) return got.is_symbolic() && got.symbolic() == f;
  std::vector<CyclotomicElement> pt{CyclotomicElement(Rational(1))};
  for (const auto& w : omega.exact_values()) pt.push_back(w);
  return got.is_exact() && got.exact() == rational_eval(f, pt);
}

}  // namespace

CheckResult check_expectation(const CatalogEntry& entry, const Expectation& e) {
  CheckResult r;
  r.expected = e.value;
  try {
    switch (e.quantity) {
      case Expectation::Quantity::Slope: {
        std::size_t mu = entry.ccomplex ? static_cast<std::size_t>(entry.ccomplex->mu) : 0;
        if (entry.has_group()) mu = static_cast<std::size_t>(entry.presentation(e.swap_roles).mu);
        const Character omega = e.at.empty() ? Character::symbolic(mu) : parse_character(e.at);
        const SlopeValue got = compute_slope(entry, e, omega);
        r.observed = got.to_string(t_variable_names(mu + 1));
        r.ok = slope_matches(got, e.value, omega);
        break;
      }
      case Expectation::Quantity::Signature: {
        const SignatureNullity sn = signature_nullity(*entry.ccomplex, parse_character(e.at));
        r.expected = "(" + std::to_string(e.signature) + ", " + std::to_string(e.nullity) + ")";
        r.observed = "(" + std::to_string(sn.signature) + ", " + std::to_string(sn.nullity) + ")";
        r.ok = sn.signature == e.signature && sn.nullity == e.nullity;
        break;
      }
      case Expectation::Quantity::Nullity: {
        int n = 0;
        if (e.route == "seifert") n = signature_nullity(*entry.ccomplex, parse_character(e.at)).nullity;
        else n = nullity_at(entry.presentation(e.swap_roles), parse_character(e.at));
        r.expected = std::to_string(e.nullity);
        r.observed = std::to_string(n);
        r.ok = n == e.nullity;
        break;
      }
      case Expectation::Quantity::Alexander: {
        const Presentation p = e.sublink ? entry.sublink_presentation() : entry.presentation();
        const LaurentPoly got = alexander_order(p, e.r);
        const LaurentPoly want = parse_laurent(e.value, p.nvars());
        r.observed = got.to_string(t_variable_names(p.nvars()));
        r.ok = got.is_zero() ? want.is_zero() : (!want.is_zero() && are_associates(got, want));
        break;
      }
      case Expectation::Quantity::LinkingNumber: {
        const auto lv = entry.presentation(e.swap_roles).linking_vector();
        r.observed.clear();
        for (std::size_t i = 0; i < lv.size(); ++i) r.observed += (i ? "," : "") + std::to_string(lv[i]);
        r.ok = r.observed == e.value;
        break;
      }
    }
  } catch (const std::exception& ex) {
    r.ok = false;
    r.observed = std::string("error: ") + ex.what();
  }
  return r;
}

}  // namespace linkslope
