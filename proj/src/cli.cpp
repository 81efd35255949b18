#include "linkslope/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "linkslope/catalog.hpp"
#include "linkslope/characters.hpp"
#include "linkslope/errors.hpp"
#include "linkslope/expression_parser.hpp"
#include "linkslope/fox.hpp"
#include "linkslope/linear_algebra.hpp"
#include "linkslope/parallel.hpp"
#include "linkslope/seifert.hpp"
#include "linkslope/splice.hpp"

namespace linkslope {

using json = nlohmann::json;

std::string format_decimal(double re, double im) {
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  re = clean(re);
  im = clean(im);
  std::ostringstream s;
  s << std::setprecision(12) << re;
  if (im != 0) s << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return s.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Everything a slope computation may draw on, from any of the input flags.
struct LinkInput {
  std::string label;
  std::optional<ColoredDiagram> diagram;
  std::optional<Presentation> group;
  std::optional<CComplexData> ccomplex;
  std::optional<std::string> nabla_link;
  std::optional<std::string> nabla_sublink;

  Presentation presentation(bool swap) const {
    if (diagram) return wirtinger(swap ? diagram->swapped_roles() : *diagram);
    if (!group) throw PreconditionError(label + ": this route needs a diagram or a group presentation");
    if (swap) throw PreconditionError("--swap-roles needs a diagram");
    return *group;
  }
  std::size_t mu(bool swap) const {
    if (diagram || group) return static_cast<std::size_t>(presentation(swap).mu);
    if (ccomplex) return static_cast<std::size_t>(ccomplex->mu);
    return 1;
  }
};

LinkInput from_entry(const CatalogEntry& e) {
  LinkInput in;
  in.label = e.name;
  if (e.pd) in.diagram = e.diagram();
  else if (e.presentation_json) in.group = parse_presentation_json(*e.presentation_json);
  in.ccomplex = e.ccomplex;
  in.nabla_link = e.nabla_link;
  in.nabla_sublink = e.nabla_sublink;
  return in;
}

struct InputFlags {
  std::string link, pd, presentation, ccomplex, nabla_link, nabla_sublink;
  void add_to(CLI::App* app) {
    app->add_option("--link", link, "catalog entry name");
    app->add_option("--pd", pd, "file with a PD code and optional colors{...} block");
    app->add_option("--presentation", presentation, "file with a group presentation in JSON");
    app->add_option("--ccomplex", ccomplex, "file with C-complex data in JSON");
    app->add_option("--nabla-link", nabla_link, "Conway potential of the whole link in s, s1, ...");
    app->add_option("--nabla-sublink", nabla_sublink, "Conway potential of the sublink L in s1, ...");
  }
  LinkInput load() const {
    const int given = !link.empty() + !pd.empty() + !presentation.empty() + !ccomplex.empty();
    if (given == 0) throw PreconditionError("give one of --link, --pd, --presentation, --ccomplex");
    if (given > 1) throw PreconditionError("--link, --pd, --presentation and --ccomplex are exclusive");
    LinkInput in;
    if (!link.empty()) {
      in = from_entry(Catalog::load_default().find(link));
    } else if (!pd.empty()) {
      in.label = pd;
      in.diagram = parse_pd(read_file(pd));
    } else if (!presentation.empty()) {
      in.label = presentation;
      in.group = parse_presentation_json(read_file(presentation));
    } else {
      in.label = ccomplex;
      in.ccomplex = parse_ccomplex_json(read_file(ccomplex));
    }
    if (!nabla_link.empty()) in.nabla_link = nabla_link;
    if (!nabla_sublink.empty()) in.nabla_sublink = nabla_sublink;
    return in;
  }
};

/// A name from the catalog, or else a PD file.
LinkInput resolve_link(const std::string& name) {
  const Catalog cat = Catalog::load_default();
  for (const auto& e : cat.entries())
    if (e.name == name) return from_entry(e);
  LinkInput in;
  in.label = name;
  in.diagram = parse_pd(read_file(name));
  return in;
}

std::vector<Character> characters_from(const std::string& text, std::size_t mu, bool symbolic_default) {
  if (text.empty()) {
    if (!symbolic_default) throw PreconditionError("--at is required for this route");
    return {Character::symbolic(mu)};
  }
  return parse_character_list(text);
}

json value_json(const SlopeValue& v, const std::vector<std::string>& names) {
  json j;
  switch (v.kind()) {
    case SlopeValue::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = v.to_string(names);
      if (!v.is_symbolic()) {
        const auto z = v.approximate();
        auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
        j["approx"] = {clean(z.real()), clean(z.imag())};
      }
      break;
    case SlopeValue::Kind::Infinity:
      j["kind"] = "infinity";
      j["value"] = "inf";
      break;
    case SlopeValue::Kind::Undefined:
      j["kind"] = "undefined";
      j["value"] = v.to_string();
      j["kernel_dim"] = v.kernel_dim();
      break;
  }
  return j;
}

std::string value_text(const SlopeValue& v, const std::vector<std::string>& names) {
  std::string s = v.to_string(names);
  if (v.is_finite() && !v.is_symbolic()) {
    const auto z = v.approximate();
    const std::string dec = format_decimal(z.real(), z.imag());
    if (dec != s) s += "  (~ " + dec + ")";
  }
  return s;
}

std::vector<SlopeOutcome> compute_slopes(const LinkInput& in, const std::string& route, bool swap,
                                        const std::vector<Character>& omegas) {
  if (route == "fox" || route == "symbolic") {
    const Presentation p = in.presentation(swap);
    return evaluate_slopes(p, omegas);
  }
  std::vector<SlopeOutcome> out;
  for (const auto& w : omegas) {
    SlopeOutcome o;
    try {
      if (route == "seifert") {
        if (!in.ccomplex) throw PreconditionError(in.label + ": the seifert route needs C-complex data");
        if (swap) throw PreconditionError("--swap-roles is not available on the seifert route");
        o.value = slope_c_complex(*in.ccomplex, w);
      } else if (route == "conway") {
        if (!in.nabla_link || !in.nabla_sublink)
          throw PreconditionError(in.label + ": the conway route needs --nabla-link and --nabla-sublink");
        const std::size_t nv = w.size() + 1;
        o.value = conway_slope(parse_rational_function(*in.nabla_link, nv, VariableFamily::S),
                               parse_rational_function(*in.nabla_sublink, nv, VariableFamily::S), w);
      } else {
        throw PreconditionError("unknown route '" + route + "' (fox, seifert, conway, symbolic)");
      }
    } catch (const PreconditionError& e) {
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

int cmd_slope(const InputFlags& flags, std::string route, const std::string& at, bool swap, bool as_json,
              const std::vector<std::string>& compare, std::ostream& out) {
  if (!compare.empty()) {
    if (route.empty() || route == "symbolic") route = "fox";
    const LinkInput a = resolve_link(compare[0]);
    const LinkInput b = resolve_link(compare[1]);
    if (at.empty()) throw PreconditionError("--compare needs --at");
    const std::vector<Character> omegas = parse_character_list(at);
    const auto sa = compute_slopes(a, route, swap, omegas);
    const auto sb = compute_slopes(b, route, swap, omegas);
    const auto names = t_variable_names(a.mu(swap) + 1);
    bool certified = false;
    json report = json::array();
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      json row;
      row["at"] = omegas[i].to_string();
      std::string verdict;
      if (!sa[i].value || !sb[i].value) {
        verdict = "no comparison: " + (sa[i].value ? sb[i].error : sa[i].error);
      } else {
        const bool differ = !(*sa[i].value == *sb[i].value) && !sa[i].value->is_undefined() &&
                            !sb[i].value->is_undefined();
        const Tristate root =
            omegas[i].kind() == Character::Kind::RootOfUnity ? is_concordance_root(omegas[i]) : Tristate::Unknown;
        row["concordance_root"] = to_string(root);
        row[a.label] = value_json(*sa[i].value, names);
        row[b.label] = value_json(*sb[i].value, names);
        if (differ && root == Tristate::No) {
          verdict = "slopes differ at a non-concordance root: not concordant";
          certified = true;
        } else if (differ) {
          verdict = "slopes differ, but the character may be a concordance root: inconclusive";
        } else {
          verdict = "slopes agree: inconclusive";
        }
        if (!as_json)
          out << "at " << omegas[i].to_string() << ": " << a.label << " = " << value_text(*sa[i].value, names) << ", "
              << b.label << " = " << value_text(*sb[i].value, names) << "; concordance root: " << to_string(root)
              << "\n";
      }
      row["verdict"] = verdict;
      if (!as_json) out << "  " << verdict << "\n";
      report.push_back(row);
    }
    if (as_json) out << json{{"compare", {a.label, b.label}}, {"route", route}, {"results", report}, {"certified", certified}}.dump(2) << "\n";
    else out << (certified ? "certified: the links are not concordant\n" : "no certificate of non-concordance\n");
    return certified ? kExitNotConcordant : kExitOk;
  }

  const LinkInput in = flags.load();
  if (route.empty()) route = in.diagram || in.group ? "fox" : "seifert";
  const bool symbolic_ok = route == "symbolic" || route == "seifert";
  if (route == "symbolic" && !at.empty()) throw PreconditionError("the symbolic route takes no --at");
  const std::size_t mu = in.mu(swap);
  const std::vector<Character> omegas = characters_from(at, mu, symbolic_ok);
  const auto results = compute_slopes(in, route, swap, omegas);
  const auto names = t_variable_names(mu + 1);
  bool failed = false;
  json rows = json::array();
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const std::string where = omegas[i].kind() == Character::Kind::Symbolic ? "symbolic" : omegas[i].to_string();
    json row;
    row["at"] = where;
    if (results[i].value) {
      row.update(value_json(*results[i].value, names));
      if (!as_json) out << where << ": " << value_text(*results[i].value, names) << "\n";
    } else {
      failed = true;
      row["error"] = results[i].error;
      if (!as_json) out << where << ": error: " << results[i].error << "\n";
    }
    rows.push_back(row);
  }
  if (as_json) out << json{{"input", in.label}, {"route", route}, {"swap_roles", swap}, {"results", rows}}.dump(2) << "\n";
  return failed ? kExitPrecondition : kExitOk;
}

int cmd_signature(const InputFlags& flags, const std::string& at, double tol, bool as_json, std::ostream& out) {
  const LinkInput in = flags.load();
  if (!in.ccomplex) throw PreconditionError(in.label + ": signatures are computed from C-complex data");
  if (at.empty()) throw PreconditionError("signature needs --at");
  json rows = json::array();
  for (const auto& w : parse_character_list(at)) {
    const SignatureNullity sn = signature_nullity(*in.ccomplex, w, tol);
    rows.push_back({{"at", w.to_string()}, {"signature", sn.signature}, {"nullity", sn.nullity}});
    if (!as_json) out << "at " << w.to_string() << ": signature " << sn.signature << ", nullity " << sn.nullity << "\n";
  }
  if (as_json) out << json{{"input", in.label}, {"results", rows}}.dump(2) << "\n";
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw ParseError("not an integer list: '" + text + "'");
    v.push_back(x);
  }
  if (v.empty()) throw ParseError("empty integer list");
  return v;
}

int cmd_defect(const std::string& lambda, const std::string& at, bool as_json, std::ostream& out) {
  if (lambda.empty() || at.empty()) throw PreconditionError("defect needs --lambda and --at");
  const std::vector<int> lv = parse_int_list(lambda);
  json rows = json::array();
  for (const auto& w : parse_character_list(at)) {
    const Integer d = defect(lv, w);
    rows.push_back({{"at", w.to_string()}, {"defect", d.get_si()}});
    if (!as_json) out << d.get_str() << "\n";
  }
  if (as_json) out << json{{"lambda", lv}, {"results", rows}}.dump(2) << "\n";
  return kExitOk;
}

ExtendedReal extended_from_json(const json& j) {
  if (j.is_number_integer()) return ExtendedReal(Rational(j.get<long>()));
  if (j.is_number()) return ExtendedReal(j.get<double>());
  return parse_extended_real(j.get<std::string>());
}

int cmd_splice(const std::string& path, bool as_json, std::ostream& out) {
  if (path.empty()) throw PreconditionError("splice needs an input JSON file");
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("splice JSON: ") + e.what(), e.byte);
  }
  try {
    const std::string mode = j.value("mode", std::string("admissible"));
    const json& a = j.at("first");
    const json& b = j.at("second");
    if (mode == "generic") {
      auto side = [](const json& s) {
        SpliceSide out;
        out.signature = s.at("signature").get<int>();
        out.nullity = s.value("nullity", 0);
        out.lambda = s.at("lambda").get<std::vector<int>>();
        out.omega = parse_character(s.at("omega").get<std::string>());
        return out;
      };
      const SpliceResult r = splice_sigma_generic(side(a), side(b));
      if (as_json) out << json{{"mode", mode}, {"signature", r.signature}, {"nullity", r.nullity}}.dump(2) << "\n";
      else out << "signature " << r.signature << "\nnullity " << r.nullity << "\n";
      return kExitOk;
    }
    if (mode != "admissible") throw ParseError("splice JSON: mode must be 'generic' or 'admissible'");
    auto side_defect = [](const json& s) {
      if (s.contains("defect")) return Integer(s["defect"].get<long>());
      return defect(s.at("lambda").get<std::vector<int>>(), parse_character(s.at("omega").get<std::string>()));
    };
    const AdmissibleSpliceResult r = splice_sigma_admissible(
        a.at("signature").get<int>(), b.at("signature").get<int>(), a.value("nullity", 0), b.value("nullity", 0),
        side_defect(a), side_defect(b), extended_from_json(a.at("slope")), extended_from_json(b.at("slope")));
    if (as_json) {
      out << json{{"mode", mode},
                  {"signature", r.signature},
                  {"delta_sigma", r.delta_sigma},
                  {"nullity_without_correction", r.nullity_without_correction},
                  {"nullity_correction", "pending"},
                  {"region", to_string(r.region)}}
                 .dump(2)
          << "\n";
    } else {
      out << "signature " << r.signature << " (delta_sigma " << r.delta_sigma << ")\n"
          << "nullity " << r.nullity_without_correction << " + correction (pending; slopes lie "
          << to_string(r.region) << " the hyperbola rho'rho''=1)\n";
    }
    return kExitOk;
  } catch (const json::exception& e) {
    throw ParseError(std::string("splice JSON: ") + e.what());
  }
}

int cmd_catalog(bool verify, bool as_json, std::ostream& out) {
  const Catalog cat = Catalog::load_default();
  json rows = json::array();
  bool all_ok = true;
  for (const auto& e : cat.entries()) {
    json row{{"name", e.name}, {"kind", e.kind}, {"description", e.description}, {"expected", e.expected.size()}};
    if (!as_json) out << std::left << std::setw(18) << e.name << std::setw(13) << e.kind << e.description << "\n";
    if (verify) {
      json checks = json::array();
      for (const auto& x : e.expected) {
        const CheckResult r = check_expectation(e, x);
        all_ok = all_ok && r.ok;
        checks.push_back({{"check", describe(x)}, {"ok", r.ok}, {"observed", r.observed}, {"expected", r.expected}});
        if (!as_json)
          out << "    " << (r.ok ? "ok   " : "FAIL ") << describe(x) << ": " << r.observed
              << (r.ok ? "" : "  (expected " + r.expected + ")") << "\n";
      }
      row["checks"] = checks;
    }
    rows.push_back(row);
  }
  if (as_json) out << json{{"path", Catalog::default_path()}, {"entries", rows}}.dump(2) << "\n";
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_alexander(const InputFlags& flags, int r, bool as_json, std::ostream& out) {
  const LinkInput in = flags.load();
  const Presentation p = in.presentation(false);
  const LaurentPoly d = alexander_order_parallel(p, r);
  const std::string s = d.to_string(t_variable_names(p.nvars()));
  if (as_json) out << json{{"input", in.label}, {"r", r}, {"order", s}}.dump(2) << "\n";
  else out << s << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slopes, signatures and splice terms of colored links"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  InputFlags slope_in, sig_in, alex_in;
  std::string route, at, lambda, splice_file;
  bool swap = false, verify = false;
  double tol = 1e-9;
  std::vector<std::string> compare;
  int r = 0;

  CLI::App* slope = app.add_subcommand("slope", "slope K/L at characters, or symbolically");
  slope_in.add_to(slope);
  slope->add_option("--route", route, "fox | seifert | conway | symbolic")
      ->check(CLI::IsMember({"fox", "seifert", "conway", "symbolic"}));
  slope->add_option("--at", at, "characters separated by ';', e.g. 'zeta(6)^1, -1; zeta(3)'");
  slope->add_flag("--swap-roles", swap, "exchange the knot with the single color-1 component");
  slope->add_option("--compare", compare, "two catalog names or PD files to compare")->expected(2);
  slope->add_option("--tol", tol, "numeric tolerance");
  slope->add_flag("--json", as_json, "machine-readable output");

  CLI::App* sig = app.add_subcommand("signature", "signature and nullity from C-complex data");
  sig_in.add_to(sig);
  sig->add_option("--at", at, "characters separated by ';'");
  sig->add_option("--tol", tol, "eigenvalue tolerance");
  sig->add_flag("--json", as_json, "machine-readable output");

  CLI::App* def = app.add_subcommand("defect", "defect of a linking vector at characters");
  def->add_option("--lambda", lambda, "linking vector, e.g. 1,1");
  def->add_option("--at", at, "characters separated by ';'");
  def->add_flag("--json", as_json, "machine-readable output");

  CLI::App* spl = app.add_subcommand("splice", "assemble splice signatures from precomputed invariants");
  spl->add_option("file", splice_file, "JSON with 'mode', 'first' and 'second'")->required();
  spl->add_flag("--json", as_json, "machine-readable output");

  CLI::App* cat = app.add_subcommand("catalog", "list the bundled examples");
  cat->add_flag("--verify", verify, "recompute every recorded value");
  cat->add_flag("--json", as_json, "machine-readable output");

  CLI::App* alex = app.add_subcommand("alexander", "order of the r-th elementary ideal");
  alex_in.add_to(alex);
  alex->add_option("--r", r, "ideal index");
  alex->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  const double saved_tol = numeric_zero_tolerance;
  numeric_zero_tolerance = tol;
  try {
    int code = kExitOk;
    if (*slope) code = cmd_slope(slope_in, route, at, swap, as_json, compare, out);
    else if (*sig) code = cmd_signature(sig_in, at, tol, as_json, out);
    else if (*def) code = cmd_defect(lambda, at, as_json, out);
    else if (*spl) code = cmd_splice(splice_file, as_json, out);
    else if (*cat) code = cmd_catalog(verify, as_json, out);
    else if (*alex) code = cmd_alexander(alex_in, r, as_json, out);
    numeric_zero_tolerance = saved_tol;
    return code;
  } catch (const ParseError& e) {
    numeric_zero_tolerance = saved_tol;
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    numeric_zero_tolerance = saved_tol;
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    numeric_zero_tolerance = saved_tol;
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace linkslope
