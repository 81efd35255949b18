#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkslope/diagram.hpp"
#include "linkslope/presentation.hpp"
#include "linkslope/seifert.hpp"

namespace linkslope {

/// One recorded value an entry must reproduce.
struct Expectation {
  enum class Quantity { Slope, Signature, Nullity, Alexander, LinkingNumber };
  Quantity quantity = Quantity::Slope;
  /// fox | symbolic | seifert | seifert-matrix | conway.
  std::string route = "fox";
  /// Character list text; empty means symbolic.
  std::string at;
  bool swap_roles = false;
  /// Slope: a rational function in t, t1, ... (`inf`, `undefined` also allowed).
  /// Alexander: a Laurent polynomial compared up to units.
  std::string value;
  int r = 0;
  /// Alexander orders of the sublink of colors 1..mu instead of the whole link.
  bool sublink = false;
  int signature = 0;
  int nullity = 0;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  /// pd | presentation | ccomplex: the primary payload.
  std::string kind;
  std::string description;
  /// PD text (no coloring), transforms applied in order, then the coloring.
  std::optional<std::string> pd;
  std::vector<std::string> transforms;
  std::optional<std::string> coloring;
  std::optional<std::string> presentation_json;
  std::optional<CComplexData> ccomplex;
  /// Conway potentials in s, s1, ..., for the conway route.
  std::optional<std::string> nabla_link;
  std::optional<std::string> nabla_sublink;
  std::vector<Expectation> expected;

  bool has_diagram() const { return pd.has_value(); }
  bool has_group() const { return pd.has_value() || presentation_json.has_value(); }
  ColoredDiagram diagram() const;
  /// Presentation from the diagram (possibly with K and color 1 exchanged) or the stored JSON.
  Presentation presentation(bool swap_roles = false) const;
  /// Presentation of the sublink of colors 1..mu (knot removed).
  Presentation sublink_presentation() const;
};

/// Applies `mirror`, `reverse cN` or `swap` to a diagram.
ColoredDiagram apply_transform(const ColoredDiagram& d, const std::string& transform);

class Catalog {
 public:
  static Catalog load(const std::string& path);
  static Catalog from_json(const std::string& text);
  /// SLOPE_CATALOG when set, else the path baked in at build time.
  static std::string default_path();
  static Catalog load_default() { return load(default_path()); }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Throws PreconditionError on an unknown name.
  const CatalogEntry& find(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

struct CheckResult {
  bool ok = false;
  std::string observed;
  std::string expected;
};

/// Recomputes one expectation of an entry.
CheckResult check_expectation(const CatalogEntry& entry, const Expectation& e);
std::string describe(const Expectation& e);

}  // namespace linkslope
