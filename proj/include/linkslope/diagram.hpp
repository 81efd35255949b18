#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linkslope/presentation.hpp"

namespace linkslope {

/// One PD crossing: edge labels listed counterclockwise starting from the
/// incoming under-edge, so labels[0] -> labels[2] is the under strand.
struct Crossing {
  std::array<int, 4> labels{};
  /// +1 when the over strand runs labels[3] -> labels[1], -1 otherwise.
  int sign = 0;
};

/// Where an edge ends: a crossing index and a position 0..3 in its tuple.
struct EdgeEnd {
  int crossing = -1;
  int position = -1;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Requested coloring: component names (`c1`, `c2`, ...) for the knot and each color.
struct ColoringSpec {
  std::optional<std::string> knot;
  std::map<int, std::vector<std::string>> colors;
  bool empty() const { return !knot && colors.empty(); }
};

/// An oriented PD diagram with a coloring of its components.
///
/// Components are numbered 0, 1, ... in order of their least edge label and
/// are addressed externally as c1, c2, ...; color 0 marks the distinguished
/// knot. A crossingless component is a loop carrying a single edge label.
class ColoredDiagram {
 public:
  /// Builds a diagram from PD tuples, inferring each component's orientation
  /// from its under-crossings (or from consecutive labels when it has none).
  static ColoredDiagram from_pd(std::vector<std::array<int, 4>> crossings, std::vector<int> loops,
                                const ColoringSpec& coloring = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t component_count() const { return components_.size(); }
  /// Edge labels of a component in orientation order, starting at the least label.
  const std::vector<int>& component_edges(int c) const { return components_.at(static_cast<std::size_t>(c)); }
  int component_of_edge(int label) const { return edge_component_.at(label); }
  const std::vector<int>& colors() const { return colors_; }
  int color_of(int component) const { return colors_.at(static_cast<std::size_t>(component)); }
  /// Number of nonzero colors.
  int mu() const;
  /// Component with color 0, if any.
  std::optional<int> knot_component() const;
  /// Head end of an edge (loops have none).
  std::optional<EdgeEnd> head(int label) const;
  bool is_loop(int label) const { return loops_.count(label) != 0; }

  /// `c3` -> 2. Throws ParseError on an unknown name.
  int component_index(std::string_view name) const;
  static std::string component_name(int index) { return "c" + std::to_string(index + 1); }

  int linking_number(int c1, int c2) const;
  /// Sum of signs of self-crossings of a component.
  int writhe(int c) const;

  /// All crossings switched.
  ColoredDiagram mirror() const;
  /// The given component's orientation reversed.
  ColoredDiagram reversed(int c) const;
  /// Components removed; colors above a vanished color are renumbered downward.
  ColoredDiagram without_components(const std::set<int>& removed) const;
  /// Deletes every component of the given color (1..mu) and renumbers later colors.
  ColoredDiagram without_color(int color) const;
  ColoredDiagram with_coloring(const ColoringSpec& coloring) const;
  /// Exchanges the knot (color 0) with color 1; requires exactly one color-1 component.
  ColoredDiagram swapped_roles() const;

  /// Arc index of each edge label; arcs ordered by least label.
  const std::map<int, int>& arc_of_edge() const { return arc_of_edge_; }
  std::size_t arc_count() const { return arc_component_.size(); }
  int arc_component(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }

  /// `PD[X[..], ...]` followed by a `colors{...}` block.
  std::string to_string() const;

 private:
  ColoredDiagram() = default;
  static ColoredDiagram build(std::vector<Crossing> crossings, std::set<int> loops, std::map<int, EdgeEnd> heads,
                              std::vector<int> colors_by_min_label_order);
  void derive();
  void apply_coloring(const ColoringSpec& spec);

  std::vector<Crossing> crossings_;
  std::set<int> loops_;
  std::map<int, EdgeEnd> heads_;
  std::map<int, EdgeEnd> tails_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> edge_component_;
  std::vector<int> colors_;
  std::map<int, int> arc_of_edge_;
  std::vector<int> arc_component_;
};

/// Parses `PD[X[1,4,2,3], X(3,6,4,5), Loop[7]]` with an optional
/// `colors{K: c1; 1: c2, c3}` block, or the JSON form
/// `{"crossings": [[1,4,2,3], ...], "loops": [7], "coloring": {"K": "c1", "1": ["c2"]}}`.
/// Without a coloring every component gets its own color and there is no knot.
ColoredDiagram parse_pd(std::string_view text);
ColoringSpec parse_coloring(std::string_view block);

/// Wirtinger presentation: one generator per arc, one relator per crossing.
/// The meridian and longitude of the knot are filled in when it exists.
Presentation wirtinger(const ColoredDiagram& d);

/// Generator index of the arc carrying the component's least edge label.
int meridian_generator(const ColoredDiagram& d, int c);

/// Seifert longitude of a component in Wirtinger generators: the
/// under-crossing letters met along a parallel copy starting at the least
/// label, then the meridian to the power minus the self-writhe.
Word longitude(const ColoredDiagram& d, int c);

}  // namespace linkslope
