#include "linkslope/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linkslope/errors.hpp"

namespace linkslope {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::map<int, std::vector<EdgeEnd>> occurrences(const std::vector<Crossing>& crossings) {
  std::map<int, std::vector<EdgeEnd>> occ;
  for (std::size_t c = 0; c < crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) occ[crossings[c].labels[static_cast<std::size_t>(p)]].push_back({static_cast<int>(c), p});
  return occ;
}

EdgeEnd other_end(const std::vector<EdgeEnd>& ends, const EdgeEnd& e) { return ends[0] == e ? ends[1] : ends[0]; }

}  // namespace

ColoredDiagram ColoredDiagram::from_pd(std::vector<std::array<int, 4>> tuples, std::vector<int> loops,
                                       const ColoringSpec& coloring) {
  std::vector<Crossing> crossings;
  for (const auto& t : tuples) crossings.push_back({t, 0});
  auto occ = occurrences(crossings);
  for (const auto& [label, ends] : occ) {
    if (ends.size() != 2)
      throw ParseError("PD: edge label " + std::to_string(label) + " occurs " + std::to_string(ends.size()) +
                       " times, expected 2");
  }
  std::set<int> loop_set;
  for (int l : loops) {
    if (occ.count(l)) throw ParseError("PD: loop label " + std::to_string(l) + " also occurs in a crossing");
    if (!loop_set.insert(l).second) throw ParseError("PD: duplicate loop label " + std::to_string(l));
  }

  // Trace each strand cycle and decide its direction.
  std::map<int, EdgeEnd> heads;
  std::set<int> visited;
  for (const auto& [start, start_ends] : occ) {
    if (visited.count(start)) continue;
    std::vector<int> edges;
    std::vector<EdgeEnd> arrivals;
    int e = start;
    EdgeEnd arrive = start_ends[0];
    const EdgeEnd start_departure = start_ends[1];
    while (true) {
      edges.push_back(e);
      arrivals.push_back(arrive);
      visited.insert(e);
      EdgeEnd depart{arrive.crossing, (arrive.position + 2) % 4};
      int f = crossings[static_cast<std::size_t>(depart.crossing)].labels[static_cast<std::size_t>(depart.position)];
      if (f == start && depart == start_departure) break;
      if (visited.count(f)) throw ParseError("PD: strands do not close up consistently at label " + std::to_string(f));
      e = f;
      arrive = other_end(occ.at(f), depart);
    }
    int forward = 0, backward = 0;
    for (const auto& a : arrivals) {
      if (a.position == 0) ++forward;
      if (a.position == 2) ++backward;
    }
    if (forward && backward)
      throw ParseError("PD: component through label " + std::to_string(start) + " has inconsistent under-crossings");
    bool reverse = backward > 0;
    if (!forward && !backward && edges.size() >= 3) {
      // Only over-crossings: follow increasing labels from the least one.
      reverse = edges[1] != start + 1 && edges.back() == start + 1;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const EdgeEnd& a = arrivals[i];
      heads[edges[i]] = reverse ? other_end(occ.at(edges[i]), a) : a;
    }
  }

  ColoredDiagram d = build(std::move(crossings), std::move(loop_set), std::move(heads), {});
  d.apply_coloring(coloring);
  return d;
}

ColoredDiagram ColoredDiagram::build(std::vector<Crossing> crossings, std::set<int> loops, std::map<int, EdgeEnd> heads,
                                     std::vector<int> colors) {
  ColoredDiagram d;
  d.crossings_ = std::move(crossings);
  d.loops_ = std::move(loops);
  d.heads_ = std::move(heads);
  d.derive();
  if (!colors.empty()) {
    if (colors.size() != d.components_.size()) throw std::logic_error("ColoredDiagram: color count mismatch");
    d.colors_ = std::move(colors);
  }
  return d;
}

void ColoredDiagram::derive() {
  auto occ = occurrences(crossings_);
  tails_.clear();
  for (const auto& [label, ends] : occ) tails_[label] = other_end(ends, heads_.at(label));

  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    Crossing& x = crossings_[c];
    const int ci = static_cast<int>(c);
    if (!(heads_.at(x.labels[0]) == EdgeEnd{ci, 0}) || !(tails_.at(x.labels[2]) == EdgeEnd{ci, 2}))
      throw ParseError("PD: crossing " + std::to_string(c) + " does not start at its incoming under-edge");
    if (heads_.at(x.labels[3]) == EdgeEnd{ci, 3}) x.sign = 1;
    else if (heads_.at(x.labels[1]) == EdgeEnd{ci, 1}) x.sign = -1;
    else throw ParseError("PD: over strand of crossing " + std::to_string(c) + " is not oriented consistently");
  }

  // Components ordered by least label.
  components_.clear();
  edge_component_.clear();
  std::set<int> all_labels;
  for (const auto& [label, e] : heads_) all_labels.insert(label);
  all_labels.insert(loops_.begin(), loops_.end());
  for (int label : all_labels) {
    if (edge_component_.count(label)) continue;
    const int comp = static_cast<int>(components_.size());
    std::vector<int> edges;
    int e = label;
    while (true) {
      edges.push_back(e);
      edge_component_[e] = comp;
      if (loops_.count(e)) break;
      const EdgeEnd h = heads_.at(e);
      int f = crossings_[static_cast<std::size_t>(h.crossing)].labels[static_cast<std::size_t>((h.position + 2) % 4)];
      if (f == label) break;
      e = f;
    }
    components_.push_back(std::move(edges));
  }

  UnionFind uf;
  for (int label : all_labels) uf.find(label);
  for (const auto& x : crossings_) uf.unite(x.labels[1], x.labels[3]);
  std::map<int, int> root_to_arc;
  arc_of_edge_.clear();
  arc_component_.clear();
  for (int label : all_labels) {
    int r = uf.find(label);
    auto [it, inserted] = root_to_arc.try_emplace(r, static_cast<int>(arc_component_.size()));
    if (inserted) arc_component_.push_back(edge_component_.at(label));
    arc_of_edge_[label] = it->second;
  }
  colors_.assign(components_.size(), 0);
  std::iota(colors_.begin(), colors_.end(), 1);
}

void ColoredDiagram::apply_coloring(const ColoringSpec& spec) {
  const std::size_t n = components_.size();
  if (spec.empty()) {
    colors_.resize(n);
    std::iota(colors_.begin(), colors_.end(), 1);
    return;
  }
  std::vector<int> colors(n, -1);
  auto assign = [&](const std::string& name, int color) {
    int c = component_index(name);
    if (colors[static_cast<std::size_t>(c)] != -1) throw ParseError("coloring: component " + name + " colored twice");
    colors[static_cast<std::size_t>(c)] = color;
  };
  if (spec.knot) assign(*spec.knot, 0);
  int max_color = 0;
  for (const auto& [color, names] : spec.colors) {
    if (color < 1) throw ParseError("coloring: colors must be positive (use K for the knot)");
    if (names.empty()) throw ParseError("coloring: color " + std::to_string(color) + " has no components");
    for (const auto& name : names) assign(name, color);
    max_color = std::max(max_color, color);
  }
  for (std::size_t c = 0; c < n; ++c)
    if (colors[c] == -1) throw ParseError("coloring: component " + component_name(static_cast<int>(c)) + " is uncolored");
  for (int color = 1; color <= max_color; ++color)
    if (!spec.colors.count(color)) throw ParseError("coloring: not surjective, color " + std::to_string(color) + " unused");
  colors_ = std::move(colors);
}

int ColoredDiagram::mu() const {
  int m = 0;
  for (int c : colors_) m = std::max(m, c);
  return m;
}

std::optional<int> ColoredDiagram::knot_component() const {
  for (std::size_t c = 0; c < colors_.size(); ++c)
    if (colors_[c] == 0) return static_cast<int>(c);
  return std::nullopt;
}

std::optional<EdgeEnd> ColoredDiagram::head(int label) const {
  auto it = heads_.find(label);
  if (it == heads_.end()) return std::nullopt;
  return it->second;
}

int ColoredDiagram::component_index(std::string_view name) const {
  if (name.size() >= 2 && name[0] == 'c') {
    try {
      std::size_t used = 0;
      int k = std::stoi(std::string(name.substr(1)), &used);
      if (used == name.size() - 1 && k >= 1 && static_cast<std::size_t>(k) <= components_.size()) return k - 1;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown component '" + std::string(name) + "'");
}

int ColoredDiagram::linking_number(int c1, int c2) const {
  if (c1 == c2) throw PreconditionError("linking_number: components must differ");
  int total = 0;
  for (const auto& x : crossings_) {
    int under = edge_component_.at(x.labels[0]);
    int over = edge_component_.at(x.labels[1]);
    if ((under == c1 && over == c2) || (under == c2 && over == c1)) total += x.sign;
  }
  return total / 2;
}

int ColoredDiagram::writhe(int c) const {
  int total = 0;
  for (const auto& x : crossings_)
    if (edge_component_.at(x.labels[0]) == c && edge_component_.at(x.labels[1]) == c) total += x.sign;
  return total;
}

ColoredDiagram ColoredDiagram::mirror() const {
  std::vector<Crossing> crossings = crossings_;
  std::vector<int> shift(crossings.size());
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& l = crossings_[c].labels;
    // The former over strand becomes the under strand, entering at position 0.
    if (crossings_[c].sign > 0) {
      crossings[c].labels = {l[3], l[0], l[1], l[2]};
      shift[c] = 1;
    } else {
      crossings[c].labels = {l[1], l[2], l[3], l[0]};
      shift[c] = 3;
    }
  }
  std::map<int, EdgeEnd> heads;
  for (const auto& [label, h] : heads_)
    heads[label] = {h.crossing, (h.position + shift[static_cast<std::size_t>(h.crossing)]) % 4};
  return build(std::move(crossings), loops_, std::move(heads), colors_);
}

ColoredDiagram ColoredDiagram::reversed(int comp) const {
  std::vector<Crossing> crossings = crossings_;
  std::vector<int> shift(crossings.size(), 0);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& l = crossings_[c].labels;
    if (edge_component_.at(l[0]) == comp) {
      crossings[c].labels = {l[2], l[3], l[0], l[1]};
      shift[c] = 2;
    }
  }
  std::map<int, EdgeEnd> heads;
  for (const auto& [label, h] : heads_) {
    EdgeEnd e = edge_component_.at(label) == comp ? tails_.at(label) : h;
    heads[label] = {e.crossing, (e.position + shift[static_cast<std::size_t>(e.crossing)]) % 4};
  }
  return build(std::move(crossings), loops_, std::move(heads), colors_);
}

ColoredDiagram ColoredDiagram::without_components(const std::set<int>& removed) const {
  auto gone = [&](int label) { return removed.count(edge_component_.at(label)) != 0; };
  UnionFind uf;
  std::vector<int> kept;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& l = crossings_[c].labels;
    const bool under_gone = gone(l[0]);
    const bool over_gone = gone(l[1]);
    if (!under_gone && !over_gone) {
      kept.push_back(static_cast<int>(c));
    } else if (under_gone && !over_gone) {
      uf.unite(l[1], l[3]);
    } else if (!under_gone && over_gone) {
      uf.unite(l[0], l[2]);
    }
  }
  std::vector<int> new_index(crossings_.size(), -1);
  std::vector<Crossing> crossings;
  for (int c : kept) {
    new_index[static_cast<std::size_t>(c)] = static_cast<int>(crossings.size());
    Crossing x = crossings_[static_cast<std::size_t>(c)];
    for (auto& label : x.labels) label = uf.find(label);
    crossings.push_back(x);
  }
  std::map<int, EdgeEnd> heads;
  std::set<int> loops;
  std::set<int> groups;
  for (const auto& [label, h] : heads_) {
    if (gone(label)) continue;
    const int rep = uf.find(label);
    groups.insert(rep);
    const int nc = new_index[static_cast<std::size_t>(h.crossing)];
    if (nc >= 0) heads[rep] = {nc, h.position};
  }
  for (int rep : groups)
    if (!heads.count(rep)) loops.insert(rep);
  for (int l : loops_)
    if (!gone(l)) loops.insert(l);

  ColoredDiagram d = build(std::move(crossings), std::move(loops), std::move(heads), {});
  // Carry colors over through each surviving component's least label.
  std::set<int> surviving_colors;
  for (std::size_t c = 0; c < components_.size(); ++c)
    if (!removed.count(static_cast<int>(c)) && colors_[c] > 0) surviving_colors.insert(colors_[c]);
  std::map<int, int> renumber;
  int next = 1;
  for (int col : surviving_colors) renumber[col] = next++;
  renumber[0] = 0;
  for (std::size_t c = 0; c < d.components_.size(); ++c) {
    int label = d.components_[c].front();
    d.colors_[c] = renumber.at(colors_[static_cast<std::size_t>(edge_component_.at(label))]);
  }
  return d;
}

ColoredDiagram ColoredDiagram::without_color(int color) const {
  if (color < 1 || color > mu()) throw PreconditionError("without_color: no such color");
  std::set<int> removed;
  for (std::size_t c = 0; c < colors_.size(); ++c)
    if (colors_[c] == color) removed.insert(static_cast<int>(c));
  return without_components(removed);
}

ColoredDiagram ColoredDiagram::with_coloring(const ColoringSpec& coloring) const {
  ColoredDiagram d = *this;
  d.apply_coloring(coloring);
  return d;
}

ColoredDiagram ColoredDiagram::swapped_roles() const {
  auto k = knot_component();
  if (!k) throw PreconditionError("swap-roles: the diagram has no distinguished knot");
  int count = 0, other = -1;
  for (std::size_t c = 0; c < colors_.size(); ++c)
    if (colors_[c] == 1) {
      ++count;
      other = static_cast<int>(c);
    }
  if (count != 1) throw PreconditionError("swap-roles: color 1 must consist of exactly one component");
  ColoredDiagram d = *this;
  d.colors_[static_cast<std::size_t>(*k)] = 1;
  d.colors_[static_cast<std::size_t>(other)] = 0;
  return d;
}

std::string ColoredDiagram::to_string() const {
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const auto& x : crossings_) {
    out << (first ? "" : ", ") << "X[" << x.labels[0] << "," << x.labels[1] << "," << x.labels[2] << ","
        << x.labels[3] << "]";
    first = false;
  }
  for (int l : loops_) {
    out << (first ? "" : ", ") << "Loop[" << l << "]";
    first = false;
  }
  out << "] colors{";
  bool first_entry = true;
  if (auto k = knot_component()) {
    out << "K: " << component_name(*k);
    first_entry = false;
  }
  for (int color = 1; color <= mu(); ++color) {
    out << (first_entry ? "" : "; ") << color << ":";
    first_entry = false;
    bool first_name = true;
    for (std::size_t c = 0; c < colors_.size(); ++c) {
      if (colors_[c] != color) continue;
      out << (first_name ? " " : ", ") << component_name(static_cast<int>(c));
      first_name = false;
    }
  }
  out << "}";
  return out.str();
}

int meridian_generator(const ColoredDiagram& d, int c) { return d.arc_of_edge().at(d.component_edges(c).front()); }

Word longitude(const ColoredDiagram& d, int c) {
  Word w;
  for (int e : d.component_edges(c)) {
    auto h = d.head(e);
    if (!h || h->position != 0) continue;
    const Crossing& x = d.crossings()[static_cast<std::size_t>(h->crossing)];
    w.push_back({d.arc_of_edge().at(x.labels[1]), x.sign});
  }
  const int m = meridian_generator(d, c);
  const int writhe = d.writhe(c);
  for (int i = 0; i < std::abs(writhe); ++i) w.push_back({m, writhe > 0 ? -1 : 1});
  return free_reduce(w);
}

Presentation wirtinger(const ColoredDiagram& d) {
  Presentation p;
  p.mu = d.mu();
  const std::size_t n = d.arc_count();
  for (std::size_t a = 0; a < n; ++a) {
    p.generators.push_back("x" + std::to_string(a + 1));
    const int color = d.color_of(d.arc_component(static_cast<int>(a)));
    std::vector<int> img(p.nvars(), 0);
    img[static_cast<std::size_t>(color)] = 1;
    p.images.push_back(std::move(img));
    p.generator_color.push_back(color);
  }
  for (const auto& x : d.crossings()) {
    const auto& arc = d.arc_of_edge();
    const int a = arc.at(x.labels[0]);
    const int b = arc.at(x.labels[1]);
    const int c = arc.at(x.labels[2]);
    p.relators.push_back({{b, -x.sign}, {a, 1}, {b, x.sign}, {c, -1}});
  }
  if (auto k = d.knot_component()) {
    p.has_knot = true;
    p.meridian = {{meridian_generator(d, *k), 1}};
    p.longitude = longitude(d, *k);
  }
  return p;
}

}  // namespace linkslope
