#include "linkslope/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <json.hpp>
#include <sstream>

#include "linkslope/errors.hpp"

namespace linkslope {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.exp = -l.exp;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (const auto& l : w) {
    if (!r.empty() && r.back().gen == l.gen && r.back().exp == -l.exp) r.pop_back();
    else r.push_back(l);
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a].gen == r[b - 1].gen && r[a].exp == -r[b - 1].exp) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

std::vector<int> Presentation::image(const Word& w) const {
  std::vector<int> v(nvars(), 0);
  for (const auto& l : w) {
    const auto& img = images.at(static_cast<std::size_t>(l.gen));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += l.exp * img[i];
  }
  return v;
}

std::vector<int> Presentation::linking_vector() const {
  std::vector<int> v = image(longitude);
  return std::vector<int>(v.begin() + 1, v.end());
}

void Presentation::validate() const {
  if (images.size() != generators.size() || generator_color.size() != generators.size())
    throw PreconditionError("presentation: generator data has inconsistent length");
  for (const auto& img : images)
    if (img.size() != nvars()) throw PreconditionError("presentation: image vector has the wrong length");
  for (std::size_t r = 0; r < relators.size(); ++r) {
    for (const auto& l : relators[r])
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generators.size())
        throw PreconditionError("presentation: relator uses an unknown generator");
    for (int x : image(relators[r]))
      if (x != 0)
        throw PreconditionError("presentation: relator " + std::to_string(r + 1) + " (" + word_to_string(relators[r]) +
                                ") does not abelianize to zero");
  }
  if (has_knot) {
    std::vector<int> m = image(meridian);
    std::vector<int> e0(nvars(), 0);
    e0[0] = 1;
    if (m != e0) throw PreconditionError("presentation: the meridian does not map to the knot's color");
    if (image(longitude)[0] != 0)
      throw PreconditionError("presentation: the longitude has nonzero linking number with the knot");
  }
}

std::string Presentation::word_to_string(const Word& w) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << generators.at(static_cast<std::size_t>(w[i].gen));
    if (w[i].exp != 1) out << "^" << w[i].exp;
  }
  return out.str();
}

Word parse_word(const Presentation& p, std::string_view text) {
  auto lookup = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      if (p.generators[i] == name) return static_cast<int>(i);
    return -1;
  };
  const bool single_chars =
      std::all_of(p.generators.begin(), p.generators.end(), [](const std::string& g) { return g.size() == 1; });
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int power = 1;
    std::string base = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      base = token.substr(0, caret);
      try {
        std::size_t used = 0;
        power = std::stoi(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("exponent");
      } catch (const std::exception&) {
        throw ParseError("word: bad exponent in token '" + token + "'");
      }
    }
    int g = lookup(base);
    if (g < 0 && !base.empty() && std::isupper(static_cast<unsigned char>(base[0]))) {
      std::string lower = base;
      lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
      g = lookup(lower);
      if (g >= 0) power = -power;
    }
    if (g < 0 && single_chars && power == 1) {
      // Concatenated single-letter generators such as `abAB`.
      for (char c : base) {
        int h = lookup(std::string(1, c));
        int e = 1;
        if (h < 0 && std::isupper(static_cast<unsigned char>(c))) {
          h = lookup(std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c)))));
          e = -1;
        }
        if (h < 0) throw ParseError("word: unknown generator in token '" + token + "'");
        w.push_back({h, e});
      }
      continue;
    }
    if (g < 0) throw ParseError("word: unknown generator '" + base + "'");
    for (int i = 0; i < std::abs(power); ++i) w.push_back({g, power > 0 ? 1 : -1});
  }
  return w;
}

Presentation parse_presentation_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what(), e.byte);
  }
  Presentation p;
  try {
    for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
    const auto& colors = j.at("colors");
    if (!colors.is_array() || colors.size() != p.generators.size())
      throw ParseError("presentation JSON: 'colors' must list one entry per generator");
    int mu = j.contains("mu") ? j["mu"].get<int>() : 0;
    if (!j.contains("mu")) {
      for (const auto& c : colors) {
        if (c.is_number_integer()) mu = std::max(mu, c.get<int>());
        else if (c.is_array()) mu = std::max(mu, static_cast<int>(c.size()) - 1);
      }
    }
    p.mu = mu;
    for (const auto& c : colors) {
      std::vector<int> img(p.nvars(), 0);
      int color = -1;
      if (c.is_number_integer()) {
        color = c.get<int>();
        if (color < 0 || color > mu) throw ParseError("presentation JSON: color out of range");
        img[static_cast<std::size_t>(color)] = 1;
      } else if (c.is_array()) {
        if (c.size() != p.nvars()) throw ParseError("presentation JSON: image arrays need mu+1 entries");
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = c[i].get<int>();
      } else if (!c.is_null()) {
        throw ParseError("presentation JSON: color entries are integers, arrays, or null");
      }
      p.images.push_back(std::move(img));
      p.generator_color.push_back(color);
    }
    for (const auto& r : j.at("relators")) p.relators.push_back(parse_word(p, r.get<std::string>()));
    if (j.contains("meridian") && !j["meridian"].is_null()) {
      p.has_knot = true;
      p.meridian = parse_word(p, j["meridian"].get<std::string>());
      p.longitude = parse_word(p, j.value("longitude", std::string()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
  try {
    p.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["generators"] = p.generators;
  j["mu"] = p.mu;
  nlohmann::json colors = nlohmann::json::array();
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (p.generator_color[g] >= 0) colors.push_back(p.generator_color[g]);
    else colors.push_back(p.images[g]);
  }
  j["colors"] = colors;
  // Inverses are written with an explicit exponent so any generator name round-trips.
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators) rels.push_back(p.word_to_string(r));
  j["relators"] = rels;
  if (p.has_knot) {
    j["meridian"] = p.word_to_string(p.meridian);
    j["longitude"] = p.word_to_string(p.longitude);
  }
  return j.dump(2);
}

namespace {

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  const Word inv = inverse(replacement);
  for (const auto& l : w) {
    if (l.gen != gen) out.push_back(l);
    else {
      const Word& r = l.exp > 0 ? replacement : inv;
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return free_reduce(out);
}

Word reindex(const Word& w, int removed) {
  Word out = w;
  for (auto& l : out)
    if (l.gen > removed) --l.gen;
  return out;
}

}  // namespace

Presentation tietze_simplify(const Presentation& input) {
  Presentation p = input;
  for (auto& r : p.relators) r = cyclic_reduce(r);
  p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(), [](const Word& w) { return w.empty(); }),
                   p.relators.end());
  while (true) {
    std::vector<std::size_t> order(p.relators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p.relators[a].size() < p.relators[b].size(); });
    int chosen_rel = -1, chosen_gen = -1;
    for (std::size_t idx : order) {
      std::map<int, int> counts;
      for (const auto& l : p.relators[idx]) ++counts[l.gen];
      for (const auto& l : p.relators[idx]) {
        if (counts[l.gen] == 1) {
          chosen_rel = static_cast<int>(idx);
          chosen_gen = l.gen;
          break;
        }
      }
      if (chosen_rel >= 0) break;
    }
    if (chosen_rel < 0) break;

    // r = u g^e v, so g = u^{-1} v^{-1} when e = 1 and g = v u when e = -1.
    const Word r = p.relators[static_cast<std::size_t>(chosen_rel)];
    std::size_t pos = 0;
    while (r[pos].gen != chosen_gen) ++pos;
    Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word v(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    Word value = r[pos].exp > 0 ? concat(inverse(u), inverse(v)) : concat(v, u);
    value = free_reduce(value);

    p.relators.erase(p.relators.begin() + chosen_rel);
    for (auto& rel : p.relators) rel = reindex(cyclic_reduce(substitute(rel, chosen_gen, value)), chosen_gen);
    p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(), [](const Word& w) { return w.empty(); }),
                     p.relators.end());
    p.meridian = reindex(substitute(p.meridian, chosen_gen, value), chosen_gen);
    p.longitude = reindex(substitute(p.longitude, chosen_gen, value), chosen_gen);
    p.generators.erase(p.generators.begin() + chosen_gen);
    p.images.erase(p.images.begin() + chosen_gen);
    p.generator_color.erase(p.generator_color.begin() + chosen_gen);
  }
  return p;
}

Presentation kill_color(const Presentation& input, int color) {
  if (color < 1 || color > input.mu) throw PreconditionError("kill_color: no such color");
  Presentation p = input;
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (p.generator_color[g] == color) p.relators.push_back({{static_cast<int>(g), 1}});
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    p.images[g].erase(p.images[g].begin() + color);
    if (p.generator_color[g] == color) p.generator_color[g] = -1;
    else if (p.generator_color[g] > color) --p.generator_color[g];
  }
  --p.mu;
  return tietze_simplify(p);
}

}  // namespace linkslope
