#include <cctype>
#include <json.hpp>

#include "linkslope/diagram.hpp"
#include "linkslope/errors.hpp"

namespace linkslope {

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  char open_bracket() {
    if (accept('[')) return ']';
    if (accept('(')) return ')';
    fail("expected '[' or '('");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("PD: " + what, pos_); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ColoringSpec coloring_from_json(const nlohmann::json& j) {
  ColoringSpec spec;
  if (!j.is_object()) throw ParseError("coloring: expected an object");
  for (const auto& [key, value] : j.items()) {
    std::vector<std::string> names;
    if (value.is_string()) names.push_back(value.get<std::string>());
    else if (value.is_array())
      for (const auto& v : value) names.push_back(v.get<std::string>());
    else throw ParseError("coloring: entries must be component names");
    if (key == "K" || key == "k") {
      if (names.size() != 1) throw ParseError("coloring: the knot K must be a single component");
      spec.knot = names.front();
    } else {
      int color = 0;
      try {
        color = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("coloring: bad color key '" + key + "'");
      }
      auto& dst = spec.colors[color];
      dst.insert(dst.end(), names.begin(), names.end());
    }
  }
  return spec;
}

ColoredDiagram parse_pd_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("PD JSON: ") + e.what(), e.byte);
  }
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> loops;
  try {
    for (const auto& t : j.at("crossings")) {
      if (!t.is_array() || t.size() != 4) throw ParseError("PD JSON: each crossing needs 4 labels");
      tuples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
    }
    if (j.contains("loops"))
      for (const auto& l : j["loops"]) loops.push_back(l.get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PD JSON: ") + e.what());
  }
  ColoringSpec spec;
  if (j.contains("coloring")) {
    if (j["coloring"].is_string()) spec = parse_coloring(j["coloring"].get<std::string>());
    else spec = coloring_from_json(j["coloring"]);
  }
  return ColoredDiagram::from_pd(std::move(tuples), std::move(loops), spec);
}

}  // namespace

ColoringSpec parse_coloring(std::string_view block) {
  PdScanner s(block);
  if (!s.accept_word("colors")) s.fail("expected 'colors'");
  s.expect('{');
  ColoringSpec spec;
  if (s.accept('}')) return spec;
  while (true) {
    s.skip_space();
    bool knot = false;
    int color = 0;
    if (s.accept('K') || s.accept('k')) knot = true;
    else color = s.integer();
    s.expect(':');
    std::vector<std::string> names;
    do {
      s.skip_space();
      std::string_view r = s.rest();
      std::size_t n = 0;
      while (n < r.size() && std::isalnum(static_cast<unsigned char>(r[n]))) ++n;
      if (n == 0) s.fail("expected component name");
      names.emplace_back(r.substr(0, n));
      s.advance(n);
    } while (s.accept(','));
    if (knot) {
      if (spec.knot || names.size() != 1) s.fail("the knot K must be a single component given once");
      spec.knot = names.front();
    } else {
      auto& dst = spec.colors[color];
      dst.insert(dst.end(), names.begin(), names.end());
    }
    if (s.accept('}')) break;
    s.expect(';');
  }
  if (!s.at_end()) s.fail("trailing text after coloring block");
  return spec;
}

ColoredDiagram parse_pd(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_pd_json(text);

  PdScanner s(text);
  if (!s.accept_word("PD")) s.fail("expected 'PD'");
  const char close = s.open_bracket();
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> loops;
  if (!s.accept(close)) {
    while (true) {
      if (s.accept_word("X")) {
        const char c = s.open_bracket();
        std::array<int, 4> t{};
        for (int i = 0; i < 4; ++i) {
          if (i) s.expect(',');
          t[static_cast<std::size_t>(i)] = s.integer();
        }
        s.expect(c);
        tuples.push_back(t);
      } else if (s.accept_word("Loop")) {
        const char c = s.open_bracket();
        loops.push_back(s.integer());
        s.expect(c);
      } else {
        s.fail("expected X[...] or Loop[...]");
      }
      if (s.accept(close)) break;
      s.expect(',');
    }
  }
  ColoringSpec spec;
  if (!s.at_end()) {
    std::size_t offset = s.pos();
    try {
      spec = parse_coloring(s.rest());
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in coloring block starting at offset " + std::to_string(offset));
    }
  }
  return ColoredDiagram::from_pd(std::move(tuples), std::move(loops), spec);
}

}  // namespace linkslope
