#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linkslope {

/// A generator raised to +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by removal of inverse pairs at the two ends.
Word cyclic_reduce(const Word& w);

/// Finite presentation of a colored link group.
///
/// Each generator has an image in H = Z^{mu+1}, index 0 being the
/// distinguished knot's color and 1..mu the other colors. Meridian
/// generators additionally record their color.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::vector<int>> images;
  /// Color of a meridian generator, or -1 for other generators.
  std::vector<int> generator_color;
  int mu = 0;
  bool has_knot = false;
  Word meridian;
  Word longitude;

  std::size_t generator_count() const { return generators.size(); }
  /// Number of Laurent variables: t for the knot plus t1..tmu.
  std::size_t nvars() const { return static_cast<std::size_t>(mu) + 1; }
  /// Image of a word in H.
  std::vector<int> image(const Word& w) const;
  /// lk(K, L_i) for i = 1..mu, read off the longitude image.
  std::vector<int> linking_vector() const;

  /// Checks relators abelianize to zero and, with a knot, that the meridian
  /// maps to the knot's color and the longitude has no knot component.
  /// Throws PreconditionError otherwise.
  void validate() const;

  std::string word_to_string(const Word& w) const;
};

/// JSON input: `{"generators": ["m","m1","l"], "relators": ["m l M L", ...],
/// "colors": [0, 1, null], "meridian": "m", "longitude": "l"}`. A token
/// whose first letter is upper case, or that ends in `^-1`, is an inverse.
/// A color entry is a color number for a meridian, null for a generator
/// mapping trivially, or an explicit image array of length mu+1.
Presentation parse_presentation_json(std::string_view text);
Word parse_word(const Presentation& p, std::string_view text);
std::string presentation_to_json(const Presentation& p);

/// Repeatedly eliminates a generator occurring exactly once in some relator
/// and rewrites the remaining relators, meridian, and longitude.
Presentation tietze_simplify(const Presentation& p);

/// Adds the relations killing every meridian of one color (1..mu) and
/// removes that color from H, which fills in those components.
Presentation kill_color(const Presentation& p, int color);

}  // namespace linkslope
