#pragma once

#include <random>
#include <string>
#include <vector>

#include "linkslope/catalog.hpp"
#include "linkslope/characters.hpp"
#include "linkslope/laurent_poly.hpp"
#include "linkslope/presentation.hpp"

namespace support {

using namespace linkslope;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly random_poly(std::size_t nvars, int terms = 3, int spread = 2, int coeff = 4) {
  LaurentPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (auto& x : e) x = uniform(-spread, spread);
    p.add_term(e, Rational(uniform(-coeff, coeff)));
  }
  return p;
}

inline const Catalog& catalog() {
  static const Catalog cat = Catalog::load_default();
  return cat;
}

inline const CatalogEntry& entry(const std::string& name) { return catalog().find(name); }

inline Presentation group(const std::string& name, bool swap = false) { return entry(name).presentation(swap); }

/// A few roots of unity different from 1, up to conductor `max_n`.
inline std::vector<Character> sample_roots(std::size_t mu, int count, int max_n = 12) {
  std::vector<Character> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = uniform(2, max_n);
    std::vector<long> k(mu);
    for (auto& x : k) x = uniform(1, n - 1);
    out.push_back(Character::root_of_unity(n, k));
  }
  return out;
}

/// The three-generator Whitehead group with the longitude as a generator.
inline const char* whitehead_json =
    R"({"generators": ["m", "n", "l"], "colors": [0, 1, null],
        "relators": ["m l M L", "L n M N m N M n m"], "meridian": "m", "longitude": "l"})";

}  // namespace support
