#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "linkslope/cyclotomic.hpp"
#include "linkslope/rational.hpp"

namespace linkslope {

/// A point of the character torus (C^x)^mu, given on the colors 1..mu.
///
/// Roots of unity are stored as a common conductor n and exponents k_i with
/// omega_i = zeta_n^{k_i}, reduced to the least conductor. Field points hold
/// arbitrary exact cyclotomic (e.g. rational) coordinates, numeric points hold
/// complex doubles, and a symbolic point stands for the generic character.
class Character {
 public:
  enum class Kind { RootOfUnity, FieldPoint, Numeric, Symbolic };

  static Character root_of_unity(int n, std::vector<long> exponents);
  static Character field_point(std::vector<CyclotomicElement> values);
  static Character numeric(std::vector<std::complex<double>> values);
  static Character symbolic(std::size_t mu);

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  bool is_exact() const { return kind_ == Kind::RootOfUnity || kind_ == Kind::FieldPoint; }
  bool is_unitary() const;

  /// Root-of-unity data; only valid for Kind::RootOfUnity.
  int conductor() const { return conductor_; }
  const std::vector<long>& exponents() const { return exponents_; }
  /// Multiplicative order of one coordinate.
  int order(std::size_t i) const;
  /// Log omega_i = k_i / n in [0, 1).
  Rational log(std::size_t i) const;

  std::vector<CyclotomicElement> exact_values() const;
  std::vector<std::complex<double>> numeric_values() const;
  bool coordinate_is_one(std::size_t i) const;

  /// Coordinatewise inverse (the complex conjugate for unitary points).
  Character inverse() const;
  /// The character with coordinate i removed.
  Character without(std::size_t i) const;

  std::string to_string() const;
  friend bool operator==(const Character& a, const Character& b);

 private:
  Kind kind_ = Kind::Symbolic;
  std::size_t size_ = 0;
  int conductor_ = 1;
  std::vector<long> exponents_;
  std::vector<CyclotomicElement> values_;
  std::vector<std::complex<double>> numeric_;
};

/// Parses one character: `zeta(6)^1, zeta(6)^5`, `-1`, `3/2`, `zeta(4)`,
/// `(-0.5+0.866i, 1)`, or `t1,t2`. Throws ParseError.
Character parse_character(std::string_view text);
/// Several characters separated by `;`.
std::vector<Character> parse_character_list(std::string_view text);

/// omega^lambda = 1, exactly for exact points and within 1e-9 otherwise.
bool is_admissible(const std::vector<int>& lambda, const Character& omega);

struct AdmissibleComponent {
  int d = 1;
  /// d is a prime power (1 included): the component meets the closure of
  /// the non-concordance-root characters.
  bool prime_power = true;
};

struct AdmissibleVariety {
  std::vector<int> lambda;
  bool full_torus = false;
  int N = 0;
  std::vector<int> nu;
  std::vector<AdmissibleComponent> components;
};

AdmissibleVariety admissible_components(const std::vector<int>& lambda);

enum class Tristate { Yes, No, Unknown };
std::string to_string(Tristate t);
bool is_prime_power(long n);

/// Decides whether an exact root-of-unity character is a concordance root
/// where the order criterion applies, and answers Unknown otherwise.
Tristate is_concordance_root(const Character& omega);

/// floor(x) - floor(-x).
Integer ind(const Rational& x);
Integer defect(const std::vector<int>& lambda, const Character& omega);

/// Every root-of-unity character of conductor at most max_order with all
/// coordinates different from 1 and omega^lambda = 1.
std::vector<Character> enumerate_unitary_admissible(const std::vector<int>& lambda, int max_order);

}  // namespace linkslope
