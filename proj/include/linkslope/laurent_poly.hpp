#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkslope/rational.hpp"

namespace linkslope {

/// Exponent vector of a Laurent monomial; negative entries allowed.
using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// Terms are keyed by exponent vectors ordered lexicographically, so the
/// last term is the lex-leading one. Zero coefficients are never stored and
/// every key has exactly `nvars()` entries.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
  LaurentPoly(std::size_t nvars, const Rational& constant);

  static LaurentPoly monomial(const Exponent& e, const Rational& coeff = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the zero exponent.
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;

  /// Lex-leading term; the polynomial must be nonzero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Componentwise minimum / maximum of exponents (zero vector for the zero polynomial).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  int degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  bool involves(std::size_t var) const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Power; negative exponents are only allowed for monomials.
  LaurentPoly pow(int n) const;
  /// Multiplication by the monomial x^by.
  LaurentPoly shifted(const Exponent& by) const;
  /// Substitute a rational value for one variable (the variable stays in the ring).
  LaurentPoly substitute(std::size_t var, const Rational& value) const;
  /// Formal partial derivative.
  LaurentPoly derivative(std::size_t var) const;
  /// Replace x_var by x_var^{-1}.
  LaurentPoly invert_variable(std::size_t var) const;
  /// Same terms in a ring with a different variable count; dropped variables must be absent.
  LaurentPoly with_nvars(std::size_t nvars) const;

  /// Human-readable form, e.g. `3*t1^2*t2^-1 - 1`.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const LaurentPoly& rhs);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Default variable names: t (the distinguished knot), t1, ..., tmu.
std::vector<std::string> t_variable_names(std::size_t nvars);
/// Radical variables: s, s1, ..., smu.
std::vector<std::string> s_variable_names(std::size_t nvars);

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical associate: monomial factor removed (componentwise minimal
/// exponent zero), coefficients coprime integers, lex-leading coefficient positive.
LaurentPoly normalize_associate(const LaurentPoly& p);
/// The unit u (a rational times a monomial) with normalize_associate(p) == u * p.
LaurentPoly associate_unit(const LaurentPoly& p);
bool are_associates(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in the Laurent ring, normalized by normalize_associate; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// gcd of a family; requires at least one entry.
LaurentPoly multivariate_gcd(std::span<const LaurentPoly> ps);

}  // namespace linkslope
