#pragma once

#include <span>
#include <string>

#include "linkslope/laurent_poly.hpp"

namespace linkslope {

/// Quotient of Laurent polynomials kept in lowest terms.
///
/// Canonical form: gcd(num, den) is a unit and the denominator is its own
/// normalize_associate, so equal functions have identical representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars) : num_(nvars), den_(nvars, Rational(1)) {}
  RationalFunction(std::size_t nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
  explicit RationalFunction(LaurentPoly num);
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is a unit.
  bool is_laurent() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Term count of numerator plus denominator (used as a pivoting weight).
  std::size_t size() const { return num_.size() + den_.size(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction derivative(std::size_t var) const;
  RationalFunction substitute(std::size_t var, const Rational& value) const;
  RationalFunction invert_variable(std::size_t var) const;

  /// `num` alone when the denominator is 1, otherwise `(num)/(den)`; negative
  /// exponents of the numerator are cleared into the denominator first.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace linkslope
