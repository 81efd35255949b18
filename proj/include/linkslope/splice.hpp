#pragma once

#include <string>
#include <variant>
#include <vector>

#include "linkslope/characters.hpp"
#include "linkslope/rational.hpp"
#include "linkslope/slope_value.hpp"

namespace linkslope {

/// A point of the extended real line, plus the single projective infinity
/// in which real slopes take their infinite value.
class ExtendedReal {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity, ProjectiveInfinity };

  ExtendedReal() : ExtendedReal(Rational(0)) {}
  ExtendedReal(Rational q) : kind_(Kind::Finite), value_(std::move(q)) {}
  ExtendedReal(double x) : kind_(Kind::Finite), value_(x) {}
  static ExtendedReal plus_infinity() { return ExtendedReal(Kind::PlusInfinity); }
  static ExtendedReal minus_infinity() { return ExtendedReal(Kind::MinusInfinity); }
  static ExtendedReal infinity() { return ExtendedReal(Kind::ProjectiveInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const { return std::get<Rational>(value_); }
  double approximate() const;
  /// Sign of a finite value; zero for zero.
  int finite_sign() const;

  /// 1/x with 1/0 = infinity and 1/(any infinity) = 0.
  ExtendedReal reciprocal() const;
  /// x - y with infinity - finite = infinity, finite - infinity = -infinity
  /// (finite +- signed infinities as usual), and infinity - infinity = 0.
  friend ExtendedReal operator-(const ExtendedReal& x, const ExtendedReal& y);
  ExtendedReal operator-() const;

  std::string to_string() const;
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);

 private:
  explicit ExtendedReal(Kind k) : kind_(k), value_(Rational(0)) {}
  Kind kind_;
  std::variant<Rational, double> value_;
};

/// Parses `inf`, `+inf`, `-inf`, a rational `p/q`, or a decimal.
ExtendedReal parse_extended_real(const std::string& text);

/// Converts a real slope value; throws PreconditionError on an undefined or
/// non-real value.
ExtendedReal to_extended_real(const SlopeValue& v, double tol = 1e-9);

/// 0 on 0 and projective infinity, otherwise the sign.
int sg(const ExtendedReal& x);

/// sg(rho1) - sg(1/rho1 - rho2).
int delta_sigma(const ExtendedReal& rho1, const ExtendedReal& rho2);

struct SpliceSide {
  int signature = 0;
  int nullity = 0;
  std::vector<int> lambda;
  Character omega;
};

struct SpliceResult {
  int signature = 0;
  int nullity = 0;
};

/// Splice away from the admissible locus: signatures and nullities of the two
/// sides (already evaluated at the extended characters) add up, and the
/// signature picks up the product of the two defects. Throws
/// PreconditionError when both characters are admissible.
SpliceResult splice_sigma_generic(const SpliceSide& first, const SpliceSide& second);

enum class HyperbolaRegion { Below, On, Above, AtInfinity };
std::string to_string(HyperbolaRegion r);
/// Position of (rho1, rho2) relative to rho1 * rho2 = 1; AtInfinity when either is infinite.
HyperbolaRegion hyperbola_region(const ExtendedReal& rho1, const ExtendedReal& rho2);

struct AdmissibleSpliceResult {
  int signature = 0;
  int delta_sigma = 0;
  /// n' + n''; the nullity correction itself is left undetermined.
  int nullity_without_correction = 0;
  HyperbolaRegion region = HyperbolaRegion::Below;
};

/// Splice at admissible characters: sigma' + sigma'' + delta' delta'' + delta_sigma(rho', rho'').
AdmissibleSpliceResult splice_sigma_admissible(int sigma1, int sigma2, int n1, int n2, const Integer& defect1,
                                               const Integer& defect2, const ExtendedReal& rho1,
                                               const ExtendedReal& rho2);

}  // namespace linkslope
