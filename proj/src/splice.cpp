#include "linkslope/splice.hpp"

#include <cmath>
#include <sstream>

#include "linkslope/errors.hpp"

namespace linkslope {

double ExtendedReal::approximate() const {
  switch (kind_) {
    case Kind::PlusInfinity:
      return HUGE_VAL;
    case Kind::MinusInfinity:
      return -HUGE_VAL;
    case Kind::ProjectiveInfinity:
      return NAN;
    case Kind::Finite:
      break;
  }
  return is_exact() ? exact().get_d() : std::get<double>(value_);
}

int ExtendedReal::finite_sign() const {
  if (is_exact()) return sgn(exact());
  const double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

ExtendedReal ExtendedReal::reciprocal() const {
  if (!is_finite()) return ExtendedReal(Rational(0));
  if (finite_sign() == 0) return infinity();
  if (is_exact()) return ExtendedReal(Rational(1 / exact()));
  return ExtendedReal(1.0 / std::get<double>(value_));
}

ExtendedReal ExtendedReal::operator-() const {
  switch (kind_) {
    case Kind::PlusInfinity:
      return minus_infinity();
    case Kind::MinusInfinity:
      return plus_infinity();
    case Kind::ProjectiveInfinity:
      return infinity();
    case Kind::Finite:
      break;
  }
  if (is_exact()) return ExtendedReal(Rational(-exact()));
  return ExtendedReal(-std::get<double>(value_));
}

ExtendedReal operator-(const ExtendedReal& x, const ExtendedReal& y) {
  using K = ExtendedReal::Kind;
  if (x.is_finite() && y.is_finite()) {
    if (x.is_exact() && y.is_exact()) return ExtendedReal(Rational(x.exact() - y.exact()));
    return ExtendedReal(x.approximate() - y.approximate());
  }
  if (!x.is_finite() && !y.is_finite()) {
    // Two infinities of the same orientation cancel; the projective one
    // cancels against anything infinite.
    if (x.kind() == K::ProjectiveInfinity || y.kind() == K::ProjectiveInfinity || x.kind() == y.kind())
      return ExtendedReal(Rational(0));
    return x;
  }
  if (!x.is_finite()) return x;
  // Finite minus an infinity.
  if (y.kind() == K::MinusInfinity) return ExtendedReal::plus_infinity();
  return ExtendedReal::minus_infinity();
}

std::string ExtendedReal::to_string() const {
  switch (kind_) {
    case Kind::PlusInfinity:
      return "+inf";
    case Kind::MinusInfinity:
      return "-inf";
    case Kind::ProjectiveInfinity:
      return "inf";
    case Kind::Finite:
      break;
  }
  if (is_exact()) return exact().get_str();
  std::ostringstream out;
  out.precision(12);
  out << std::get<double>(value_);
  return out.str();
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.kind() != b.kind()) return false;
  if (!a.is_finite()) return true;
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return std::abs(a.approximate() - b.approximate()) <= 1e-12;
}

ExtendedReal parse_extended_real(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return ExtendedReal::infinity();
  if (text == "+inf") return ExtendedReal::plus_infinity();
  if (text == "-inf") return ExtendedReal::minus_infinity();
  if (text.find_first_of(".eE") != std::string::npos) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw ParseError("not a real number: '" + text + "'");
    return ExtendedReal(x);
  }
  Rational q;
  if (text.empty() || q.set_str(text.front() == '+' ? text.substr(1) : text, 10) != 0 || q.get_den() == 0)
    throw ParseError("not a real number: '" + text + "'");
  q.canonicalize();
  return ExtendedReal(q);
}

ExtendedReal to_extended_real(const SlopeValue& v, double tol) {
  if (v.is_infinity()) return ExtendedReal::infinity();
  if (v.is_undefined()) throw PreconditionError("slope is undefined; no real value to use");
  if (v.is_exact()) {
    const CyclotomicElement& x = v.exact();
    if (!(x == x.conj())) throw PreconditionError("slope " + x.to_string() + " is not real");
    if (x.is_rational()) return ExtendedReal(x.rational_value());
    return ExtendedReal(x.to_complex().real());
  }
  if (v.is_numeric()) {
    if (std::abs(v.numeric().imag()) > tol) throw PreconditionError("slope is not real");
    return ExtendedReal(v.numeric().real());
  }
  throw PreconditionError("a symbolic slope has no single real value");
}

int sg(const ExtendedReal& x) {
  switch (x.kind()) {
    case ExtendedReal::Kind::PlusInfinity:
      return 1;
    case ExtendedReal::Kind::MinusInfinity:
      return -1;
    case ExtendedReal::Kind::ProjectiveInfinity:
      return 0;
    case ExtendedReal::Kind::Finite:
      break;
  }
  return x.finite_sign();
}

int delta_sigma(const ExtendedReal& rho1, const ExtendedReal& rho2) { return sg(rho1) - sg(rho1.reciprocal() - rho2); }

SpliceResult splice_sigma_generic(const SpliceSide& first, const SpliceSide& second) {
  const bool a1 = is_admissible(first.lambda, first.omega);
  const bool a2 = is_admissible(second.lambda, second.omega);
  if (a1 && a2)
    throw PreconditionError("both characters are admissible; use the admissible splice formula with slopes instead");
  const Integer d = defect(first.lambda, first.omega) * defect(second.lambda, second.omega);
  SpliceResult r;
  r.signature = first.signature + second.signature + static_cast<int>(d.get_si());
  r.nullity = first.nullity + second.nullity;
  return r;
}

std::string to_string(HyperbolaRegion r) {
  switch (r) {
    case HyperbolaRegion::Below:
      return "below";
    case HyperbolaRegion::On:
      return "on";
    case HyperbolaRegion::Above:
      return "above";
    case HyperbolaRegion::AtInfinity:
      return "at-infinity";
  }
  return "?";
}

HyperbolaRegion hyperbola_region(const ExtendedReal& rho1, const ExtendedReal& rho2) {
  if (!rho1.is_finite() || !rho2.is_finite()) return HyperbolaRegion::AtInfinity;
  int cmp = 0;
  if (rho1.is_exact() && rho2.is_exact()) {
    const Rational prod = rho1.exact() * rho2.exact();
    cmp = mpq_cmp_si(prod.get_mpq_t(), 1, 1);
  } else {
    const double p = rho1.approximate() * rho2.approximate();
    cmp = std::abs(p - 1) <= 1e-12 ? 0 : (p > 1 ? 1 : -1);
  }
  return cmp < 0 ? HyperbolaRegion::Below : (cmp == 0 ? HyperbolaRegion::On : HyperbolaRegion::Above);
}

AdmissibleSpliceResult splice_sigma_admissible(int sigma1, int sigma2, int n1, int n2, const Integer& defect1,
                                               const Integer& defect2, const ExtendedReal& rho1,
                                               const ExtendedReal& rho2) {
  AdmissibleSpliceResult r;
  r.delta_sigma = delta_sigma(rho1, rho2);
  r.signature = sigma1 + sigma2 + static_cast<int>(Integer(defect1 * defect2).get_si()) + r.delta_sigma;
  r.nullity_without_correction = n1 + n2;
  r.region = hyperbola_region(rho1, rho2);
  return r;
}

}  // namespace linkslope
