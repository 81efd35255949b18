#pragma once

#include <complex>
#include <string>
#include <vector>

#include "linkslope/rational.hpp"

namespace linkslope {

namespace detail {
struct CyclotomicData;
}

/// Exact element of Q(zeta_n), stored as a residue modulo Phi_n.
///
/// Binary operations on elements of different conductors embed both into
/// Q(zeta_lcm). Equality is independent of the conductor an element is
/// written in.
class CyclotomicElement {
 public:
  /// Zero of Q.
  CyclotomicElement();
  explicit CyclotomicElement(const Rational& q, int conductor = 1);
  CyclotomicElement(int conductor, std::vector<Rational> coeffs);

  /// zeta_n^k.
  static CyclotomicElement zeta(int n, long k = 1);

  int conductor() const;
  /// Coefficients c_0..c_{phi(n)-1} of sum c_j zeta_n^j.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);
  CyclotomicElement& operator/=(const CyclotomicElement& rhs);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  CyclotomicElement inverse() const;
  CyclotomicElement pow(long k) const;
  /// Complex conjugation zeta_n -> zeta_n^{n-1}.
  CyclotomicElement conj() const;
  /// The same number written in Q(zeta_m); n must divide m.
  CyclotomicElement embed(int m) const;
  /// The same number in the smallest Q(zeta_d), d | n, containing it.
  CyclotomicElement reduced() const;

  std::complex<double> to_complex() const;
  /// Polynomial in zeta_n, e.g. `1 - zeta6^2`.
  std::string to_string() const;

 private:
  CyclotomicElement(const detail::CyclotomicData* field, std::vector<Rational> coeffs);

  const detail::CyclotomicData* field_;
  std::vector<Rational> coeffs_;
};

/// Euler phi.
int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace linkslope
