#pragma once

#include <vector>

#include "linkslope/characters.hpp"
#include "linkslope/laurent_poly.hpp"
#include "linkslope/linear_algebra.hpp"
#include "linkslope/presentation.hpp"
#include "linkslope/rational_function.hpp"
#include "linkslope/slope_value.hpp"

namespace linkslope {

/// Image of a word in the group ring of H, always a monomial t^v.
LaurentPoly phi(const Presentation& p, const Word& w);

/// Fox derivative of w with respect to one generator, pushed into Z[H].
LaurentPoly fox_derivative(const Presentation& p, const Word& w, int gen);
/// All Fox derivatives of w: the row d(w).
std::vector<LaurentPoly> fox_gradient(const Presentation& p, const Word& w);

/// The Fox chain complex of a presentation over Z[H].
struct FoxComplex {
  std::size_t nvars = 0;
  /// Row i holds d(r_i); columns are generators.
  std::vector<std::vector<LaurentPoly>> d1;
  /// phi(x_j) - 1.
  std::vector<LaurentPoly> d0;
  std::vector<LaurentPoly> dm;
  std::vector<LaurentPoly> dl;

  static FoxComplex build(const Presentation& p);
  /// Checks sum_j d(r)_j (phi(x_j) - 1) = 0 for each relator.
  bool fundamental_identity_holds() const;
};

/// Slope at a character on the colors 1..mu. Colors where the character is
/// 1 are filled in first; a symbolic character defers to slope_symbolic.
/// Throws InadmissibleCharacter when omega^lambda != 1.
SlopeValue slope_at(const Presentation& p, const Character& omega);

/// Slope over the rational-function field in t1..tmu (t set to 1).
/// Requires a zero linking vector.
SlopeValue slope_symbolic(const Presentation& p);

/// Classifies the boundary kernel from the specialized differentials:
/// dm and dl are reduced against the row space of d1.
template <class F>
SlopeValue slope_from_specialization(const Matrix<F>& d1, const std::vector<F>& dm, const std::vector<F>& dl,
                                     const F& like) {
  using T = FieldTraits<F>;
  Echelon<F> e = rref(d1);
  std::vector<F> rm = reduce_against_rowspace(e, dm);
  std::vector<F> rl = reduce_against_rowspace(e, dl);
  const bool m_zero = is_zero_vector(rm);
  const bool l_zero = is_zero_vector(rl);
  if (m_zero && l_zero) return SlopeValue::undefined(2);
  if (m_zero) return SlopeValue::infinity();
  if (l_zero) return SlopeValue::finite(T::zero(like));
  // rl must be a multiple c * rm for a one-dimensional kernel; the slope is c.
  std::size_t j = 0;
  while (T::is_zero(rm[j])) ++j;
  const F c = rl[j] / rm[j];
  for (std::size_t i = 0; i < rm.size(); ++i) {
    F diff = rl[i] - c * rm[i];
    if (!T::is_zero(diff)) return SlopeValue::undefined(0);
  }
  return SlopeValue::finite(c);
}

/// Determinant by fraction-free elimination.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);
/// All k x k minors of a matrix.
std::vector<LaurentPoly> minors(const std::vector<std::vector<LaurentPoly>>& m, std::size_t k);

/// gcd of the (generators - r - 1)-minors of the Alexander matrix; 1 when
/// that size is not positive and 0 when there are too few relators. The
/// answer is normalized and only meaningful up to units.
LaurentPoly alexander_order(const Presentation& p, int r);

/// Dimension of the twisted first homology: dim ker d0 - rank d1 at the
/// character (the knot's color, if any, maps to 1). Colors where the
/// character is 1 are filled in first.
int nullity_at(const Presentation& p, const Character& omega);

/// Ratio of Conway potentials given in the square-root variables s, s1, ...:
/// minus the s-derivative of nabla_kl at (1, sqrt(omega)) over twice
/// nabla_l(sqrt(omega)). `signs` (+1/-1 per color) selects the square roots;
/// empty means all +1. Throws InconclusiveError when both vanish.
SlopeValue conway_slope(const RationalFunction& nabla_kl, const RationalFunction& nabla_l, const Character& omega,
                        const std::vector<int>& signs = {});

}  // namespace linkslope
