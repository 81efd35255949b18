#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linkslope/characters.hpp"
#include "linkslope/hermitian.hpp"
#include "linkslope/linear_algebra.hpp"
#include "linkslope/slope_value.hpp"

namespace linkslope {

using IntMatrix = std::vector<std::vector<long>>;

/// Algebraic data of a C-complex: one Seifert matrix per sign vector
/// (keys such as "+", "-", "+-"), the linking covector kappa with the knot,
/// and the number of connected components b0.
struct CComplexData {
  int mu = 1;
  int rank = 0;
  std::map<std::string, IntMatrix> thetas;
  std::vector<long> kappa;
  int b0 = 1;

  /// mu = 1 datum; the "-" matrix is the transpose.
  static CComplexData from_theta(const IntMatrix& theta, std::vector<long> kappa, int b0 = 1);
  /// Shapes, presence of all 2^mu keys, and theta^{-eps} = (theta^eps)^T.
  void validate() const;
};

/// `{"mu": 1, "rank": 2, "thetas": {"+": [[1,0],[1,-1]]}, "kappa": [1,0], "b0": 1}`.
CComplexData parse_ccomplex_json(std::string_view text);
std::string ccomplex_to_json(const CComplexData& d);

IntMatrix transpose(const IntMatrix& m);
std::string sign_key(const std::vector<int>& eps);

/// sum over eps of prod_i eps_i omega_i^{(1 - eps_i)/2} theta^eps.
template <class F>
Matrix<F> a_matrix_over(const CComplexData& d, const std::vector<F>& omega, const F& zero) {
  if (omega.size() != static_cast<std::size_t>(d.mu)) throw std::invalid_argument("a_matrix: character size mismatch");
  const std::size_t n = static_cast<std::size_t>(d.rank);
  Matrix<F> a(n, n, zero);
  const std::size_t mu = static_cast<std::size_t>(d.mu);
  for (unsigned mask = 0; mask < (1u << mu); ++mask) {
    std::vector<int> eps(mu);
    F factor = FieldTraits<F>::one(zero);
    for (std::size_t i = 0; i < mu; ++i) {
      eps[i] = (mask >> i) & 1u ? -1 : 1;
      if (eps[i] < 0) factor = factor * (-omega[i]);
    }
    const IntMatrix& th = d.thetas.at(sign_key(eps));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (th[i][j] != 0) a(i, j) += factor * FieldTraits<F>::from_rational(Rational(th[i][j]), zero);
  }
  return a;
}

/// A(omega) / prod_i (1 - omega_i).
template <class F>
Matrix<F> e_matrix_over(const CComplexData& d, const std::vector<F>& omega, const F& zero) {
  Matrix<F> a = a_matrix_over(d, omega, zero);
  F pi = FieldTraits<F>::one(zero);
  for (const auto& w : omega) pi = pi * (FieldTraits<F>::one(zero) - w);
  if (FieldTraits<F>::is_zero(pi)) throw std::invalid_argument("e_matrix: a coordinate equals 1");
  const F inv = FieldTraits<F>::one(zero) / pi;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!FieldTraits<F>::is_zero(a(i, j))) a(i, j) = a(i, j) * inv;
  return a;
}

/// kappa against M: Finite(-scale * <alpha, kappa>) when kappa lies in Im M
/// and annihilates Ker M, Infinity when neither holds, Undefined otherwise
/// (kernel dimension 2 when kappa is in the image, 0 when it is not).
template <class F>
SlopeValue classify_kappa(const Matrix<F>& m, const std::vector<long>& kappa, const F& scale, const F& zero) {
  using T = FieldTraits<F>;
  std::vector<F> k;
  for (long x : kappa) k.push_back(T::from_rational(Rational(x), zero));
  LinearSolution<F> sol = solve_linear(m, k, zero);
  auto pair = [&](const std::vector<F>& v) {
    F s = zero;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!T::is_zero(v[i]) && !T::is_zero(k[i])) s += v[i] * k[i];
    return s;
  };
  bool annihilates = true;
  for (const auto& v : sol.kernel)
    if (!T::is_zero(pair(v))) annihilates = false;
  if (sol.in_image && annihilates) {
    F value = -(scale * pair(sol.solution));
    if (!sol.kernel.empty()) {
      // Any other solution must give the same pairing.
      std::vector<F> other = sol.solution;
      for (const auto& v : sol.kernel)
        for (std::size_t i = 0; i < other.size(); ++i) other[i] += v[i];
      if (!T::is_zero(pair(other) - pair(sol.solution)))
        throw std::logic_error("slope: pairing depends on the chosen solution");
    }
    return SlopeValue::finite(value);
  }
  if (!sol.in_image && !annihilates) return SlopeValue::infinity();
  return SlopeValue::undefined(sol.in_image ? 2 : 0);
}

Matrix<CyclotomicElement> a_matrix(const CComplexData& d, const Character& omega);
Matrix<CyclotomicElement> e_matrix(const CComplexData& d, const Character& omega);

/// Slope from C-complex data. Exact characters give cyclotomic values, a
/// symbolic character a rational function in t1..tmu, numeric ones complex.
SlopeValue slope_c_complex(const CComplexData& d, const Character& omega);

/// mu = 1 slope from a single Seifert matrix using A = theta - omega theta^T.
/// Throws PreconditionError if theta - theta^T has an invariant factor other than +-1.
SlopeValue slope_seifert(const IntMatrix& theta, const std::vector<long>& kappa, const Character& omega);

/// Signature of E(omega) and nullity dim Ker E(omega) + b0 - 1 at a unitary
/// exact character with no coordinate equal to 1.
SignatureNullity signature_nullity(const CComplexData& d, const Character& omega, double tol = 1e-9);

struct Realizability {
  bool ok = false;
  std::vector<Integer> invariant_factors;
  /// Half the rank of theta - theta^T.
  int r = 0;
  /// rank - 2r + 1.
  int component_bound = 0;
};

/// Nonzero invariant factors (positive, in divisibility order) of an integer matrix.
std::vector<Integer> smith_invariant_factors(const IntMatrix& m);
Realizability validate_realizability(const IntMatrix& theta);

}  // namespace linkslope
