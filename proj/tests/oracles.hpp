#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's elimination, eigenvalue or gcd code.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "linkslope/laurent_poly.hpp"
#include "linkslope/rational.hpp"

namespace oracle {

using linkslope::Integer;
using linkslope::LaurentPoly;

/// Laplace expansion along the first row.
inline LaurentPoly cofactor_determinant(const std::vector<std::vector<LaurentPoly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(nvars, 1);
  if (n == 1) return m[0][0];
  LaurentPoly total(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    LaurentPoly term = m[0][j] * cofactor_determinant(minor, nvars);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline Integer integer_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * integer_determinant(minor);
    total += (j % 2) ? Integer(-term) : term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors as quotients of determinantal divisors d_k / d_{k-1},
/// d_k being the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const std::vector<std::vector<long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        Integer d = integer_determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(Integer(g / prev));
    prev = g;
  }
  return out;
}

/// Cyclic Jacobi rotations on the real symmetric 2n x 2n embedding
/// [[Re, -Im], [Im, Re]] of a Hermitian matrix. Every eigenvalue of the
/// original matrix appears twice in the embedding; one copy of each is returned.
inline std::vector<double> jacobi_hermitian_eigenvalues(const std::vector<std::vector<std::complex<double>>>& h) {
  const std::size_t n = h.size();
  const std::size_t m = 2 * n;
  std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = a[i + n][j + n] = h[i][j].real();
      a[i + n][j] = h[i][j].imag();
      a[i][j + n] = -h[i][j].imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back((ev[i] + ev[i + 1]) / 2);
  return out;
}

inline int signature_from_eigenvalues(const std::vector<double>& ev, double tol = 1e-9) {
  int s = 0;
  for (double x : ev) s += (x > tol) - (x < -tol);
  return s;
}

/// Numerical rank by singular values.
inline int numeric_rank(const Eigen::MatrixXcd& m, double tol = 1e-8) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

inline Eigen::MatrixXcd stack_row(const Eigen::MatrixXcd& m, const Eigen::RowVectorXcd& row) {
  Eigen::MatrixXcd out(m.rows() + 1, row.size());
  if (m.rows()) out.topRows(m.rows()) = m;
  out.row(m.rows()) = row;
  return out;
}

}  // namespace oracle
