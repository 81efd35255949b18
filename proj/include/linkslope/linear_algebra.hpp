#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkslope/cyclotomic.hpp"
#include "linkslope/rational.hpp"
#include "linkslope/rational_function.hpp"

namespace linkslope {

/// Per-field hooks used by the elimination routines. `weight` ranks pivot
/// candidates; the smallest weight wins.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_rational(const Rational& q, const Rational&) { return q; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static double weight(const Rational& x) {
    return static_cast<double>(mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2));
  }
};

template <>
struct FieldTraits<CyclotomicElement> {
  static CyclotomicElement zero(const CyclotomicElement&) { return CyclotomicElement(); }
  static CyclotomicElement one(const CyclotomicElement&) { return CyclotomicElement(Rational(1)); }
  static CyclotomicElement from_rational(const Rational& q, const CyclotomicElement&) { return CyclotomicElement(q); }
  static bool is_zero(const CyclotomicElement& x) { return x.is_zero(); }
  static double weight(const CyclotomicElement& x) {
    double w = 0;
    for (const auto& c : x.coefficients())
      if (c != 0) w += 1;
    return w;
  }
};

template <>
struct FieldTraits<RationalFunction> {
  static RationalFunction zero(const RationalFunction& like) { return RationalFunction(like.nvars()); }
  static RationalFunction one(const RationalFunction& like) { return RationalFunction(like.nvars(), Rational(1)); }
  static RationalFunction from_rational(const Rational& q, const RationalFunction& like) {
    return RationalFunction(like.nvars(), q);
  }
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
  static double weight(const RationalFunction& x) { return static_cast<double>(x.size()); }
};

/// Absolute threshold below which a floating-point entry counts as zero.
inline thread_local double numeric_zero_tolerance = 1e-9;

template <>
struct FieldTraits<std::complex<double>> {
  using C = std::complex<double>;
  static C zero(const C&) { return 0.0; }
  static C one(const C&) { return 1.0; }
  static C from_rational(const Rational& q, const C&) { return q.get_d(); }
  static bool is_zero(const C& x) { return std::abs(x) <= numeric_zero_tolerance; }
  static double weight(const C& x) { return -std::abs(x); }
};

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void append_row(const std::vector<F>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> operator*(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix * vector: dimension mismatch");
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      F acc = cols_ ? FieldTraits<F>::zero((*this)(i, 0)) : F();
      for (std::size_t j = 0; j < cols_; ++j)
        if (!FieldTraits<F>::is_zero((*this)(i, j)) && !FieldTraits<F>::is_zero(v[j])) acc += (*this)(i, j) * v[j];
      out.push_back(acc);
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  using T = FieldTraits<F>;
  Echelon<F> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    double best_w = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (T::is_zero(m(i, c))) continue;
      double w = T::weight(m(i, c));
      if (best == m.rows() || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    const F inv = T::one(m(r, c)) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!T::is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    m(r, c) = T::one(inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!T::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      m(i, c) = T::zero(f);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis of {v : m v = 0}, read off the RREF free columns.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Echelon<F>& e, const F& like) {
  using T = FieldTraits<F>;
  const Matrix<F>& m = e.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), T::zero(like));
    v[f] = T::one(like);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (!T::is_zero(m(i, f))) v[e.pivots[i]] = -m(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m, const F& like) {
  return kernel_basis(rref(m), like);
}

/// Residue of a row vector after elimination against the row space of an
/// RREF matrix; zero iff the vector lies in that row space.
template <class F>
std::vector<F> reduce_against_rowspace(const Echelon<F>& e, std::vector<F> v) {
  using T = FieldTraits<F>;
  const Matrix<F>& m = e.reduced;
  if (v.size() != m.cols() && e.rank() > 0) throw std::invalid_argument("reduce_against_rowspace: width mismatch");
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t c = e.pivots[i];
    if (T::is_zero(v[c])) continue;
    const F f = v[c];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!T::is_zero(m(i, j))) v[j] -= f * m(i, j);
    v[c] = T::zero(f);
  }
  return v;
}

template <class F>
bool is_zero_vector(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!FieldTraits<F>::is_zero(x)) return false;
  return true;
}

template <class F>
struct LinearSolution {
  bool in_image = false;
  std::vector<F> solution;
  std::vector<std::vector<F>> kernel;
};

/// Solves m x = b. The kernel basis is filled whether or not b is in the image.
template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& m, const std::vector<F>& b, const F& like) {
  using T = FieldTraits<F>;
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1, T::zero(like));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<F> e = rref(std::move(aug));
  LinearSolution<F> out;
  out.in_image = e.pivots.empty() || e.pivots.back() != m.cols();
  Echelon<F> left;
  left.pivots = e.pivots;
  if (!out.in_image) left.pivots.pop_back();
  left.reduced = Matrix<F>(m.rows(), m.cols(), T::zero(like));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) left.reduced(i, j) = e.reduced(i, j);
  out.kernel = kernel_basis(left, like);
  if (out.in_image) {
    out.solution.assign(m.cols(), T::zero(like));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.solution[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return out;
}

}  // namespace linkslope
