#include "linkslope/hermitian.hpp"

#include <Eigen/Eigenvalues>

#include "linkslope/errors.hpp"

namespace linkslope {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, double tol) {
  if (tol <= 0) throw PreconditionError("hermitian_signature: tolerance must be positive");
  if (m.rows() != m.cols()) throw PreconditionError("hermitian_signature: matrix is not square");
  if (m.size() == 0) return {};
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol) throw PreconditionError("hermitian_signature: matrix is not Hermitian within tolerance");
  Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw PreconditionError("hermitian_signature: eigenvalue solver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

SignatureNullity hermitian_signature(const Eigen::MatrixXcd& m, double tol) {
  SignatureNullity out;
  for (double x : hermitian_eigenvalues(m, tol)) {
    if (x > tol) ++out.signature;
    else if (x < -tol) --out.signature;
    else ++out.nullity;
  }
  return out;
}

Eigen::MatrixXcd to_eigen(const Matrix<CyclotomicElement>& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return out;
}

Eigen::MatrixXcd to_eigen(const Matrix<std::complex<double>>& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

}  // namespace linkslope
