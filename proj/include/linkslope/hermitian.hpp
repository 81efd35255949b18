#pragma once

#include <Eigen/Dense>

#include <vector>

#include "linkslope/linear_algebra.hpp"

namespace linkslope {

struct SignatureNullity {
  int signature = 0;
  int nullity = 0;
  friend bool operator==(const SignatureNullity&, const SignatureNullity&) = default;
};

/// Eigenvalues of a Hermitian matrix in ascending order. Throws
/// PreconditionError when the max-entry norm of M - M^* exceeds tol.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, double tol = 1e-9);

/// (#eigenvalues > tol) - (#eigenvalues < -tol), and the count inside [-tol, tol].
SignatureNullity hermitian_signature(const Eigen::MatrixXcd& m, double tol = 1e-9);

Eigen::MatrixXcd to_eigen(const Matrix<CyclotomicElement>& m);
Eigen::MatrixXcd to_eigen(const Matrix<std::complex<double>>& m);

}  // namespace linkslope
