#pragma once

#include <Eigen/Dense>

#include "fw/num/model.hpp"

namespace fw::num {

/// U_E = (1 + beta lambda)(2 + beta lambda + lambda beta)^(-1/2) with
/// lambda = H (H^2)^(-1/2), both by eigendecomposition. Throws SingularSign
/// if H has an eigenvalue of magnitude below `threshold`.
Matrix eriksen_unitary(const MatrixModel& model, double threshold = 1e-12);

/// lambda = sign(H).
Matrix sign_matrix(const MatrixModel& model, double threshold = 1e-12);

/// Frobenius norm of the beta-odd part of U H U^dagger.
double block_diag_residual(const MatrixModel& model, const Matrix& U);

/// Frobenius norm of beta U - U^dagger beta.
double eriksen_condition_residual(const MatrixModel& model, const Matrix& U);

/// Frobenius norm of U^dagger U - 1.
double unitarity_error(const Matrix& U);

/// exp(i R) for Hermitian R.
Matrix exp_i_hermitian(const Matrix& R);

/// Sorted real eigenvalues of a Hermitian matrix.
Eigen::VectorXd spectrum(const Matrix& H);

/// Eigenvalues of the upper (beta = +1) block of U H U^dagger.
Eigen::VectorXd positive_block_spectrum(const MatrixModel& model, const Matrix& U);

}  // namespace fw::num
