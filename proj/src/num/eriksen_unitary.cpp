#include "fw/num/eriksen_unitary.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fw/errors.hpp"

namespace fw::num {

namespace {

// f(A) for Hermitian A through its eigendecomposition.
template <class F>
Matrix hermitian_function(const Matrix& A, F f)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(A);
    const Matrix& V = es.eigenvectors();
    Eigen::VectorXcd d(A.rows());
    for (Eigen::Index k = 0; k < A.rows(); ++k) d(k) = f(es.eigenvalues()(k));
    return V * d.asDiagonal() * V.adjoint();
}

}  // namespace

Matrix sign_matrix(const MatrixModel& model, double threshold)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(model.hamiltonian);
    double smallest = es.eigenvalues().cwiseAbs().minCoeff();
    if (smallest < threshold)
        throw SingularSign(fmt::format("eigenvalue of magnitude {:.3g} below {:.3g}", smallest, threshold));
    const Matrix& V = es.eigenvectors();
    Eigen::VectorXcd s = es.eigenvalues().unaryExpr([](double e) { return e > 0 ? 1.0 : -1.0; }).cast<std::complex<double>>();
    return V * s.asDiagonal() * V.adjoint();
}

Matrix eriksen_unitary(const MatrixModel& model, double threshold)
{
    const Matrix lambda = sign_matrix(model, threshold);
    const Matrix& beta = model.beta_matrix;
    const Matrix bl = beta * lambda;
    const Eigen::Index n = model.dim();
    Matrix M = 2.0 * Matrix::Identity(n, n) + bl + lambda * beta;
    M = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    if (es.eigenvalues().minCoeff() < threshold)
        throw SingularSign("2 + beta lambda + lambda beta is singular");
    Matrix inv_sqrt = hermitian_function(M, [](double e) { return std::complex<double>(1.0 / std::sqrt(e)); });
    return (Matrix::Identity(n, n) + bl) * inv_sqrt;
}

double block_diag_residual(const MatrixModel& model, const Matrix& U)
{
    const Matrix T = U * model.hamiltonian * U.adjoint();
    const Matrix& b = model.beta_matrix;
    return (0.5 * (T - b * T * b)).norm();
}

double eriksen_condition_residual(const MatrixModel& model, const Matrix& U)
{
    return (model.beta_matrix * U - U.adjoint() * model.beta_matrix).norm();
}

double unitarity_error(const Matrix& U)
{
    return (U.adjoint() * U - Matrix::Identity(U.rows(), U.cols())).norm();
}

Matrix exp_i_hermitian(const Matrix& R)
{
    return hermitian_function(0.5 * (R + R.adjoint()), [](double e) { return std::polar(1.0, e); });
}

Eigen::VectorXd spectrum(const Matrix& H)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Eigen::VectorXd positive_block_spectrum(const MatrixModel& model, const Matrix& U)
{
    const Matrix T = U * model.hamiltonian * U.adjoint();
    std::vector<Eigen::Index> plus;
    for (Eigen::Index k = 0; k < model.dim(); ++k)
        if (model.beta_matrix(k, k).real() > 0) plus.push_back(k);
    const auto n = static_cast<Eigen::Index>(plus.size());
    Matrix block(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) block(r, c) = T(plus[static_cast<std::size_t>(r)], plus[static_cast<std::size_t>(c)]);
    return spectrum(block);
}

}  // namespace fw::num
