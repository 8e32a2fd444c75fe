#include <gtest/gtest.h>

#include <cmath>

#include "fw/errors.hpp"
#include "fw/num/eriksen_unitary.hpp"
#include "fw/num/evaluate.hpp"
#include "fw/num/model.hpp"
#include "fw/num/probe.hpp"
#include "fw/reference/reference.hpp"
#include "fw/transform/pipeline.hpp"
#include "gen.hpp"

using namespace fw::num;
using fw::alg::WeightScheme;
namespace ops = fw::alg::ops;

namespace {

MatrixModel small_lattice() { return lattice1d(24, 0.25, gaussian_well(0.5, 0.8)); }

double max_gap(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Model, FreeParticle)
{
    auto m = free_particle({0.3, -0.4, 0.0});
    EXPECT_EQ(m.dim(), 4);
    EXPECT_NEAR(m.regime, 0.5, 1e-15);
    EXPECT_LT(hermiticity_error(m.hamiltonian), 1e-15);
    auto ev = spectrum(m.hamiltonian);
    double e = std::sqrt(1.25);
    EXPECT_NEAR(ev(0), -e, 1e-12);
    EXPECT_NEAR(ev(3), e, 1e-12);
}

TEST(Model, DiracMatrices)
{
    auto b = dirac_beta();
    for (int i = 0; i < 3; ++i) {
        auto a = dirac_alpha(i);
        EXPECT_LT((a * b + b * a).norm(), 1e-15);
        EXPECT_LT((a * a - Eigen::Matrix4cd::Identity()).norm(), 1e-15);
    }
}

TEST(Model, Lattice)
{
    auto m = small_lattice();
    EXPECT_EQ(m.dim(), 96);
    EXPECT_LT(hermiticity_error(m.hamiltonian), 1e-14);
    EXPECT_LT((m.beta_matrix * m.beta_matrix - Matrix::Identity(96, 96)).norm(), 1e-14);
    EXPECT_NEAR(gaussian_well(0.5, 0.8)(0.0), -0.5, 1e-15);
    EXPECT_NEAR(coulomb_regularized(1.0, 0.5)(0.0), -2.0, 1e-15);
}

TEST(Unitary, RestFrameIsIdentity)
{
    auto m = free_particle({0.0, 0.0, 0.0});
    auto U = eriksen_unitary(m);
    EXPECT_LT((U - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(Unitary, FreeParticleSpectrum)
{
    auto m = free_particle({0.2, 0.1, -0.45});
    double p = std::sqrt(0.04 + 0.01 + 0.2025);
    auto U = eriksen_unitary(m);
    EXPECT_LT(unitarity_error(U), 1e-12);
    EXPECT_LT(block_diag_residual(m, U), 1e-10);
    EXPECT_LT(eriksen_condition_residual(m, U), 1e-10);
    auto pos = positive_block_spectrum(m, U);
    ASSERT_EQ(pos.size(), 2);
    for (int k = 0; k < 2; ++k) EXPECT_NEAR(pos(k), std::sqrt(1.0 + p * p), 1e-12);
    Matrix T = U * m.hamiltonian * U.adjoint();
    EXPECT_LT(max_gap(spectrum(T), spectrum(m.hamiltonian)), 1e-12);
}

TEST(Unitary, IdentityLeavesOffBlock)
{
    auto m = free_particle({0.5, 0.0, 0.0});
    EXPECT_GT(block_diag_residual(m, Matrix::Identity(4, 4)), 0.1);
}

TEST(Unitary, Lattice)
{
    auto m = small_lattice();
    auto U = eriksen_unitary(m);
    EXPECT_LT(unitarity_error(U), 1e-12);
    EXPECT_LT(block_diag_residual(m, U), 1e-10);
    EXPECT_LT(eriksen_condition_residual(m, U), 1e-10);
    Matrix T = U * m.hamiltonian * U.adjoint();
    EXPECT_LT(max_gap(spectrum(T), spectrum(m.hamiltonian)), 1e-10);
}

TEST(Unitary, SingularSign)
{
    auto m = free_particle({0.0, 0.0, 0.0});
    m.hamiltonian = Matrix::Zero(4, 4);
    EXPECT_THROW(eriksen_unitary(m), fw::SingularSign);
    EXPECT_THROW(sign_matrix(m), fw::SingularSign);
}

TEST(Unitary, ExpOfHermitian)
{
    Matrix R = small_lattice().hamiltonian * 0.1;
    Matrix U = exp_i_hermitian(R);
    EXPECT_LT(unitarity_error(U), 1e-12);
    EXPECT_LT((U * exp_i_hermitian(-R) - Matrix::Identity(R.rows(), R.cols())).norm(), 1e-12);
}

TEST(Evaluate, Letters)
{
    auto m = small_lattice();
    EXPECT_LT((evaluate_symbolic(ops::beta(), m) - m.beta_matrix).norm(), 1e-15);
    Matrix H = evaluate_symbolic(ops::rest_energy() + ops::E() + ops::O(), m);
    EXPECT_LT((H - m.hamiltonian).norm(), 1e-12);
    auto q = fw::alg::SymbolRegistry::global().declare("Qnum", fw::alg::Parity::even, 2);
    EXPECT_THROW(evaluate_symbolic(fw::alg::OperatorExpr::symbol(q), m), fw::UnboundSymbol);
}

TEST(Evaluate, CommutatorOracle)
{
    auto m = small_lattice();
    const Matrix& H = m.hamiltonian;
    const Matrix& b = m.beta_matrix;
    Matrix odd = 0.5 * (H - b * H * b);
    Matrix even = 0.5 * (H + b * H * b) - b;
    Matrix direct = odd * even - even * odd;
    EXPECT_GT(direct.norm(), 1e-3);
    EXPECT_LT((evaluate_symbolic(ops::comm(ops::O(), ops::E()), m) - direct).norm(), 1e-12);
}

TEST(Evaluate, Homomorphism)
{
    auto m = small_lattice();
    fwtest::Gen g(41);
    for (int k = 0; k < 200; ++k) {
        auto a = g.expr(3, 3), b = g.expr(3, 3);
        Matrix lhs = evaluate_symbolic(a * b, m);
        Matrix rhs = evaluate_symbolic(a, m) * evaluate_symbolic(b, m);
        EXPECT_LT((lhs - rhs).norm(), 1e-9 * (1.0 + rhs.norm()));
    }
}

TEST(Evaluate, SeriesErrorScalesWithEighthPower)
{
    auto H = fw::reference::build(fw::reference::ReferenceId::H_orig_35);
    auto err = [&H](double p) {
        auto m = free_particle({p, 0.0, 0.0});
        Matrix exact = std::sqrt(1.0 + p * p) * m.beta_matrix;
        return spectral_norm(evaluate_symbolic(fw::alg::substitute(H, fw::alg::sym::F, fw::alg::sym::E), m) - exact);
    };
    double ratio = err(0.2) / err(0.1);
    EXPECT_GT(ratio, 230.0);
    EXPECT_LT(ratio, 280.0);
}

TEST(Evaluate, TruncatedExponentsImproveWithOrder)
{
    auto m = free_particle({0.3, 0.0, 0.0});
    double previous = block_diag_residual(m, Matrix::Identity(4, 4));
    for (int n : {2, 4, 6}) {
        auto rec = fw::transform::fw_pipeline(ops::rest_energy() + ops::O(), WeightScheme::velocity, n,
                                              fw::transform::default_steps(WeightScheme::velocity, n));
        Matrix R = evaluate_symbolic(fw::transform::combine_steps(rec), m);
        double r = block_diag_residual(m, exp_i_hermitian(R));
        EXPECT_GT(r, 0.0);
        EXPECT_LT(r, previous) << "order " << n;
        previous = r;
    }
}

TEST(Probe, Classification)
{
    EXPECT_EQ(classify({{2, 1.0}, {4, 0.5}, {6, 0.25}}), SeriesBehaviour::converging);
    EXPECT_EQ(classify({{2, 1.0}, {4, 0.5}, {6, 0.6}, {8, 0.7}}), SeriesBehaviour::diverging);
    EXPECT_EQ(classify({{2, 1.0}, {4, 1.0}, {6, 1.0}}), SeriesBehaviour::diverging);
    EXPECT_EQ(classify({{2, 1.0}}), SeriesBehaviour::converging);
}

TEST(Probe, FreeParticle)
{
    auto slow = convergence_probe(0.5, {2, 4, 6, 8});
    ASSERT_EQ(slow.norms.size(), 4u);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_LT(slow.norms[k].second, slow.norms[k - 1].second);
    EXPECT_EQ(slow.classification, SeriesBehaviour::converging);
    // order-2 contribution is p^2/2m
    EXPECT_NEAR(slow.norms[0].second, 0.125, 1e-12);

    auto fast = convergence_probe(1.5, {2, 4, 6, 8});
    EXPECT_EQ(fast.classification, SeriesBehaviour::diverging);
    EXPECT_FALSE(fast.boundary);
    EXPECT_TRUE(convergence_probe(1.0, {2, 4, 6, 8}).boundary);
    EXPECT_NE(format_report(fast).find("diverging"), std::string::npos);
}
