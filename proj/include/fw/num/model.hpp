#pragma once

#include <array>
#include <functional>

#include <Eigen/Dense>

namespace fw::num {

using Matrix = Eigen::MatrixXcd;

/// Finite Dirac Hamiltonian together with its beta matrix. Units with hbar = 1.
struct MatrixModel {
    enum class Kind { free_momentum, lattice1d };

    Kind kind = Kind::free_momentum;
    double mass = 1.0;
    double c = 1.0;
    std::array<double, 3> momentum{};  // free_momentum only
    int sites = 0;                     // lattice1d only
    double spacing = 0.0;
    double regime = 0.0;  // |p|/(mc) for free models, well depth for lattices
    Matrix hamiltonian;
    Matrix beta_matrix;

    Eigen::Index dim() const { return hamiltonian.rows(); }
    double rest_energy() const { return mass * c * c; }
};

/// H = beta mc^2 + c alpha.p in the standard representation; p in units of mc.
MatrixModel free_particle(const std::array<double, 3>& p_over_mc, double mass = 1.0, double c = 1.0);

using Profile = std::function<double(double)>;

/// 1D lattice H = beta mc^2 + c alpha_1 p + V(x) with periodic central
/// differences. Basis index 4*site + spinor; x_j = (j - N/2) * spacing.
MatrixModel lattice1d(int sites, double spacing, const Profile& V, double mass = 1.0, double c = 1.0);

/// V(x) = -depth * exp(-x^2 / (2 width^2))
Profile gaussian_well(double depth, double width);

/// V(x) = -strength / sqrt(x^2 + a^2)
Profile coulomb_regularized(double strength, double a);

/// 4x4 Dirac matrices of the standard representation, axes 0..2.
Eigen::Matrix4cd dirac_beta();
Eigen::Matrix4cd dirac_alpha(int axis);

double hermiticity_error(const Matrix& m);

}  // namespace fw::num
