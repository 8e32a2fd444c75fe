#include "fw/num/model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fw::num {

using cd = std::complex<double>;

Eigen::Matrix4cd dirac_beta()
{
    Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
    b.diagonal() << 1, 1, -1, -1;
    return b;
}

Eigen::Matrix4cd dirac_alpha(int axis)
{
    Eigen::Matrix2cd s;
    const cd i(0, 1);
    switch (axis) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -i, i, 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("axis");
    }
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    a.block<2, 2>(0, 2) = s;
    a.block<2, 2>(2, 0) = s;
    return a;
}

MatrixModel free_particle(const std::array<double, 3>& p_over_mc, double mass, double c)
{
    MatrixModel m;
    m.kind = MatrixModel::Kind::free_momentum;
    m.mass = mass;
    m.c = c;
    Eigen::Matrix4cd h = mass * c * c * dirac_beta();
    double p2 = 0;
    for (int a = 0; a < 3; ++a) {
        double p = p_over_mc[static_cast<std::size_t>(a)] * mass * c;
        m.momentum[static_cast<std::size_t>(a)] = p;
        h += c * p * dirac_alpha(a);
        p2 += p_over_mc[static_cast<std::size_t>(a)] * p_over_mc[static_cast<std::size_t>(a)];
    }
    m.regime = std::sqrt(p2);
    m.hamiltonian = h;
    m.beta_matrix = dirac_beta();
    return m;
}

MatrixModel lattice1d(int sites, double spacing, const Profile& V, double mass, double c)
{
    if (sites < 3) throw std::invalid_argument("lattice needs at least 3 sites");
    MatrixModel m;
    m.kind = MatrixModel::Kind::lattice1d;
    m.mass = mass;
    m.c = c;
    m.sites = sites;
    m.spacing = spacing;
    const Eigen::Index n = 4 * static_cast<Eigen::Index>(sites);
    m.hamiltonian = Matrix::Zero(n, n);
    m.beta_matrix = Matrix::Zero(n, n);
    const Eigen::Matrix4cd beta = dirac_beta();
    const Eigen::Matrix4cd kin = c * dirac_alpha(0) * cd(0, -1.0 / (2.0 * spacing));
    double depth = 0;
    for (int j = 0; j < sites; ++j) {
        const Eigen::Index at = 4 * j;
        const Eigen::Index up = 4 * ((j + 1) % sites);
        const Eigen::Index down = 4 * ((j + sites - 1) % sites);
        double v = V((j - sites / 2) * spacing);
        depth = std::max(depth, -v);
        m.beta_matrix.block<4, 4>(at, at) = beta;
        m.hamiltonian.block<4, 4>(at, at) += mass * c * c * beta + v * Eigen::Matrix4cd::Identity();
        // -i d/dx psi_j = -i (psi_{j+1} - psi_{j-1}) / 2h
        m.hamiltonian.block<4, 4>(at, up) += kin;
        m.hamiltonian.block<4, 4>(at, down) -= kin;
    }
    m.regime = depth;
    return m;
}

Profile gaussian_well(double depth, double width)
{
    return [depth, width](double x) { return -depth * std::exp(-x * x / (2 * width * width)); };
}

Profile coulomb_regularized(double strength, double a)
{
    return [strength, a](double x) { return -strength / std::sqrt(x * x + a * a); };
}

double hermiticity_error(const Matrix& m) { return (m - m.adjoint()).norm(); }

}  // namespace fw::num
