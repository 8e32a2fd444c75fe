#include "fw/dirac/dirac_expr.hpp"
#include "fw/reference/reference.hpp"

namespace fw::reference {

using alg::Complex;
using alg::Rational;
using namespace fw::dirac;

namespace {

DiracExpr k(Rational c, Units u) { return DiracExpr::scalar(Complex(c), u); }

}  // namespace

DiracExpr build_dirac13()
{
    DiracExpr pi2, pi_dot_b, sigma_pi_x_e, sigma_e_x_pi, div_e;
    for (int a = 0; a < 3; ++a) {
        pi2 += DiracExpr::pi(a) * DiracExpr::pi(a);
        pi_dot_b += DiracExpr::gamma(Pi(a)) * DiracExpr::field(B_field(a));
        div_e += DiracExpr::field(E_field(a).derivative(a));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int l = 0; l < 3; ++l) {
                int eps = levi_civita(i, j, l);
                if (eps == 0) continue;
                DiracExpr s = DiracExpr::gamma(Sigma(l));
                sigma_pi_x_e += Complex(eps) * (s * DiracExpr::pi(i) * DiracExpr::field(E_field(j)));
                sigma_e_x_pi += Complex(eps) * (s * DiracExpr::field(E_field(i)) * DiracExpr::pi(j));
            }
        }
    }
    DiracExpr beta = DiracExpr::gamma(beta_gamma);
    DiracExpr kinetic = k(1, {2, 1, 0, 0}) + k(Rational(1, 2), {0, -1, 0, 0}) * pi2
                        - k(Rational(1, 8), {-2, -3, 0, 0}) * pi2 * pi2;
    DiracExpr out = beta * kinetic;
    out += k(1, {0, 0, 1, 0}) * DiracExpr::field(Phi());
    out -= k(Rational(1, 2), {-1, -1, 1, 1}) * pi_dot_b;
    out += k(Rational(1, 8), {-2, -2, 1, 1}) * (sigma_pi_x_e - sigma_e_x_pi - k(1, {0, 0, 0, 1}) * div_e);
    return truncate_c(out, -2);
}

}  // namespace fw::reference
