#include "fw/transform/eriksen.hpp"

#include <algorithm>

#include "fw/alg/series.hpp"
#include "fw/errors.hpp"
#include "fw/transform/pipeline.hpp"

namespace fw::transform {

using alg::Complex;
using alg::OperatorExpr;
using alg::Rational;
using alg::WeightScheme;
namespace sym = alg::sym;

namespace {

void require_stationary(const OperatorExpr& H)
{
    if (alg::contains_symbol(H, sym::F))
        throw NotStationary("the Eriksen series needs a stationary Hamiltonian (E, not F)");
    split_hamiltonian(H);
}

// Products against H lose exactness below order 0 (beta mc^2 has mass order -1),
// so the factors are carried that much further.
int working_order(const OperatorExpr& H, WeightScheme scheme, int max_order)
{
    return max_order - std::min(0, alg::min_order(H, scheme).value_or(0));
}

}  // namespace

OperatorExpr sign_operator(const OperatorExpr& H, WeightScheme scheme, int max_order)
{
    require_stationary(H);
    const int n = max_order;
    // H^2 = m^2c^4 (1 + X)
    OperatorExpr x = alg::mul(H, H) - OperatorExpr::mass_factor(-2);
    x = alg::truncate(OperatorExpr::mass_factor(2) * x, scheme, n);
    OperatorExpr inv_sqrt = alg::binomial_series(x, Rational(-1, 2), scheme, n);
    OperatorExpr h_over_mc2 = OperatorExpr::mass_factor(1) * H;
    return alg::mul(h_over_mc2, inv_sqrt, scheme, n);
}

OperatorExpr eriksen_operator(const OperatorExpr& H, WeightScheme scheme, int max_order)
{
    const int n = max_order;
    const OperatorExpr beta = OperatorExpr::symbol(sym::beta);
    OperatorExpr lambda = sign_operator(H, scheme, n);
    OperatorExpr bl = alg::mul(beta, lambda, scheme, n);
    OperatorExpr lb = alg::mul(lambda, beta, scheme, n);
    // (2 + y)^(-1/2) at y = 2 + Z is (1/2)(1 + Z/4)^(-1/2)
    OperatorExpr z = bl + lb - OperatorExpr::scalar(2);
    OperatorExpr g = Complex(Rational(1, 2)) * alg::binomial_series(Complex(Rational(1, 4)) * z, Rational(-1, 2), scheme, n);
    return alg::mul(OperatorExpr::scalar(1) + bl, g, scheme, n);
}

OperatorExpr eriksen_series(const OperatorExpr& H, WeightScheme scheme, int max_order)
{
    require_stationary(H);
    const int w = working_order(H, scheme, max_order);
    OperatorExpr u = eriksen_operator(H, scheme, w);
    OperatorExpr uh = alg::mul(u, H, scheme, w);
    return alg::truncate(alg::mul(uh, alg::adjoint(u), scheme, max_order), scheme, max_order);
}

}  // namespace fw::transform
