#include "fw/alg/series.hpp"

#include "fw/errors.hpp"

#include <fmt/format.h>

namespace fw::alg {

namespace {

void require_positive_order(const OperatorExpr& x, WeightScheme scheme, const char* what)
{
    auto mo = min_order(x, scheme);
    if (mo && *mo < 1)
        throw NonIncreasingOrder(fmt::format("{} has a term of order {}; the series would not terminate", what, *mo));
}

}  // namespace

OperatorExpr ad_exp_conjugate(const OperatorExpr& S, const OperatorExpr& K, WeightScheme scheme, int max_order)
{
    OperatorExpr result = truncate(K, scheme, max_order);
    if (S.is_zero()) return result;
    require_positive_order(S, scheme, "exponent");

    OperatorExpr current = result;
    for (int n = 1; !current.is_zero(); ++n) {
        current = commutator(S, current, scheme, max_order);
        current *= Complex(0, Rational(1, n));
        result += current;
    }
    return result;
}

OperatorExpr exp_series(const OperatorExpr& A, WeightScheme scheme, int max_order)
{
    OperatorExpr result = OperatorExpr::scalar(1);
    if (A.is_zero()) return truncate(result, scheme, max_order);
    require_positive_order(A, scheme, "exponent");

    OperatorExpr current = result;
    for (int n = 1;; ++n) {
        current = mul(current, A, scheme, max_order);
        if (current.is_zero()) break;
        current *= Rational(1, n);
        result += current;
    }
    return truncate(result, scheme, max_order);
}

Rational binomial(const Rational& alpha, unsigned k)
{
    Rational r = 1;
    for (unsigned j = 0; j < k; ++j) {
        r *= alpha - Rational(j);
        r /= Rational(j + 1);
    }
    return r;
}

OperatorExpr binomial_series(const OperatorExpr& X, const Rational& alpha, WeightScheme scheme, int max_order)
{
    OperatorExpr result = OperatorExpr::scalar(1);
    if (X.is_zero()) return truncate(result, scheme, max_order);
    require_positive_order(X, scheme, "expansion variable");

    OperatorExpr power = result;
    for (unsigned k = 1;; ++k) {
        power = mul(power, X, scheme, max_order);
        if (power.is_zero()) break;
        result += binomial(alpha, k) * power;
    }
    return truncate(result, scheme, max_order);
}

}  // namespace fw::alg
