#pragma once

#include "fw/alg/expr.hpp"

namespace fw::alg {

/// exp(iS) K exp(-iS) = sum_n i^n/n! ad_S^n(K), exact through max_order.
///
/// Every nested commutator raises the minimum order by at least
/// min-order(S), so the series is finite. Throws NonIncreasingOrder if S
/// has a term of order < 1.
OperatorExpr ad_exp_conjugate(const OperatorExpr& S, const OperatorExpr& K, WeightScheme scheme, int max_order);

/// exp(A) = sum A^n/n!, truncated. A must have minimum order >= 1.
OperatorExpr exp_series(const OperatorExpr& A, WeightScheme scheme, int max_order);

/// (1 + X)^alpha = sum binom(alpha, k) X^k, truncated. X must have minimum order >= 1.
OperatorExpr binomial_series(const OperatorExpr& X, const Rational& alpha, WeightScheme scheme, int max_order);

/// Generalized binomial coefficient binom(alpha, k).
Rational binomial(const Rational& alpha, unsigned k);

}  // namespace fw::alg
