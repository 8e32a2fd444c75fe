#pragma once

#include "fw/alg/expr.hpp"

namespace fw::transform {

/// Z with exp(Z) = exp(A) exp(B), exact through max_order.
///
/// Uses Dynkin's form of the Baker-Campbell-Hausdorff series: the degree-n
/// part of log(exp(X) exp(Y)) in the free algebra on two letters is mapped to
/// (1/n) times right-nested commutators of A and B. Words are generated until
/// their minimum possible order exceeds max_order, so no depth is hard-coded.
/// Throws NonIncreasingOrder if A or B has a term of order < 1.
alg::OperatorExpr bch_combine(const alg::OperatorExpr& A, const alg::OperatorExpr& B, alg::WeightScheme scheme,
                              int max_order);

}  // namespace fw::transform
