#pragma once

#include "fw/alg/expr.hpp"

namespace fw::transform {

/// Exact one-step transformation expanded as a series.
///
/// lambda = H (H^2)^(-1/2) through the binomial series of (1 + X)^(-1/2) with
/// X = (H^2 - m^2c^4)/(m^2c^4); U = (1 + beta lambda)(2 + beta lambda + lambda beta)^(-1/2);
/// returns U H U^dagger truncated at max_order. No commutativity between the
/// odd and even parts is assumed. Throws NotStationary if H contains F.
alg::OperatorExpr eriksen_series(const alg::OperatorExpr& H, alg::WeightScheme scheme, int max_order);

/// The series form of the Eriksen operator U itself, exact through max_order.
alg::OperatorExpr eriksen_operator(const alg::OperatorExpr& H, alg::WeightScheme scheme, int max_order);

/// The sign operator lambda = H (H^2)^(-1/2), exact through max_order.
alg::OperatorExpr sign_operator(const alg::OperatorExpr& H, alg::WeightScheme scheme, int max_order);

}  // namespace fw::transform
