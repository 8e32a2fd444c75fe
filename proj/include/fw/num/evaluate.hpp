#pragma once

#include "fw/alg/expr.hpp"
#include "fw/num/model.hpp"

namespace fw::num {

/// Direct substitution beta -> beta_matrix, O -> (H - beta H beta)/2,
/// E and F -> (H + beta H beta)/2 - beta mc^2, 1/(mc^2) -> its value, hbar -> 1.
/// Throws UnboundSymbol for any other symbol.
Matrix evaluate_symbolic(const alg::OperatorExpr& expr, const MatrixModel& model);

/// Spectral norm.
double spectral_norm(const Matrix& m);

}  // namespace fw::num
