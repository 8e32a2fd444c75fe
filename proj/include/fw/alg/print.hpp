#pragma once

#include <string>
#include <vector>

#include "fw/alg/expr.hpp"

namespace fw::alg {

/// Terms sorted by order under `scheme`, then by word (symbol names), then by
/// the m and hbar powers.
std::vector<Term> ordered_terms(const OperatorExpr& x, WeightScheme scheme = WeightScheme::velocity);

/// One term in DSL syntax without its sign; `negative` receives the sign.
std::string format_term(const Term& t, bool& negative);

/// Whole expression in DSL syntax, e.g. "beta*m + E + 1/2*beta*O^2*m^-1".
std::string to_string(const OperatorExpr& x, WeightScheme scheme = WeightScheme::velocity);

}  // namespace fw::alg
