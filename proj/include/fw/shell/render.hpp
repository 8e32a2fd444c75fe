#pragma once

#include <string>
#include <vector>

#include "fw/alg/expr.hpp"

namespace fw::shell {

enum class OutputFormat { text, latex, record };

/// DSL-compatible text, e.g. "1/2*beta*O^2*m^-1". Zero renders as "0".
std::string render_text(const alg::OperatorExpr& x, alg::WeightScheme scheme = alg::WeightScheme::velocity);

/// LaTeX with m-powers paired with c-powers, e.g. "\beta\frac{{\cal O}^2}{2mc^2}".
std::string render_latex(const alg::OperatorExpr& x, alg::WeightScheme scheme = alg::WeightScheme::velocity);

std::string render(const alg::OperatorExpr& x, OutputFormat format,
                   alg::WeightScheme scheme = alg::WeightScheme::velocity);

}  // namespace fw::shell
