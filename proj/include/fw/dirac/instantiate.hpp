#pragma once

#include "fw/alg/expr.hpp"
#include "fw/dirac/dirac_expr.hpp"

namespace fw::dirac {

struct FieldContext {
    /// Phi = A = 0: all field letters vanish and pi reduces to p.
    bool free = false;
};

/// Substitutes O -> c alpha.pi, E -> e Phi, F -> F (atomic), beta -> beta and
/// mass_power p -> m^-p c^-2p. Throws UnreducedWord for any other symbol.
DiracExpr instantiate(const alg::OperatorExpr& abstract, const FieldContext& ctx = {});

/// c alpha.pi
DiracExpr odd_dirac();

}  // namespace fw::dirac
