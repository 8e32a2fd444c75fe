#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fw/alg/expr.hpp"
#include "fw/dirac/dirac_expr.hpp"

namespace fw::reference {

enum class ReferenceId {
    H_prime_34,
    S_prime_34,
    H_dprime_34,
    S_dprime_34,
    H_orig_35,
    H_corr_38,
    Steps_39,
    H_orig_40,
    H_corr_43,
    Eriksen_24,
    A24_25,
    FreeParticle_22,
    Dirac_13,
};

std::string_view name(ReferenceId id);

/// One printed summand: coefficient * prefactor * body.
///
/// The coefficient is kept separate so tests can inspect the literal numbers
/// as written (e.g. the 9/2 pair inside A24).
struct ReferencePart {
    std::string label;
    alg::Rational coefficient;
    alg::OperatorExpr prefactor;
    alg::OperatorExpr body;

    alg::OperatorExpr value() const;
};

/// Summands of a single-expression reference. Throws std::invalid_argument
/// for Steps_39 and Dirac_13, which are not single abstract expressions.
std::vector<ReferencePart> parts(ReferenceId id);

/// Normalized sum of parts(id).
alg::OperatorExpr build(ReferenceId id);

/// Exponents of successive steps: S, S', S'' for the velocity example
/// (S'' of the sequence is S_dprime_34) and S, S', S'', S''' for the
/// mass-order example.
std::vector<alg::OperatorExpr> build_sequence(ReferenceId id);

/// The field-level result through 1/m^2 (truncated at c^-2).
dirac::DiracExpr build_dirac13();

}  // namespace fw::reference
