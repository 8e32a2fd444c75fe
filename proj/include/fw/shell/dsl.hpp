#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fw/alg/expr.hpp"

namespace fw::shell {

enum class Method { fw, fw_corrected, eriksen };

std::string_view method_name(Method m);

struct SymbolDecl {
    std::string name;
    alg::Parity parity = alg::Parity::even;
    int weight = 0;
};

/// A parsed specification:
///
///   # comment
///   symbol Q even weight 2;
///   H = beta*m + F + O + Q;
///   scheme vc; order 6; method fw-corrected; steps 3
///
/// Statements are separated by ';' (the last one may omit it). Expressions
/// use + - * / ^, parentheses, [a, b] and {a, b}, rational literals, i, hbar,
/// the built-ins beta, m (= mc^2), E, F, O and declared symbols. Division
/// and negative powers are allowed only for scalars and powers of m.
struct HamiltonianSpec {
    std::vector<SymbolDecl> declarations;
    alg::OperatorExpr hamiltonian;
    alg::WeightScheme scheme = alg::WeightScheme::velocity;
    int max_order = 6;
    Method method = Method::fw_corrected;
    std::optional<int> steps;
};

/// Throws SyntaxError, UnknownSymbol or DuplicateDeclaration.
HamiltonianSpec parse_spec(std::string_view text);

/// Parses a bare expression over the built-ins and the given declarations.
alg::OperatorExpr parse_expression(std::string_view text, const std::vector<SymbolDecl>& declarations = {});

}  // namespace fw::shell
