#pragma once

#include <string>
#include <vector>

#include "fw/alg/expr.hpp"

namespace fw::reference {

struct TermDifference {
    alg::TermKey key;
    alg::Complex in_a;
    alg::Complex in_b;
};

/// Term-level comparison of two normalized expressions.
struct DiffReport {
    std::vector<TermDifference> missing;     // in b only
    std::vector<TermDifference> extra;       // in a only
    std::vector<TermDifference> mismatched;  // in both, different coefficient
    alg::OperatorExpr delta;                 // b - a

    bool empty() const noexcept { return missing.empty() && extra.empty() && mismatched.empty(); }
};

DiffReport diff(const alg::OperatorExpr& a, const alg::OperatorExpr& b);

/// Human-readable listing, one difference per line; "no differences" if empty.
std::string describe(const DiffReport& report);

}  // namespace fw::reference
