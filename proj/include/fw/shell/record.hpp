#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "fw/alg/expr.hpp"

namespace fw::shell {

/// Schema tag carried by every expression record.
inline constexpr std::string_view record_schema = "fw.expression-record/1";

/// Structured record of an expression. Exact integers only:
///   { "schema": ..., "symbols": [{name, parity, weight}], "terms": [
///       {"coeff_re": [num, den], "coeff_im": [num, den],
///        "mass_power": int, "hbar_power": int, "word": [names]} ] }
/// Non-built-in symbols are listed under "symbols" so a record can be read
/// back in a fresh process.
nlohmann::json serialize_record(const alg::OperatorExpr& x);

/// Inverse of serialize_record. Throws std::invalid_argument on malformed
/// input or a schema mismatch.
alg::OperatorExpr parse_record(const nlohmann::json& j);

}  // namespace fw::shell
