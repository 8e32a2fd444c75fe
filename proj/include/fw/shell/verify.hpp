#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fw::shell {

enum class Suite { vc6, m4, eriksen8, dirac, numeric };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // diff listing or measured values
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
};

/// Runs the pipelines of a suite against the transcribed closed forms or
/// the numerical tolerances. Failures are report content, never exceptions.
VerifyReport verify(Suite suite);

/// "PASS name" / "FAIL name" lines (details indented), then a summary line.
std::string format_report(const VerifyReport& r);
nlohmann::json report_json(const VerifyReport& r);

}  // namespace fw::shell
