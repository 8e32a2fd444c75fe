#include "fw/reference/diff.hpp"

#include <fmt/format.h>

#include "fw/alg/print.hpp"

namespace fw::reference {

using alg::Complex;
using alg::OperatorExpr;

DiffReport diff(const OperatorExpr& a, const OperatorExpr& b)
{
    DiffReport r;
    r.delta = b - a;
    for (const auto& [key, ca] : a) {
        Complex cb = b.coefficient(key);
        if (cb.is_zero())
            r.extra.push_back({key, ca, cb});
        else if (cb != ca)
            r.mismatched.push_back({key, ca, cb});
    }
    for (const auto& [key, cb] : b)
        if (a.coefficient(key).is_zero()) r.missing.push_back({key, Complex(), cb});
    return r;
}

namespace {

std::string key_text(const alg::TermKey& key)
{
    alg::Term t{Complex(1), key.mass_power, key.hbar_power, key.word};
    bool negative = false;
    return alg::format_term(t, negative);
}

}  // namespace

std::string describe(const DiffReport& report)
{
    if (report.empty()) return "no differences\n";
    std::string out;
    for (const auto& d : report.missing)
        out += fmt::format("missing     {}  expected {}\n", key_text(d.key), d.in_b.to_string());
    for (const auto& d : report.extra)
        out += fmt::format("extra       {}  found {}\n", key_text(d.key), d.in_a.to_string());
    for (const auto& d : report.mismatched)
        out += fmt::format("coefficient {}  {} vs {}\n", key_text(d.key), d.in_a.to_string(), d.in_b.to_string());
    return out;
}

}  // namespace fw::reference
