#include "fw/shell/render.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "fw/alg/print.hpp"
#include "fw/shell/record.hpp"

namespace fw::shell {

using alg::Complex;
using alg::OperatorExpr;
using alg::Rational;
using alg::SymbolId;
using alg::Term;
using alg::WeightScheme;

namespace {

// Runs of equal letters: (symbol, exponent).
std::vector<std::pair<SymbolId, int>> runs(const alg::Word& w)
{
    std::vector<std::pair<SymbolId, int>> out;
    for (SymbolId s : w) {
        if (!out.empty() && out.back().first == s)
            ++out.back().second;
        else
            out.emplace_back(s, 1);
    }
    return out;
}

std::string latex_symbol(SymbolId s)
{
    switch (s) {
    case alg::sym::beta: return "\\beta";
    case alg::sym::O: return "{\\cal O}";
    case alg::sym::F: return "{\\cal F}";
    case alg::sym::E: return "{\\cal E}";
    default: return alg::symbol_info(s).name;
    }
}

std::string latex_mass(int p)
{
    if (p == 1) return "mc^2";
    return fmt::format("m^{}c^{{{}}}", p, 2 * p);
}

std::string term_latex(const Term& t, bool& negative)
{
    Complex c = t.coeff;
    negative = false;
    bool imaginary = false;
    Rational mag;
    std::string complex_prefix;
    if (c.is_real()) {
        mag = c.re.abs();
        negative = c.re < Rational(0);
    } else if (c.re.is_zero()) {
        imaginary = true;
        mag = c.im.abs();
        negative = c.im < Rational(0);
    } else {
        mag = 1;
        complex_prefix = fmt::format("({}{}{}i)", c.re.to_string(), c.im < Rational(0) ? "" : "+", c.im.to_string());
    }

    bool beta = !t.word.empty() && t.word.front() == alg::sym::beta;
    alg::Word body(t.word.begin() + (beta ? 1 : 0), t.word.end());
    std::string word;
    for (auto [s, n] : runs(body)) {
        word += latex_symbol(s);
        if (n > 1) word += fmt::format("^{}", n);
    }
    std::string hbar;
    if (t.hbar_power == 1)
        hbar = "\\hbar ";
    else if (t.hbar_power > 1)
        hbar = fmt::format("\\hbar^{} ", t.hbar_power);

    std::string num_mass = t.mass_power < 0 ? latex_mass(-t.mass_power) : "";
    std::string den_mass = t.mass_power > 0 ? latex_mass(t.mass_power) : "";
    std::string num_coeff = mag.num() == 1 ? "" : std::to_string(mag.num());
    std::string den_coeff = mag.den() == 1 ? "" : std::to_string(mag.den());

    std::string out = complex_prefix;
    if (den_coeff.empty() && den_mass.empty()) {
        out += num_coeff + (imaginary ? "i" : "") + (beta ? "\\beta " : "") + num_mass + hbar + word;
        if (out.empty()) out = "1";
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out;
    }
    std::string numerator = num_coeff + (imaginary ? "i" : "") + num_mass + hbar + word;
    while (!numerator.empty() && numerator.back() == ' ') numerator.pop_back();
    if (numerator.empty()) numerator = "1";
    out += (beta ? "\\beta" : "") + fmt::format("\\frac{{{}}}{{{}}}", numerator, den_coeff + den_mass);
    return out;
}

template <typename F>
std::string join_terms(const OperatorExpr& x, WeightScheme scheme, F&& fmt_term)
{
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : alg::ordered_terms(x, scheme)) {
        bool negative = false;
        std::string body = fmt_term(t, negative);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace

std::string render_text(const OperatorExpr& x, WeightScheme scheme)
{
    return alg::to_string(x, scheme);
}

std::string render_latex(const OperatorExpr& x, WeightScheme scheme)
{
    return join_terms(x, scheme, term_latex);
}

std::string render(const OperatorExpr& x, OutputFormat format, WeightScheme scheme)
{
    switch (format) {
    case OutputFormat::text: return render_text(x, scheme);
    case OutputFormat::latex: return render_latex(x, scheme);
    case OutputFormat::record: return serialize_record(x).dump();
    }
    return {};
}

}  // namespace fw::shell
