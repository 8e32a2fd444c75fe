#include "fw/alg/print.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace fw::alg {

namespace {

std::vector<std::string> word_names(const Word& w)
{
    std::vector<std::string> out;
    out.reserve(w.size());
    for (SymbolId s : w) out.push_back(symbol_info(s).name);
    return out;
}

}  // namespace

std::vector<Term> ordered_terms(const OperatorExpr& x, WeightScheme scheme)
{
    std::vector<Term> terms = x.terms();
    std::stable_sort(terms.begin(), terms.end(), [scheme](const Term& a, const Term& b) {
        int oa = order(TermKey{a.word, a.mass_power, a.hbar_power}, scheme);
        int ob = order(TermKey{b.word, b.mass_power, b.hbar_power}, scheme);
        if (oa != ob) return oa < ob;
        auto na = word_names(a.word);
        auto nb = word_names(b.word);
        if (na != nb) return na < nb;
        if (a.mass_power != b.mass_power) return a.mass_power < b.mass_power;
        return a.hbar_power < b.hbar_power;
    });
    return terms;
}

std::string format_term(const Term& t, bool& negative)
{
    std::vector<std::string> factors;
    Complex c = t.coeff;
    negative = (c.is_real() && c.re < Rational(0)) || (c.re.is_zero() && c.im < Rational(0));
    if (negative) c = -c;
    if (c != Complex(1)) factors.push_back(c.to_string());
    for (std::size_t i = 0; i < t.word.size();) {
        std::size_t j = i;
        while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
        const std::string& name = symbol_info(t.word[i]).name;
        factors.push_back(j - i == 1 ? name : fmt::format("{}^{}", name, j - i));
        i = j;
    }
    if (t.mass_power == -1)
        factors.push_back("m");
    else if (t.mass_power != 0)
        factors.push_back(fmt::format("m^{}", -t.mass_power));
    if (t.hbar_power == 1)
        factors.push_back("hbar");
    else if (t.hbar_power != 0)
        factors.push_back(fmt::format("hbar^{}", t.hbar_power));
    if (factors.empty()) return "1";
    return fmt::format("{}", fmt::join(factors, "*"));
}

std::string to_string(const OperatorExpr& x, WeightScheme scheme)
{
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : ordered_terms(x, scheme)) {
        bool negative = false;
        std::string body = format_term(t, negative);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace fw::alg
