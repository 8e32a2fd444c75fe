#include "fw/shell/record.hpp"

#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace fw::shell {

using alg::Complex;
using alg::OperatorExpr;
using alg::Rational;
using nlohmann::json;

namespace {

json rational_json(const Rational& r)
{
    return json::array({r.num(), r.den()});
}

Rational rational_from(const json& j, const char* field)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument(fmt::format("record field '{}' must be [num, den] integers", field));
    std::int64_t den = j[1].get<std::int64_t>();
    if (den == 0) throw std::invalid_argument(fmt::format("record field '{}' has zero denominator", field));
    return Rational(j[0].get<std::int64_t>(), den);
}

}  // namespace

json serialize_record(const OperatorExpr& x)
{
    json terms = json::array();
    std::set<alg::SymbolId> used;
    for (const auto& [k, c] : x) {
        json word = json::array();
        for (alg::SymbolId s : k.word) {
            word.push_back(alg::symbol_info(s).name);
            if (s > alg::sym::E) used.insert(s);
        }
        terms.push_back({{"coeff_re", rational_json(c.re)},
                         {"coeff_im", rational_json(c.im)},
                         {"mass_power", k.mass_power},
                         {"hbar_power", k.hbar_power},
                         {"word", std::move(word)}});
    }
    json symbols = json::array();
    for (alg::SymbolId s : used) {
        const auto& info = alg::symbol_info(s);
        symbols.push_back({{"name", info.name},
                           {"parity", info.parity == alg::Parity::odd ? "odd" : "even"},
                           {"weight", info.weight_vc}});
    }
    return {{"schema", record_schema}, {"symbols", std::move(symbols)}, {"terms", std::move(terms)}};
}

OperatorExpr parse_record(const json& j)
{
    if (!j.is_object() || !j.contains("schema") || j["schema"] != record_schema)
        throw std::invalid_argument(fmt::format("expected an expression record with schema '{}'", record_schema));
    auto& reg = alg::SymbolRegistry::global();
    if (j.contains("symbols")) {
        for (const auto& s : j["symbols"]) {
            std::string parity = s.at("parity").get<std::string>();
            if (parity != "odd" && parity != "even")
                throw std::invalid_argument(fmt::format("bad parity '{}' in record", parity));
            reg.declare(s.at("name").get<std::string>(), parity == "odd" ? alg::Parity::odd : alg::Parity::even,
                        s.at("weight").get<int>());
        }
    }
    std::vector<alg::Term> raw;
    for (const auto& t : j.at("terms")) {
        alg::Term term;
        term.coeff = Complex(rational_from(t.at("coeff_re"), "coeff_re"), rational_from(t.at("coeff_im"), "coeff_im"));
        term.mass_power = t.at("mass_power").get<int>();
        term.hbar_power = t.at("hbar_power").get<int>();
        for (const auto& name : t.at("word")) {
            auto id = reg.find(name.get<std::string>());
            if (!id) throw std::invalid_argument(fmt::format("record uses undeclared symbol '{}'", name.get<std::string>()));
            term.word.push_back(*id);
        }
        raw.push_back(std::move(term));
    }
    return alg::normalize(raw);
}

}  // namespace fw::shell
