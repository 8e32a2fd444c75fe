#include "fw/shell/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "fw/errors.hpp"

namespace fw::shell {

using alg::Complex;
using alg::OperatorExpr;
using alg::Rational;

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::fw: return "fw";
    case Method::fw_corrected: return "fw-corrected";
    case Method::eriksen: return "eriksen";
    }
    return "?";
}

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++k) {
            if (src[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (k < src.size()) {
        unsigned char ch = static_cast<unsigned char>(src[k]);
        if (std::isspace(ch)) {
            advance(1);
        } else if (ch == '#') {
            while (k < src.size() && src[k] != '\n') advance(1);
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t e = k;
            while (e < src.size() && (std::isalnum(static_cast<unsigned char>(src[e])) || src[e] == '_')) ++e;
            out.push_back({Tok::ident, std::string(src.substr(k, e - k)), line, col});
            advance(e - k);
        } else if (std::isdigit(ch)) {
            std::size_t e = k;
            while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
            out.push_back({Tok::number, std::string(src.substr(k, e - k)), line, col});
            advance(e - k);
        } else if (std::string_view("+-*/^()[]{},;=").find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, static_cast<char>(ch)), line, col});
            advance(1);
        } else {
            throw SyntaxError(line, col, {"a token"}, "'" + std::string(1, static_cast<char>(ch)) + "'");
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

const std::set<std::string, std::less<>> reserved{
    "symbol", "even", "odd", "weight", "H", "scheme", "order", "method", "steps",
    "vc", "mass", "i", "hbar", "beta", "m", "E", "F", "O",
};

class Parser {
public:
    Parser(std::string_view text, std::vector<SymbolDecl> decls) : toks_(tokenize(text))
    {
        for (auto& d : decls) declare(d, toks_.front());
    }

    HamiltonianSpec spec()
    {
        HamiltonianSpec s;
        bool have_h = false;
        std::set<std::string> options;
        while (peek().kind != Tok::end) {
            const Token& t = peek();
            if (t.kind != Tok::ident) fail({"statement"});
            if (t.text != "symbol" && t.text != "H") {
                if (!options.insert(t.text).second)
                    throw DuplicateDeclaration(where(t) + "option '" + t.text + "' given twice");
            }
            if (t.text == "symbol") {
                next();
                SymbolDecl d;
                const Token& name = expect_ident("symbol name");
                d.name = name.text;
                const Token& par = expect_ident("'even' or 'odd'");
                if (par.text == "even")
                    d.parity = alg::Parity::even;
                else if (par.text == "odd")
                    d.parity = alg::Parity::odd;
                else
                    fail_at(par, {"'even'", "'odd'"});
                expect_keyword("weight");
                d.weight = integer();
                declare(d, name);
                s.declarations.push_back(d);
            } else if (t.text == "H") {
                if (have_h) throw DuplicateDeclaration(where(t) + "second Hamiltonian");
                next();
                expect_punct("=");
                s.hamiltonian = expr();
                have_h = true;
            } else if (t.text == "scheme") {
                next();
                const Token& v = expect_ident("'vc' or 'mass'");
                if (v.text == "vc")
                    s.scheme = alg::WeightScheme::velocity;
                else if (v.text == "mass")
                    s.scheme = alg::WeightScheme::mass;
                else
                    fail_at(v, {"'vc'", "'mass'"});
            } else if (t.text == "order") {
                next();
                s.max_order = integer();
            } else if (t.text == "method") {
                next();
                const Token& v = expect_ident("method name");
                std::string name = v.text;
                while (peek().kind == Tok::punct && peek().text == "-") {
                    next();
                    name += "-" + expect_ident("method name").text;
                }
                if (name == "fw")
                    s.method = Method::fw;
                else if (name == "fw-corrected")
                    s.method = Method::fw_corrected;
                else if (name == "eriksen")
                    s.method = Method::eriksen;
                else
                    fail_at(v, {"'fw'", "'fw-corrected'", "'eriksen'"});
            } else if (t.text == "steps") {
                next();
                s.steps = integer();
            } else {
                fail({"'symbol'", "'H'", "'scheme'", "'order'", "'method'", "'steps'"});
            }
            if (peek().kind == Tok::end) break;
            expect_punct(";");
        }
        if (!have_h) fail({"'H'"});
        if (!options.contains("order")) s.max_order = s.scheme == alg::WeightScheme::mass ? 4 : 6;
        return s;
    }

    OperatorExpr bare_expression()
    {
        OperatorExpr x = expr();
        if (peek().kind != Tok::end) fail({"operator", "end of input"});
        return x;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    static std::string describe(const Token& t)
    {
        if (t.kind == Tok::end) return "end of input";
        return "'" + t.text + "'";
    }
    static std::string where(const Token& t) { return std::to_string(t.line) + ":" + std::to_string(t.column) + ": "; }

    [[noreturn]] void fail_at(const Token& t, std::vector<std::string> expected) const
    {
        throw SyntaxError(t.line, t.column, std::move(expected), describe(t));
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const { fail_at(peek(), std::move(expected)); }

    const Token& expect_ident(const char* what)
    {
        if (peek().kind != Tok::ident) fail({what});
        return next();
    }
    void expect_keyword(const char* kw)
    {
        if (peek().kind != Tok::ident || peek().text != kw) fail({std::string("'") + kw + "'"});
        next();
    }
    void expect_punct(const char* p)
    {
        if (peek().kind != Tok::punct || peek().text != p) fail({std::string("'") + p + "'"});
        next();
    }
    bool accept_punct(const char* p)
    {
        if (peek().kind == Tok::punct && peek().text == p) {
            next();
            return true;
        }
        return false;
    }
    int integer()
    {
        if (peek().kind != Tok::number) fail({"integer"});
        const Token& t = next();
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc()) fail_at(t, {"integer in range"});
        return v;
    }

    void declare(const SymbolDecl& d, const Token& at)
    {
        if (reserved.contains(d.name)) throw DuplicateDeclaration(where(at) + "'" + d.name + "' is a built-in name");
        if (scope_.contains(d.name)) throw DuplicateDeclaration(where(at) + "'" + d.name + "' declared twice");
        if (d.weight < 0) throw SyntaxError(at.line, at.column, {"non-negative weight"}, std::to_string(d.weight));
        try {
            scope_[d.name] = alg::SymbolRegistry::global().declare(d.name, d.parity, d.weight);
        } catch (const std::invalid_argument& e) {
            throw DuplicateDeclaration(where(at) + e.what());
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    OperatorExpr expr()
    {
        OperatorExpr acc;
        bool negate = false;
        if (accept_punct("-"))
            negate = true;
        else
            accept_punct("+");
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept_punct("+"))
                acc += term();
            else if (accept_punct("-"))
                acc -= term();
            else
                return acc;
        }
    }

    // term := factor (('*'|'/') factor)*
    OperatorExpr term()
    {
        OperatorExpr acc = factor();
        for (;;) {
            if (accept_punct("*")) {
                acc = acc * factor();
            } else if (peek().kind == Tok::punct && peek().text == "/") {
                next();
                const Token& at = peek();
                acc = acc * inverse(factor(), at);
            } else {
                return acc;
            }
        }
    }

    // Inverse of a scalar times a power of m.
    OperatorExpr inverse(const OperatorExpr& x, const Token& at) const
    {
        if (x.size() != 1) fail_at(at, {"scalar or power of m"});
        const auto& [key, c] = *x.begin();
        if (!key.word.empty() || key.hbar_power != 0) fail_at(at, {"scalar or power of m"});
        OperatorExpr out;
        out.accumulate(alg::TermKey{{}, -key.mass_power, 0}, Complex(1) / c);
        return out;
    }

    // factor := primary ('^' ['-'] INT)*
    OperatorExpr factor()
    {
        const Token& start = peek();
        OperatorExpr base = primary();
        while (accept_punct("^")) {
            bool negative = accept_punct("-");
            int n = integer();
            if (negative) base = inverse(base, start);
            base = alg::pow(base, static_cast<unsigned>(n));
        }
        return base;
    }

    OperatorExpr primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            next();
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc()) fail_at(t, {"integer literal in range"});
            return OperatorExpr::scalar(Rational(v));
        }
        if (t.kind == Tok::punct) {
            if (accept_punct("(")) {
                OperatorExpr x = expr();
                expect_punct(")");
                return x;
            }
            if (accept_punct("[")) {
                OperatorExpr a = expr();
                expect_punct(",");
                OperatorExpr b = expr();
                expect_punct("]");
                return alg::commutator(a, b);
            }
            if (accept_punct("{")) {
                OperatorExpr a = expr();
                expect_punct(",");
                OperatorExpr b = expr();
                expect_punct("}");
                return alg::anticommutator(a, b);
            }
            fail({"number", "symbol", "'('", "'['", "'{'"});
        }
        if (t.kind != Tok::ident) fail({"number", "symbol", "'('", "'['", "'{'"});
        next();
        if (t.text == "i") return OperatorExpr::scalar(Complex::i());
        if (t.text == "hbar") return OperatorExpr::hbar(1);
        if (t.text == "m") return OperatorExpr::mass_factor(-1);
        if (t.text == "beta") return OperatorExpr::symbol(alg::sym::beta);
        if (t.text == "O") return OperatorExpr::symbol(alg::sym::O);
        if (t.text == "F") return OperatorExpr::symbol(alg::sym::F);
        if (t.text == "E") return OperatorExpr::symbol(alg::sym::E);
        if (auto it = scope_.find(t.text); it != scope_.end()) return OperatorExpr::symbol(it->second);
        throw UnknownSymbol(where(t) + "unknown symbol '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, alg::SymbolId, std::less<>> scope_;
};

}  // namespace

HamiltonianSpec parse_spec(std::string_view text)
{
    return Parser(text, {}).spec();
}

OperatorExpr parse_expression(std::string_view text, const std::vector<SymbolDecl>& declarations)
{
    return Parser(text, declarations).bare_expression();
}

}  // namespace fw::shell
