#include "fw/alg/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace fw::alg {

namespace {

// Moves every beta of `word` to the front. Returns the sign picked up and
// whether a single beta survives; `out` receives the remaining letters.
int canonical_word(const Word& word, Word& out, bool& beta)
{
    int sign = 1;
    bool odd_prefix = false;
    beta = false;
    out.clear();
    out.reserve(word.size() + 1);
    out.push_back(sym::beta);  // placeholder, erased below if unused
    for (SymbolId s : word) {
        if (s == sym::beta) {
            if (odd_prefix) sign = -sign;
            beta = !beta;
        } else {
            out.push_back(s);
            if (is_odd(s)) odd_prefix = !odd_prefix;
        }
    }
    if (!beta) out.erase(out.begin());
    return sign;
}

inline bool starts_with_beta(const Word& w)
{
    return !w.empty() && w.front() == sym::beta;
}

bool span_is_odd(Word::const_iterator first, Word::const_iterator last)
{
    bool odd = false;
    for (; first != last; ++first)
        if (is_odd(*first)) odd = !odd;
    return odd;
}

// Product of two canonical keys; returns the sign and writes the key.
int multiply_keys(const TermKey& a, const TermKey& b, TermKey& out)
{
    bool ba = starts_with_beta(a.word);
    bool bb = starts_with_beta(b.word);
    auto ua = a.word.begin() + (ba ? 1 : 0);
    auto ub = b.word.begin() + (bb ? 1 : 0);
    int sign = (bb && span_is_odd(ua, a.word.end())) ? -1 : 1;
    out.word.clear();
    out.word.reserve(a.word.size() + b.word.size());
    if (ba != bb) out.word.push_back(sym::beta);
    out.word.insert(out.word.end(), ua, a.word.end());
    out.word.insert(out.word.end(), ub, b.word.end());
    out.mass_power = a.mass_power + b.mass_power;
    out.hbar_power = a.hbar_power + b.hbar_power;
    return sign;
}

}  // namespace

OperatorExpr OperatorExpr::scalar(const Complex& c)
{
    OperatorExpr x;
    x.accumulate(TermKey{}, c);
    return x;
}

OperatorExpr OperatorExpr::symbol(SymbolId id)
{
    (void)symbol_info(id);
    OperatorExpr x;
    x.accumulate(TermKey{{id}, 0, 0}, 1);
    return x;
}

OperatorExpr OperatorExpr::mass_factor(int p)
{
    OperatorExpr x;
    x.accumulate(TermKey{{}, p, 0}, 1);
    return x;
}

OperatorExpr OperatorExpr::hbar(int k)
{
    OperatorExpr x;
    x.accumulate(TermKey{{}, 0, k}, 1);
    return x;
}

OperatorExpr OperatorExpr::monomial(const Complex& c, const Word& word, int mass_power, int hbar_power)
{
    Term t{c, mass_power, hbar_power, word};
    return normalize(std::span<const Term>(&t, 1));
}

Complex OperatorExpr::coefficient(const TermKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex{} : it->second;
}

std::vector<Term> OperatorExpr::terms() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back(Term{c, k.mass_power, k.hbar_power, k.word});
    return out;
}

void OperatorExpr::accumulate(const TermKey& key, const Complex& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o)
{
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o)
{
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Complex& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

OperatorExpr OperatorExpr::operator-() const
{
    OperatorExpr r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b)
{
    return mul(a, b);
}

OperatorExpr normalize(std::span<const Term> raw)
{
    OperatorExpr out;
    Word scratch;
    for (const Term& t : raw) {
        if (t.coeff.is_zero()) continue;
        bool beta = false;
        int sign = canonical_word(t.word, scratch, beta);
        out.accumulate(TermKey{scratch, t.mass_power, t.hbar_power}, sign < 0 ? -t.coeff : t.coeff);
    }
    return out;
}

OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b)
{
    OperatorExpr out;
    TermKey key;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int sign = multiply_keys(ka, kb, key);
            Complex c = ca * cb;
            out.accumulate(key, sign < 0 ? -c : c);
        }
    return out;
}

OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b, WeightScheme scheme, int max_order)
{
    OperatorExpr out;
    TermKey key;
    std::vector<int> ob;
    ob.reserve(b.size());
    for (const auto& [kb, cb] : b) ob.push_back(order(kb, scheme));
    for (const auto& [ka, ca] : a) {
        int oa = order(ka, scheme);
        std::size_t j = 0;
        for (const auto& [kb, cb] : b) {
            if (oa + ob[j++] > max_order) continue;
            int sign = multiply_keys(ka, kb, key);
            Complex c = ca * cb;
            out.accumulate(key, sign < 0 ? -c : c);
        }
    }
    return out;
}

OperatorExpr add(const OperatorExpr& a, const OperatorExpr& b)
{
    return a + b;
}

OperatorExpr scale(const Complex& c, const OperatorExpr& x)
{
    return c * x;
}

OperatorExpr pow(const OperatorExpr& x, unsigned n)
{
    OperatorExpr r = OperatorExpr::scalar(1);
    for (unsigned k = 0; k < n; ++k) r = mul(r, x);
    return r;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b)
{
    return mul(a, b) - mul(b, a);
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, WeightScheme scheme, int max_order)
{
    return mul(a, b, scheme, max_order) - mul(b, a, scheme, max_order);
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b)
{
    return mul(a, b) + mul(b, a);
}

OperatorExpr adjoint(const OperatorExpr& x)
{
    std::vector<Term> raw;
    raw.reserve(x.size());
    for (const auto& [k, c] : x) {
        Word w(k.word.rbegin(), k.word.rend());
        raw.push_back(Term{c.conj(), k.mass_power, k.hbar_power, std::move(w)});
    }
    return normalize(raw);
}

bool word_is_odd(const Word& w)
{
    return span_is_odd(w.begin(), w.end());
}

ParitySplit parity_split(const OperatorExpr& x)
{
    ParitySplit s;
    for (const auto& [k, c] : x) (word_is_odd(k.word) ? s.odd : s.even).accumulate(k, c);
    return s;
}

int order(const TermKey& key, WeightScheme scheme)
{
    if (scheme == WeightScheme::mass) return key.mass_power;
    int w = 0;
    for (SymbolId s : key.word) w += symbol_info(s).weight_vc;
    return w;
}

std::optional<int> min_order(const OperatorExpr& x, WeightScheme scheme)
{
    std::optional<int> r;
    for (const auto& [k, c] : x) {
        int o = order(k, scheme);
        if (!r || o < *r) r = o;
    }
    return r;
}

std::optional<int> max_order(const OperatorExpr& x, WeightScheme scheme)
{
    std::optional<int> r;
    for (const auto& [k, c] : x) {
        int o = order(k, scheme);
        if (!r || o > *r) r = o;
    }
    return r;
}

OperatorExpr truncate(const OperatorExpr& x, WeightScheme scheme, int max_order)
{
    OperatorExpr r;
    for (const auto& [k, c] : x)
        if (order(k, scheme) <= max_order) r.accumulate(k, c);
    return r;
}

OperatorExpr order_slice(const OperatorExpr& x, WeightScheme scheme, int ord)
{
    OperatorExpr r;
    for (const auto& [k, c] : x)
        if (order(k, scheme) == ord) r.accumulate(k, c);
    return r;
}

bool contains_symbol(const OperatorExpr& x, SymbolId id)
{
    for (const auto& [k, c] : x)
        if (std::find(k.word.begin(), k.word.end(), id) != k.word.end()) return true;
    return false;
}

OperatorExpr substitute(const OperatorExpr& x, SymbolId from, SymbolId to)
{
    if (from == sym::beta || to == sym::beta) throw std::invalid_argument("beta cannot be substituted");
    if (symbol_info(from).parity != symbol_info(to).parity)
        throw std::invalid_argument(fmt::format("substitution {} -> {} changes parity", symbol_info(from).name,
                                                symbol_info(to).name));
    OperatorExpr r;
    for (const auto& [k, c] : x) {
        TermKey nk = k;
        std::replace(nk.word.begin(), nk.word.end(), from, to);
        r.accumulate(nk, c);
    }
    return r;
}

}  // namespace fw::alg
