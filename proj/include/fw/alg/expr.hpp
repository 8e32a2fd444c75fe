#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fw/alg/rational.hpp"
#include "fw/alg/symbol.hpp"

namespace fw::alg {

using Word = std::vector<SymbolId>;

/// Order functional used for truncation.
///
/// velocity: sum of the symbols' v/c weights (O ~ v/c, E,F ~ (v/c)^2).
/// mass:     the power of 1/(mc^2) carried by the term.
enum class WeightScheme { velocity, mass };

/// Identity of a term up to its coefficient.
///
/// `mass_power` is the exponent of 1/(mc^2) and may be negative: the rest
/// energy beta*mc^2 carries mass_power -1. In canonical form beta occurs at
/// most once and only as the first letter of `word`.
struct TermKey {
    Word word;
    int mass_power = 0;
    int hbar_power = 0;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

struct Term {
    Complex coeff;
    int mass_power = 0;
    int hbar_power = 0;
    Word word;
};

/// Normalized finite sum of terms.
///
/// Every instance is in canonical form: beta moved leftmost via beta^2 = 1
/// and the parity rules, like terms merged, zero coefficients dropped.
/// Equality is structural equality of these normal forms.
class OperatorExpr {
public:
    using map_type = std::map<TermKey, Complex>;
    using const_iterator = map_type::const_iterator;

    OperatorExpr() = default;

    static OperatorExpr scalar(const Complex& c);
    static OperatorExpr symbol(SymbolId id);
    /// (mc^2)^(-p); p = -1 gives the rest energy factor mc^2.
    static OperatorExpr mass_factor(int p);
    static OperatorExpr hbar(int k);
    /// Single term with an arbitrary (possibly non-canonical) word.
    static OperatorExpr monomial(const Complex& c, const Word& word, int mass_power = 0, int hbar_power = 0);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    Complex coefficient(const TermKey& key) const;
    std::vector<Term> terms() const;

    /// Adds c to the term with the given key. The key must already be canonical.
    void accumulate(const TermKey& key, const Complex& c);

    OperatorExpr& operator+=(const OperatorExpr& o);
    OperatorExpr& operator-=(const OperatorExpr& o);
    OperatorExpr& operator*=(const Complex& c);
    OperatorExpr operator-() const;

    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
    friend OperatorExpr operator*(const Complex& c, OperatorExpr a) { return a *= c; }
    friend OperatorExpr operator*(OperatorExpr a, const Complex& c) { return a *= c; }
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

    friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

private:
    map_type terms_;
};

/// Canonical form of an arbitrary finite sum of terms.
OperatorExpr normalize(std::span<const Term> raw);

OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b);
/// Product with every term of order > max_order skipped. Exact up to max_order
/// because the order functional is additive.
OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b, WeightScheme scheme, int max_order);
OperatorExpr add(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr scale(const Complex& c, const OperatorExpr& x);
OperatorExpr pow(const OperatorExpr& x, unsigned n);

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, WeightScheme scheme, int max_order);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);

/// Hermitian conjugate; every registered symbol is self-adjoint.
OperatorExpr adjoint(const OperatorExpr& x);

struct ParitySplit {
    OperatorExpr even;
    OperatorExpr odd;
};
ParitySplit parity_split(const OperatorExpr& x);

bool word_is_odd(const Word& w);
int order(const TermKey& key, WeightScheme scheme);
std::optional<int> min_order(const OperatorExpr& x, WeightScheme scheme);
std::optional<int> max_order(const OperatorExpr& x, WeightScheme scheme);
OperatorExpr truncate(const OperatorExpr& x, WeightScheme scheme, int max_order);
/// Terms of exactly the given order.
OperatorExpr order_slice(const OperatorExpr& x, WeightScheme scheme, int order);

bool contains_symbol(const OperatorExpr& x, SymbolId id);
/// Replaces every occurrence of `from` by `to`; both must share parity.
OperatorExpr substitute(const OperatorExpr& x, SymbolId from, SymbolId to);

namespace ops {
// Shorthands used when writing expressions out by hand.
inline OperatorExpr beta() { return OperatorExpr::symbol(sym::beta); }
inline OperatorExpr O() { return OperatorExpr::symbol(sym::O); }
inline OperatorExpr F() { return OperatorExpr::symbol(sym::F); }
inline OperatorExpr E() { return OperatorExpr::symbol(sym::E); }
inline OperatorExpr one() { return OperatorExpr::scalar(1); }
inline OperatorExpr c(std::int64_t n, std::int64_t d = 1) { return OperatorExpr::scalar(Rational(n, d)); }
/// 1/(m^p c^(2p))
inline OperatorExpr inv_mc2(int p) { return OperatorExpr::mass_factor(p); }
/// beta * m c^2
inline OperatorExpr rest_energy() { return OperatorExpr::symbol(sym::beta) * OperatorExpr::mass_factor(-1); }
inline OperatorExpr comm(const OperatorExpr& a, const OperatorExpr& b) { return commutator(a, b); }
inline OperatorExpr acomm(const OperatorExpr& a, const OperatorExpr& b) { return anticommutator(a, b); }
}  // namespace ops

}  // namespace fw::alg
