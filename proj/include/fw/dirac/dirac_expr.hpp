#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fw/alg/rational.hpp"
#include "fw/dirac/clifford.hpp"

namespace fw::dirac {

enum class FieldKind : std::uint8_t { Phi, E, B };

/// A field component with spatial and time derivatives applied. Distinct
/// derivative indices are distinct commuting symbols.
struct Field {
    FieldKind kind = FieldKind::Phi;
    std::uint8_t component = 0;  // axis for E and B, 0 for Phi
    std::array<std::uint8_t, 3> d{};
    std::uint8_t dt = 0;

    Field derivative(int axis) const;
    Field time_derivative() const;
    std::string name() const;

    friend auto operator<=>(const Field&, const Field&) = default;
    friend bool operator==(const Field&, const Field&) = default;
};

/// Letters of the operator part. Normal order is: fields (sorted), then
/// kinetic momenta pi_i (sorted by axis), then the atomic F = e Phi - i hbar d/dt.
enum class LetterKind : std::uint8_t { field, pi, F };

struct Letter {
    LetterKind kind = LetterKind::field;
    std::uint8_t axis = 0;
    Field field{};

    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using LetterWord = std::vector<Letter>;

/// Exponents of the physical constants carried by a term.
struct Units {
    int c = 0;
    int m = 0;
    int e = 0;
    int hbar = 0;

    Units& operator+=(const Units& o)
    {
        c += o.c;
        m += o.m;
        e += o.e;
        hbar += o.hbar;
        return *this;
    }
    friend Units operator+(Units a, const Units& b) { return a += b; }
    friend auto operator<=>(const Units&, const Units&) = default;
    friend bool operator==(const Units&, const Units&) = default;
};

struct DiracKey {
    Gamma gamma;
    Units units;
    LetterWord word;

    friend auto operator<=>(const DiracKey&, const DiracKey&) = default;
    friend bool operator==(const DiracKey&, const DiracKey&) = default;
};

/// Sum of Dirac-matrix basis elements times normal-ordered operator words,
/// with exact coefficients. Products apply the commutation rules
///   [pi_i, f] = -i hbar d_i f,  [pi_i, pi_j] = i hbar (e/c) eps_ijk B_k,
///   [F, f] = -i hbar d_t f,     [F, pi_i] = -i hbar e E_i,
/// and keeps fields canonical modulo div B = 0 and curl E = -(1/c) d_t B:
/// B never carries a time derivative and B3 never carries d3.
class DiracExpr {
public:
    using map_type = std::map<DiracKey, alg::Complex>;

    DiracExpr() = default;
    static DiracExpr scalar(const alg::Complex& c, Units u = {});
    static DiracExpr gamma(Gamma g);
    static DiracExpr pi(int axis);
    static DiracExpr field(const Field& f);
    static DiracExpr F();

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    map_type::const_iterator begin() const noexcept { return terms_.begin(); }
    map_type::const_iterator end() const noexcept { return terms_.end(); }
    alg::Complex coefficient(const DiracKey& key) const;
    void accumulate(const DiracKey& key, const alg::Complex& c);

    DiracExpr& operator+=(const DiracExpr& o);
    DiracExpr& operator-=(const DiracExpr& o);
    DiracExpr& operator*=(const alg::Complex& c);
    friend DiracExpr operator+(DiracExpr a, const DiracExpr& b) { return a += b; }
    friend DiracExpr operator-(DiracExpr a, const DiracExpr& b) { return a -= b; }
    friend DiracExpr operator*(const alg::Complex& c, DiracExpr a) { return a *= c; }
    friend DiracExpr operator*(const DiracExpr& a, const DiracExpr& b);
    friend bool operator==(const DiracExpr&, const DiracExpr&) = default;

private:
    map_type terms_;
};

// Field shorthands; axes are 0..2.
inline Field Phi() { return {FieldKind::Phi, 0, {}, 0}; }
inline Field E_field(int axis) { return {FieldKind::E, static_cast<std::uint8_t>(axis), {}, 0}; }
inline Field B_field(int axis) { return {FieldKind::B, static_cast<std::uint8_t>(axis), {}, 0}; }

DiracExpr commutator(const DiracExpr& a, const DiracExpr& b);
DiracExpr adjoint(const DiracExpr& x);
/// Keeps terms whose power of c is at least `min_c_power`.
DiracExpr truncate_c(const DiracExpr& x, int min_c_power);
/// Sets every field to zero.
DiracExpr drop_fields(const DiracExpr& x);
bool has_letter(const DiracExpr& x, LetterKind kind);

std::string units_name(const Units& u);
std::string to_string(const DiracExpr& x);

/// Named combination used when printing results, e.g. "Pi.B".
struct NamedCombination {
    std::string name;
    DiracExpr value;  // without units
};

/// The usual vector combinations: beta, beta pi^2, beta pi^4, Phi, Pi.B,
/// Sigma.B, the spin-orbit pair Sigma.[pi x E] - Sigma.[E x pi], div E.
std::vector<NamedCombination> standard_combinations();

struct Decomposition {
    std::vector<std::pair<std::string, DiracExpr>> parts;  // name -> scalar coefficient
    DiracExpr remainder;
};

/// Expresses x as a sum of scalar (units-carrying) multiples of the given
/// combinations plus a remainder. With `min_c_power` the remainder is
/// truncated like the input was.
Decomposition decompose(const DiracExpr& x, const std::vector<NamedCombination>& combos,
                        std::optional<int> min_c_power = std::nullopt);

}  // namespace fw::dirac
