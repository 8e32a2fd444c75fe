#include "fw/dirac/dirac_expr.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace fw::dirac {

using alg::Complex;
using alg::Rational;

Field Field::derivative(int axis) const
{
    Field f = *this;
    ++f.d[static_cast<std::size_t>(axis)];
    return f;
}

Field Field::time_derivative() const
{
    Field f = *this;
    ++f.dt;
    return f;
}

std::string Field::name() const
{
    std::string out;
    for (int a = 0; a < 3; ++a) {
        int n = d[static_cast<std::size_t>(a)];
        if (n == 1) out += fmt::format("d{}", a + 1);
        if (n > 1) out += fmt::format("d{}^{}", a + 1, n);
    }
    if (dt == 1) out += "dt";
    if (dt > 1) out += fmt::format("dt^{}", dt);
    if (!out.empty()) out += " ";
    switch (kind) {
    case FieldKind::Phi: out += "Phi"; break;
    case FieldKind::E: out += fmt::format("E{}", component + 1); break;
    case FieldKind::B: out += fmt::format("B{}", component + 1); break;
    }
    return out;
}

namespace {

struct Piece {
    Complex coeff;
    Units units;
    LetterWord word;
};

using Memo = std::map<LetterWord, std::vector<Piece>>;

Letter field_letter(const Field& f) { return Letter{LetterKind::field, 0, f}; }

// Homogeneous Maxwell equations as rewrite rules; without them the
// commutation rules are not associative. Returns {} for a canonical field.
//   d_t B_k = -c eps_kab d_a E_b
//   d_3 B_3 = -d_1 B_1 - d_2 B_2
std::vector<Piece> reduce_field(const Field& f)
{
    if (f.kind != FieldKind::B) return {};
    std::vector<Piece> out;
    if (f.dt > 0) {
        const int k = f.component;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                int eps = levi_civita(k, a, b);
                if (eps == 0) continue;
                Field e = E_field(b);
                e.d = f.d;
                e.dt = static_cast<std::uint8_t>(f.dt - 1);
                out.push_back({Complex(-eps), Units{1, 0, 0, 0}, {field_letter(e.derivative(a))}});
            }
        }
        return out;
    }
    if (f.component == 2 && f.d[2] > 0) {
        for (int a = 0; a < 2; ++a) {
            Field g = B_field(a);
            g.d = f.d;
            --g.d[2];
            out.push_back({Complex(-1), {}, {field_letter(g.derivative(a))}});
        }
    }
    return out;
}

// Normal form of a word as a combination of normal-ordered words. Each swap
// of an out-of-order adjacent pair leaves a commutator term one letter shorter.
const std::vector<Piece>& normal_order(const LetterWord& w, Memo& memo)
{
    if (auto it = memo.find(w); it != memo.end()) return it->second;

    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
    if (i + 1 >= w.size()) {
        // Ordered; now rewrite fields that are not in canonical form.
        std::size_t j = 0;
        std::vector<Piece> replacement;
        for (; j < w.size(); ++j)
            if (w[j].kind == LetterKind::field && !(replacement = reduce_field(w[j].field)).empty()) break;
        if (j == w.size()) return memo.emplace(w, std::vector<Piece>{{Complex(1), {}, w}}).first->second;
        std::vector<Piece> out;
        for (const Piece& r : replacement) {
            LetterWord v = w;
            v[j] = r.word.front();
            for (const Piece& p : normal_order(v, memo)) out.push_back({p.coeff * r.coeff, p.units + r.units, p.word});
        }
        return memo.emplace(w, std::move(out)).first->second;
    }

    const Letter x = w[i];
    const Letter y = w[i + 1];
    LetterWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    std::vector<Piece> out = normal_order(swapped, memo);

    // x y = y x + [x, y]; [x, y] = coeff * units * letter.
    bool has_correction = true;
    Complex coeff;
    Units units;
    Letter letter;
    if (x.kind == LetterKind::field) {
        has_correction = false;
    } else if (x.kind == LetterKind::pi && y.kind == LetterKind::field) {
        coeff = Complex(0, -1);
        units.hbar = 1;
        letter = field_letter(y.field.derivative(x.axis));
    } else if (x.kind == LetterKind::pi) {
        int k = 3 - x.axis - y.axis;
        coeff = Complex(0, levi_civita(x.axis, y.axis, k));
        units = Units{-1, 0, 1, 1};
        letter = field_letter(B_field(k));
    } else if (y.kind == LetterKind::field) {
        coeff = Complex(0, -1);
        units.hbar = 1;
        letter = field_letter(y.field.time_derivative());
    } else {
        coeff = Complex(0, -1);
        units = Units{0, 0, 1, 1};
        letter = field_letter(E_field(y.axis));
    }

    if (has_correction) {
        LetterWord shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.push_back(letter);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        for (const Piece& p : normal_order(shorter, memo)) out.push_back({p.coeff * coeff, p.units + units, p.word});
    }
    return memo.emplace(w, std::move(out)).first->second;
}

Units negate(const Units& u) { return {-u.c, -u.m, -u.e, -u.hbar}; }

}  // namespace

DiracExpr DiracExpr::scalar(const Complex& c, Units u)
{
    DiracExpr x;
    x.accumulate(DiracKey{unit_gamma, u, {}}, c);
    return x;
}

DiracExpr DiracExpr::gamma(Gamma g)
{
    DiracExpr x;
    x.accumulate(DiracKey{g, {}, {}}, Complex(1));
    return x;
}

DiracExpr DiracExpr::pi(int axis)
{
    DiracExpr x;
    x.accumulate(DiracKey{unit_gamma, {}, {Letter{LetterKind::pi, static_cast<std::uint8_t>(axis), {}}}}, Complex(1));
    return x;
}

DiracExpr DiracExpr::field(const Field& f)
{
    DiracExpr x;
    x.accumulate(DiracKey{unit_gamma, {}, {field_letter(f)}}, Complex(1));
    return x * scalar(Complex(1));
}

DiracExpr DiracExpr::F()
{
    DiracExpr x;
    x.accumulate(DiracKey{unit_gamma, {}, {Letter{LetterKind::F, 0, {}}}}, Complex(1));
    return x;
}

Complex DiracExpr::coefficient(const DiracKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex() : it->second;
}

void DiracExpr::accumulate(const DiracKey& key, const Complex& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiracExpr& DiracExpr::operator+=(const DiracExpr& o)
{
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
}

DiracExpr& DiracExpr::operator-=(const DiracExpr& o)
{
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
}

DiracExpr& DiracExpr::operator*=(const Complex& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

DiracExpr operator*(const DiracExpr& a, const DiracExpr& b)
{
    DiracExpr out;
    Memo memo;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            GammaProduct g = multiply(ka.gamma, kb.gamma);
            Complex c = ca * cb * g.phase;
            Units u = ka.units + kb.units;
            LetterWord w = ka.word;
            w.insert(w.end(), kb.word.begin(), kb.word.end());
            for (const Piece& p : normal_order(w, memo)) out.accumulate(DiracKey{g.gamma, u + p.units, p.word}, c * p.coeff);
        }
    }
    return out;
}

DiracExpr commutator(const DiracExpr& a, const DiracExpr& b) { return a * b - b * a; }

DiracExpr adjoint(const DiracExpr& x)
{
    // Every basis element and letter is self-adjoint; reverse the word and
    // bring it back to normal order.
    DiracExpr out;
    for (const auto& [k, c] : x) {
        DiracExpr t = DiracExpr::scalar(c.conj(), k.units);
        for (auto it = k.word.rbegin(); it != k.word.rend(); ++it) {
            DiracExpr letter;
            letter.accumulate(DiracKey{unit_gamma, {}, {*it}}, Complex(1));
            t = t * letter;
        }
        out += DiracExpr::gamma(k.gamma) * t;
    }
    return out;
}

DiracExpr truncate_c(const DiracExpr& x, int min_c_power)
{
    DiracExpr out;
    for (const auto& [k, c] : x)
        if (k.units.c >= min_c_power) out.accumulate(k, c);
    return out;
}

bool has_letter(const DiracExpr& x, LetterKind kind)
{
    for (const auto& [k, c] : x)
        for (const Letter& l : k.word)
            if (l.kind == kind) return true;
    return false;
}

DiracExpr drop_fields(const DiracExpr& x)
{
    DiracExpr out;
    for (const auto& [k, c] : x)
        if (std::none_of(k.word.begin(), k.word.end(), [](const Letter& l) { return l.kind == LetterKind::field; }))
            out.accumulate(k, c);
    return out;
}

std::string units_name(const Units& u)
{
    std::vector<std::string> f;
    auto add = [&f](const char* name, int p) {
        if (p == 1) f.push_back(name);
        else if (p != 0) f.push_back(fmt::format("{}^{}", name, p));
    };
    add("e", u.e);
    add("hbar", u.hbar);
    add("m", u.m);
    add("c", u.c);
    return fmt::format("{}", fmt::join(f, "*"));
}

namespace {

std::string letter_name(const Letter& l)
{
    switch (l.kind) {
    case LetterKind::field: return l.field.name();
    case LetterKind::pi: return fmt::format("pi{}", l.axis + 1);
    case LetterKind::F: return "F";
    }
    return "?";
}

}  // namespace

std::string to_string(const DiracExpr& x)
{
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : x) {
        std::vector<std::string> f;
        if (c != Complex(1)) f.push_back(c.to_string());
        if (std::string u = units_name(k.units); !u.empty()) f.push_back(u);
        if (k.gamma != unit_gamma) f.push_back(gamma_name(k.gamma));
        for (const Letter& l : k.word) f.push_back(letter_name(l));
        if (!out.empty()) out += " + ";
        out += f.empty() ? "1" : fmt::format("{}", fmt::join(f, " "));
    }
    return out;
}

std::vector<NamedCombination> standard_combinations()
{
    DiracExpr pi2;
    for (int a = 0; a < 3; ++a) pi2 += DiracExpr::pi(a) * DiracExpr::pi(a);
    DiracExpr beta = DiracExpr::gamma(beta_gamma);

    DiracExpr pi_dot_b, sigma_dot_b, spin_orbit, div_e;
    for (int k = 0; k < 3; ++k) {
        pi_dot_b += DiracExpr::gamma(Pi(k)) * DiracExpr::field(B_field(k));
        sigma_dot_b += DiracExpr::gamma(Sigma(k)) * DiracExpr::field(B_field(k));
        div_e += DiracExpr::field(E_field(k).derivative(k));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                int eps = levi_civita(i, j, k);
                if (eps == 0) continue;
                DiracExpr s = DiracExpr::gamma(Sigma(k));
                DiracExpr pi_x_e = DiracExpr::pi(i) * DiracExpr::field(E_field(j));
                DiracExpr e_x_pi = DiracExpr::field(E_field(i)) * DiracExpr::pi(j);
                spin_orbit += Complex(eps) * (s * (pi_x_e - e_x_pi));
            }
        }
    }
    return {
        {"beta", beta},
        {"beta pi^4", beta * pi2 * pi2},
        {"beta pi^2", beta * pi2},
        {"Phi", DiracExpr::field(Phi())},
        {"Pi.B", pi_dot_b},
        {"Sigma.B", sigma_dot_b},
        {"Sigma.[pi x E] - Sigma.[E x pi]", spin_orbit},
        {"div E", div_e},
    };
}

Decomposition decompose(const DiracExpr& x, const std::vector<NamedCombination>& combos, std::optional<int> min_c_power)
{
    Decomposition out;
    DiracExpr rest = x;
    for (const auto& combo : combos) {
        if (combo.value.is_zero()) continue;
        // Lead with a term that carries no units where possible.
        auto lead_it = std::find_if(combo.value.begin(), combo.value.end(),
                                    [](const auto& kv) { return kv.first.units == Units{}; });
        if (lead_it == combo.value.end()) lead_it = combo.value.begin();
        const auto& [lead, lead_coeff] = *lead_it;
        DiracExpr coefficient;
        for (;;) {
            auto hit = std::find_if(rest.begin(), rest.end(), [&lead](const auto& kv) {
                return kv.first.gamma == lead.gamma && kv.first.word == lead.word;
            });
            if (hit == rest.end()) break;
            Units u = hit->first.units + negate(lead.units);
            DiracExpr factor = DiracExpr::scalar(hit->second / lead_coeff, u);
            rest -= factor * combo.value;
            coefficient += factor;
        }
        if (!coefficient.is_zero()) out.parts.emplace_back(combo.name, coefficient);
    }
    out.remainder = min_c_power ? truncate_c(rest, *min_c_power) : rest;
    return out;
}

}  // namespace fw::dirac
