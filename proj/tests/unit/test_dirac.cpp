#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "fw/errors.hpp"
#include "fw/dirac/clifford.hpp"
#include "fw/dirac/dirac_expr.hpp"
#include "fw/dirac/instantiate.hpp"
#include "fw/reference/reference.hpp"
#include "fw/transform/pipeline.hpp"
#include "gen.hpp"

using namespace fw::dirac;
using fw::alg::Complex;
using fw::alg::Rational;
namespace ops = fw::alg::ops;

namespace {

using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

M2 pauli(int k)
{
    const std::complex<double> i(0, 1);
    M2 m;
    switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
    }
    return m;
}

M4 matrix(Gamma g)
{
    M2 r = pauli(g.rho), s = pauli(g.sigma);
    M4 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out.block<2, 2>(2 * a, 2 * b) = r(a, b) * s;
    return out;
}

std::complex<double> to_std(const Complex& c) { return {c.re.to_double(), c.im.to_double()}; }

Gamma gamma_at(int k) { return {static_cast<std::uint8_t>(k / 4), static_cast<std::uint8_t>(k % 4)}; }

DiracExpr gam(Gamma g) { return DiracExpr::gamma(g); }
DiracExpr fld(const Field& f) { return DiracExpr::field(f); }
DiracExpr sc(Rational k, Units u) { return DiracExpr::scalar(Complex(k), u); }

const Complex I = Complex::i();

DiracExpr pi2()
{
    DiracExpr out;
    for (int a = 0; a < 3; ++a) out += DiracExpr::pi(a) * DiracExpr::pi(a);
    return out;
}

DiracExpr dot(Gamma (*g)(int), FieldKind kind)
{
    DiracExpr out;
    for (int a = 0; a < 3; ++a) out += gam(g(a)) * fld(Field{kind, static_cast<std::uint8_t>(a), {}, 0});
    return out;
}

// Random element built from basis matrices, momenta, F and fields with derivatives.
DiracExpr random_dirac(fwtest::Gen& g)
{
    DiracExpr out;
    int terms = g.uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
        DiracExpr x = DiracExpr::scalar(g.coeff()) * gam(gamma_at(g.uniform(0, 15)));
        int len = g.uniform(0, 3);
        for (int k = 0; k < len; ++k) {
            switch (g.uniform(0, 2)) {
            case 0: x = x * DiracExpr::pi(g.uniform(0, 2)); break;
            case 1: x = x * DiracExpr::F(); break;
            default: {
                Field f{static_cast<FieldKind>(g.uniform(0, 2)), 0, {}, 0};
                if (f.kind != FieldKind::Phi) f.component = static_cast<std::uint8_t>(g.uniform(0, 2));
                if (g.coin()) f = f.derivative(g.uniform(0, 2));
                x = x * fld(f);
            }
            }
        }
        out += x;
    }
    return out;
}

fw::transform::TransformRecord vc4() { return fw::transform::fw_corrected(ops::rest_energy() + ops::F() + ops::O(), fw::alg::WeightScheme::velocity, 4, 2); }

}  // namespace

TEST(Clifford, MatchesExplicitMatrices)
{
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            auto p = multiply(gamma_at(a), gamma_at(b));
            M4 want = matrix(gamma_at(a)) * matrix(gamma_at(b));
            M4 got = to_std(p.phase) * matrix(p.gamma);
            EXPECT_LT((want - got).norm(), 1e-14) << gamma_name(gamma_at(a)) << " " << gamma_name(gamma_at(b));
        }
}

TEST(Clifford, RandomWords)
{
    fwtest::Gen g(31);
    for (int k = 0; k < 500; ++k) {
        GammaProduct acc{Complex(1), unit_gamma};
        M4 m = M4::Identity();
        int len = g.uniform(1, 8);
        for (int j = 0; j < len; ++j) {
            Gamma x = gamma_at(g.uniform(0, 15));
            auto p = multiply(acc.gamma, x);
            acc = {acc.phase * p.phase, p.gamma};
            m = m * matrix(x);
        }
        EXPECT_LT((m - to_std(acc.phase) * matrix(acc.gamma)).norm(), 1e-12);
    }
}

TEST(Clifford, DiracRelations)
{
    auto anti = [](Gamma a, Gamma b) {
        auto ab = multiply(a, b), ba = multiply(b, a);
        return ab.gamma == ba.gamma && ab.phase == -ba.phase;
    };
    auto commute = [](Gamma a, Gamma b) { return multiply(a, b).phase == multiply(b, a).phase; };
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(anti(alpha(i), beta_gamma));
        EXPECT_TRUE(commute(Sigma(i), beta_gamma));
        EXPECT_EQ(multiply(alpha(i), alpha(i)).gamma, unit_gamma);
        EXPECT_EQ(multiply(beta_gamma, Sigma(i)).gamma, Pi(i));
        EXPECT_TRUE(commute(alpha(i), Sigma(i)));
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                EXPECT_TRUE(anti(alpha(i), alpha(j)));
                EXPECT_TRUE(anti(alpha(i), Sigma(j)));
            }
    }
    EXPECT_EQ(gamma_name(beta_gamma), "beta");
    EXPECT_EQ(gamma_name(alpha(1)), "alpha2");
    EXPECT_EQ(levi_civita(0, 1, 2), 1);
    EXPECT_EQ(levi_civita(1, 0, 2), -1);
    EXPECT_EQ(levi_civita(0, 0, 2), 0);
}

TEST(DiracExpr, CommutationRules)
{
    const Units hbar{0, 0, 0, 1};
    auto phi = fld(Phi());
    EXPECT_EQ(commutator(DiracExpr::pi(0), phi), DiracExpr::scalar(-I, hbar) * fld(Phi().derivative(0)));
    EXPECT_EQ(commutator(DiracExpr::pi(0), DiracExpr::pi(1)), DiracExpr::scalar(I, {-1, 0, 1, 1}) * fld(B_field(2)));
    EXPECT_EQ(commutator(DiracExpr::F(), phi), DiracExpr::scalar(-I, hbar) * fld(Phi().time_derivative()));
    EXPECT_EQ(commutator(DiracExpr::F(), DiracExpr::pi(2)), DiracExpr::scalar(-I, {0, 0, 1, 1}) * fld(E_field(2)));
    EXPECT_TRUE(commutator(phi, fld(E_field(1))).is_zero());
}

TEST(DiracExpr, MaxwellRewrites)
{
    DiracExpr divB;
    for (int a = 0; a < 3; ++a) divB += fld(B_field(a).derivative(a));
    EXPECT_TRUE(divB.is_zero());
    // d_t B_3 = -c (d_1 E_2 - d_2 E_1)
    auto dtB = fld(B_field(2).time_derivative());
    auto curl = fld(E_field(1).derivative(0)) - fld(E_field(0).derivative(1));
    EXPECT_EQ(dtB, DiracExpr::scalar(-1, {1, 0, 0, 0}) * curl);
}

TEST(DiracExpr, Associative)
{
    fwtest::Gen g(33);
    for (int k = 0; k < 300; ++k) {
        auto a = random_dirac(g), b = random_dirac(g), c = random_dirac(g);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(DiracExpr, AdjointInvolution)
{
    fwtest::Gen g(34);
    for (int k = 0; k < 300; ++k) {
        auto a = random_dirac(g), b = random_dirac(g);
        EXPECT_EQ(adjoint(adjoint(a)), a);
        EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
    }
}

TEST(DiracExpr, TruncateAndDrop)
{
    auto x = DiracExpr::scalar(1, {2, 0, 0, 0}) + DiracExpr::scalar(1, {-3, 0, 0, 0}) * fld(Phi());
    EXPECT_EQ(truncate_c(x, -2), DiracExpr::scalar(1, {2, 0, 0, 0}));
    EXPECT_EQ(drop_fields(x), DiracExpr::scalar(1, {2, 0, 0, 0}));
    EXPECT_FALSE(has_letter(x, LetterKind::pi));
    EXPECT_TRUE(has_letter(x, LetterKind::field));
}

TEST(Instantiate, PauliIdentity)
{
    auto o2 = instantiate(ops::O() * ops::O());
    auto expected = sc(1, {2, 0, 0, 0}) * pi2() - sc(1, {1, 0, 1, 1}) * dot(Sigma, FieldKind::B);
    EXPECT_EQ(o2, expected);
    EXPECT_EQ(instantiate(ops::O()), odd_dirac());
}

TEST(Instantiate, ReducedHamiltonian)
{
    auto h = truncate_c(instantiate(vc4().H_corrected), -2);
    // beta (m c^2 + pi^2/2m - pi^4/8m^3c^2) + e Phi - (e hbar/2mc) Pi.B
    //   + (e hbar/8m^2c^2)(Sigma.[pi x E] - Sigma.[E x pi] - hbar div E)
    DiracExpr so;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                int eps = levi_civita(i, j, k);
                if (eps == 0) continue;
                so += DiracExpr::scalar(eps) * gam(Sigma(i)) * (DiracExpr::pi(j) * fld(E_field(k)) - fld(E_field(j)) * DiracExpr::pi(k));
            }
    DiracExpr divE;
    for (int a = 0; a < 3; ++a) divE += fld(E_field(a).derivative(a));
    auto expected = gam(beta_gamma) * (sc(1, {2, 1, 0, 0}) + sc(Rational(1, 2), {0, -1, 0, 0}) * pi2() -
                                       sc(Rational(1, 8), {-2, -3, 0, 0}) * pi2() * pi2()) +
                    sc(1, {0, 0, 1, 0}) * fld(Phi()) - sc(Rational(1, 2), {-1, -1, 1, 1}) * dot(Pi, FieldKind::B) +
                    sc(Rational(1, 8), {-2, -2, 1, 1}) * so - sc(Rational(1, 8), {-2, -2, 1, 2}) * divE;
    expected = truncate_c(expected, -2);
    EXPECT_EQ(h, expected) << to_string(h - expected);
    EXPECT_EQ(h, fw::reference::build_dirac13());

    // with Sigma in place of Pi = beta Sigma the magnetic term no longer matches
    auto swapped = expected + sc(Rational(1, 2), {-1, -1, 1, 1}) * (dot(Pi, FieldKind::B) - dot(Sigma, FieldKind::B));
    EXPECT_NE(h, swapped);
}

TEST(Instantiate, Decomposition)
{
    auto h = truncate_c(instantiate(vc4().H_corrected), -2);
    auto dec = decompose(h, standard_combinations(), -2);
    EXPECT_TRUE(dec.remainder.is_zero()) << to_string(dec.remainder);
    auto find = [&](const std::string& n) {
        for (const auto& [name, c] : dec.parts)
            if (name == n) return c;
        return DiracExpr();
    };
    EXPECT_EQ(find("Pi.B"), sc(Rational(-1, 2), {-1, -1, 1, 1}));
    EXPECT_EQ(find("Sigma.[pi x E] - Sigma.[E x pi]"), sc(Rational(1, 8), {-2, -2, 1, 1}));
    EXPECT_EQ(find("div E"), sc(Rational(-1, 8), {-2, -2, 1, 2}));
    EXPECT_EQ(find("beta pi^4"), sc(Rational(-1, 8), {-2, -3, 0, 0}));
}

TEST(Instantiate, Hermitian)
{
    auto full = instantiate(vc4().H_corrected);
    EXPECT_EQ(adjoint(full), full);
}

TEST(Instantiate, FreeFields)
{
    auto h = instantiate(vc4().H_corrected, FieldContext{true});
    auto expected = gam(beta_gamma) * (sc(1, {2, 1, 0, 0}) + sc(Rational(1, 2), {0, -1, 0, 0}) * pi2() -
                                       sc(Rational(1, 8), {-2, -3, 0, 0}) * pi2() * pi2());
    EXPECT_EQ(h, drop_fields(expected));
    EXPECT_FALSE(has_letter(h, LetterKind::field));
}

TEST(Instantiate, UnknownSymbol)
{
    auto q = fw::alg::SymbolRegistry::global().declare("Qdirac", fw::alg::Parity::even, 2);
    EXPECT_THROW(instantiate(fw::alg::OperatorExpr::symbol(q)), fw::UnreducedWord);
}
