#include <gtest/gtest.h>

#include <stdexcept>

#include "fw/alg/print.hpp"
#include "fw/alg/series.hpp"
#include "gen.hpp"

using namespace fw::alg;
using namespace fw::alg::ops;

namespace {

OperatorExpr word(std::initializer_list<SymbolId> w, Complex c = 1)
{
    return OperatorExpr::monomial(c, Word(w));
}

const Complex I = Complex::i();

}  // namespace

TEST(Rational, Reduces)
{
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(3, 4) / Rational(-3, 2), Rational(-1, 2));
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, OverflowThrows)
{
    Rational big(INT64_MAX);
    EXPECT_THROW(big * Rational(2), std::overflow_error);
}

TEST(Complex, Arithmetic)
{
    EXPECT_EQ(I * I, Complex(-1));
    EXPECT_EQ(Complex(1) / I, -I);
    EXPECT_EQ(i_pow(3), -I);
    EXPECT_EQ(i_pow(-1), -I);
}

TEST(Normalize, BetaSquared)
{
    auto x = word({sym::beta, sym::beta});
    EXPECT_EQ(x, one());
}

TEST(Normalize, OddPastBeta)
{
    EXPECT_EQ(word({sym::O, sym::beta}), word({sym::beta, sym::O}, -1));
}

TEST(Normalize, MergesLikeTerms)
{
    auto x = word({sym::beta, sym::O}) + word({sym::O, sym::beta}) + word({sym::beta, sym::O});
    EXPECT_EQ(x, beta() * O());
    EXPECT_EQ(x.size(), 1u);
}

TEST(Normalize, MatchesOracle)
{
    fwtest::Gen g(11);
    for (int k = 0; k < 2000; ++k) {
        auto raw = g.raw(5, 6);
        auto x = normalize(raw);
        EXPECT_EQ(x, fwtest::oracle_normalize(raw));
        auto again = x.terms();
        EXPECT_EQ(normalize(again), x);
    }
}

TEST(Multiply, Examples)
{
    EXPECT_EQ(mul(beta() * O(), beta() * O()), -(O() * O()));
    fwtest::Gen g(3);
    auto X = g.expr();
    EXPECT_EQ(mul(X, one()), X);
    EXPECT_TRUE(add(X, scale(-1, X)).is_zero());
}

TEST(Multiply, Associative)
{
    fwtest::Gen g(5);
    for (int k = 0; k < 500; ++k) {
        auto a = g.expr(), b = g.expr(), c = g.expr();
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Multiply, TruncatedAgreesWithFull)
{
    fwtest::Gen g(6);
    for (int k = 0; k < 300; ++k) {
        auto a = g.expr(), b = g.expr();
        int n = g.uniform(0, 6);
        EXPECT_EQ(mul(a, b, WeightScheme::velocity, n), truncate(a * b, WeightScheme::velocity, n));
        EXPECT_EQ(mul(a, b, WeightScheme::mass, n), truncate(a * b, WeightScheme::mass, n));
    }
}

TEST(Commutator, Examples)
{
    EXPECT_EQ(comm(beta(), O()), c(2) * beta() * O());
    EXPECT_TRUE(comm(beta(), F()).is_zero());
    auto OF = comm(O(), F());
    EXPECT_EQ(OF, O() * F() - F() * O());
    auto lhs = comm(OF, comm(OF, F())) - comm(comm(O(), comm(OF, F())), F());
    EXPECT_EQ(lhs, -comm(O(), comm(comm(OF, F()), F())));
    EXPECT_EQ(anticommutator(beta(), O()), OperatorExpr());
}

TEST(Commutator, Jacobi)
{
    fwtest::Gen g(7);
    for (int k = 0; k < 500; ++k) {
        auto a = g.expr(), b = g.expr(), c = g.expr();
        auto j = comm(a, comm(b, c)) + comm(b, comm(c, a)) + comm(c, comm(a, b));
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(Adjoint, Examples)
{
    // (i beta O)^dagger = -i O beta = i beta O
    EXPECT_EQ(adjoint(I * beta() * O()), I * beta() * O());
    EXPECT_EQ(adjoint(F()), F());
    EXPECT_EQ(adjoint(I * comm(O(), F())), I * comm(O(), F()));
}

TEST(Adjoint, InvolutionAndAntihomomorphism)
{
    fwtest::Gen g(8);
    for (int k = 0; k < 500; ++k) {
        auto a = g.expr(), b = g.expr();
        EXPECT_EQ(adjoint(adjoint(a)), a);
        EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
    }
}

TEST(Parity, Examples)
{
    auto H = rest_energy() + E() + O();
    auto split = parity_split(H);
    EXPECT_EQ(split.even, rest_energy() + E());
    EXPECT_EQ(split.odd, O());

    auto OFO = O() * F() * O();
    EXPECT_EQ(parity_split(OFO).even, OFO);
    EXPECT_TRUE(parity_split(OFO).odd.is_zero());

    auto OF = comm(O(), F());
    EXPECT_TRUE(parity_split(OF).even.is_zero());
    EXPECT_EQ(parity_split(OF).odd, OF);
}

TEST(Parity, EvenCommutesWithBeta)
{
    fwtest::Gen g(9);
    for (int k = 0; k < 500; ++k) {
        auto x = g.expr();
        auto [even, odd] = parity_split(x);
        EXPECT_EQ(even + odd, x);
        EXPECT_TRUE(comm(beta(), even).is_zero());
        EXPECT_TRUE(anticommutator(beta(), odd).is_zero());
    }
}

TEST(Truncate, Orders)
{
    auto x = rest_energy() + O() + O() * O() * inv_mc2(1) + O() * F() * O() * inv_mc2(2);
    EXPECT_EQ(truncate(x, WeightScheme::velocity, 2), rest_energy() + O() + O() * O() * inv_mc2(1));
    EXPECT_EQ(truncate(x, WeightScheme::mass, 1), rest_energy() + O() + O() * O() * inv_mc2(1));
    EXPECT_EQ(truncate(x, WeightScheme::velocity, 10), x);
    EXPECT_EQ(order_slice(x, WeightScheme::velocity, 4), O() * F() * O() * inv_mc2(2));
    EXPECT_EQ(min_order(x, WeightScheme::mass), -1);
    EXPECT_EQ(max_order(x, WeightScheme::velocity), 4);
    EXPECT_FALSE(min_order(OperatorExpr(), WeightScheme::mass).has_value());
}

TEST(Substitute, FtoE)
{
    auto x = comm(O(), F()) + F();
    EXPECT_EQ(substitute(x, sym::F, sym::E), comm(O(), E()) + E());
    EXPECT_TRUE(contains_symbol(x, sym::F));
    EXPECT_FALSE(contains_symbol(substitute(x, sym::F, sym::E), sym::F));
}

TEST(Symbols, RegistryRejectsConflicts)
{
    auto& reg = SymbolRegistry::global();
    auto q = reg.declare("Qtest", Parity::even, 2);
    EXPECT_EQ(reg.declare("Qtest", Parity::even, 2), q);
    EXPECT_THROW(reg.declare("Qtest", Parity::odd, 1), std::invalid_argument);
    EXPECT_EQ(reg.find("O"), sym::O);
}

TEST(Series, AdExpConjugateFreeParticle)
{
    // K = beta m + O, S = -i beta O / 2m
    auto K = rest_energy() + O();
    auto S = Complex(Rational(0), Rational(-1, 2)) * beta() * O() * inv_mc2(1);
    auto out = ad_exp_conjugate(S, K, WeightScheme::velocity, 2);
    EXPECT_EQ(out, rest_energy() + c(1, 2) * beta() * O() * O() * inv_mc2(1));
    EXPECT_EQ(ad_exp_conjugate(OperatorExpr(), K, WeightScheme::velocity, 6), K);
}

TEST(Series, ExpMatchesOracle)
{
    fwtest::Gen g(12);
    for (int k = 0; k < 200; ++k) {
        auto A = g.positive_expr(2, 3);
        int n = g.uniform(1, 5);
        EXPECT_EQ(exp_series(A, WeightScheme::velocity, n), fwtest::oracle_exp(A, WeightScheme::velocity, n));
    }
}

TEST(Series, Binomial)
{
    EXPECT_EQ(binomial(Rational(-1, 2), 2), Rational(3, 8));
    EXPECT_EQ(binomial(Rational(1, 2), 3), Rational(1, 16));
    // (1 + X)^(1/2) squared is 1 + X
    auto X = O() * O() * inv_mc2(1);
    auto r = binomial_series(X, Rational(1, 2), WeightScheme::velocity, 8);
    EXPECT_EQ(mul(r, r, WeightScheme::velocity, 8), one() + X);
}

TEST(Print, DslText)
{
    EXPECT_EQ(to_string(c(1, 2) * beta() * O() * O() * inv_mc2(1)), "1/2*beta*O^2*m^-1");
    EXPECT_EQ(to_string(rest_energy() + E()), "beta*m + E");
    EXPECT_EQ(to_string(OperatorExpr()), "0");
}
