#include <gtest/gtest.h>

#include "fw/errors.hpp"
#include "fw/reference/reference.hpp"
#include "fw/shell/dsl.hpp"
#include "fw/shell/record.hpp"
#include "fw/shell/render.hpp"
#include "fw/shell/run.hpp"
#include "fw/shell/verify.hpp"
#include "gen.hpp"

using namespace fw::shell;
using namespace fw::alg;
using namespace fw::alg::ops;

TEST(Dsl, FirstExampleSpec)
{
    auto s = parse_spec("H = beta*m + F + O; scheme vc; order 6; method fw-corrected");
    EXPECT_EQ(s.hamiltonian, rest_energy() + F() + O());
    EXPECT_EQ(s.scheme, WeightScheme::velocity);
    EXPECT_EQ(s.max_order, 6);
    EXPECT_EQ(s.method, Method::fw_corrected);
    EXPECT_FALSE(s.steps.has_value());
}

TEST(Dsl, Defaults)
{
    auto s = parse_spec("H = beta*m");
    EXPECT_EQ(s.hamiltonian, rest_energy());
    EXPECT_EQ(s.max_order, 6);
    EXPECT_EQ(s.method, Method::fw_corrected);
    EXPECT_EQ(parse_spec("H = beta*m; scheme mass").max_order, 4);
}

TEST(Dsl, DeclarationsAndComments)
{
    auto s = parse_spec("# even potential\nsymbol Qdsl even weight 2;\nH = beta*m + Qdsl + O;\nmethod eriksen; steps 2;");
    ASSERT_EQ(s.declarations.size(), 1u);
    EXPECT_EQ(s.declarations[0].name, "Qdsl");
    EXPECT_EQ(s.declarations[0].weight, 2);
    EXPECT_EQ(s.method, Method::eriksen);
    EXPECT_EQ(s.steps, 2);
    auto q = SymbolRegistry::global().find("Qdsl");
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(s.hamiltonian, rest_energy() + OperatorExpr::symbol(*q) + O());
}

TEST(Dsl, Expressions)
{
    EXPECT_EQ(parse_expression("1/2*beta*O^2*m^-1"), c(1, 2) * beta() * O() * O() * inv_mc2(1));
    EXPECT_EQ(parse_expression("beta*O^2/(2*m)"), c(1, 2) * beta() * O() * O() * inv_mc2(1));
    EXPECT_EQ(parse_expression("[O, F] - {O, F}"), c(-2) * F() * O());
    EXPECT_EQ(parse_expression("-i*hbar*O"), OperatorExpr::scalar(-Complex::i()) * OperatorExpr::hbar(1) * O());
    EXPECT_EQ(parse_expression("O*beta"), -(beta() * O()));
}

TEST(Dsl, UnknownSymbol)
{
    EXPECT_THROW(parse_spec("H = beta*m + Q"), fw::UnknownSymbol);
}

TEST(Dsl, Duplicates)
{
    EXPECT_THROW(parse_spec("H = beta*m; order 4; order 6"), fw::DuplicateDeclaration);
    EXPECT_THROW(parse_spec("H = beta*m; H = beta*m"), fw::DuplicateDeclaration);
    EXPECT_THROW(parse_spec("symbol O odd weight 1; H = beta*m"), fw::DuplicateDeclaration);
}

TEST(Dsl, SyntaxErrorPosition)
{
    try {
        parse_spec("H = beta*m +\n  * O");
        FAIL() << "no error";
    } catch (const fw::SyntaxError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
        EXPECT_FALSE(e.expected().empty());
    }
    try {
        parse_spec("H = beta*m; scheme fast");
        FAIL() << "no error";
    } catch (const fw::SyntaxError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 20);
    }
    EXPECT_THROW(parse_spec("scheme vc"), fw::SyntaxError);
    EXPECT_THROW(parse_expression("O / O"), fw::SyntaxError);
    EXPECT_THROW(parse_expression("[O, F"), fw::SyntaxError);
    EXPECT_THROW(parse_expression("O $ F"), fw::SyntaxError);
}

TEST(Render, Examples)
{
    EXPECT_EQ(render_latex(c(1, 2) * beta() * O() * O() * inv_mc2(1)), "\\beta\\frac{{\\cal O}^2}{2mc^2}");
    EXPECT_EQ(render_latex(OperatorExpr()), "0");
    EXPECT_EQ(render_text(OperatorExpr()), "0");
    EXPECT_EQ(render_text(rest_energy() + E()), "beta*m + E");
}

TEST(Render, TextRoundTrip)
{
    fwtest::Gen g(51);
    for (int k = 0; k < 1000; ++k) {
        auto x = g.expr(4, 4);
        EXPECT_EQ(parse_expression(render_text(x)), x) << render_text(x);
    }
    auto h = fw::reference::build(fw::reference::ReferenceId::H_corr_43);
    EXPECT_EQ(parse_expression(render_text(h)), h);
}

TEST(Record, RoundTrip)
{
    fwtest::Gen g(52);
    for (int k = 0; k < 1000; ++k) {
        auto x = g.expr(4, 4);
        auto j = serialize_record(x);
        EXPECT_EQ(parse_record(nlohmann::json::parse(j.dump())), x);
    }
}

TEST(Record, UserSymbolsAndErrors)
{
    auto q = SymbolRegistry::global().declare("Qrec", Parity::odd, 1);
    auto x = OperatorExpr::symbol(q) * F();
    auto j = serialize_record(x);
    EXPECT_EQ(j["schema"], std::string(record_schema));
    EXPECT_EQ(j["symbols"].size(), 1u);
    EXPECT_EQ(parse_record(j), x);
    j["schema"] = "other";
    EXPECT_THROW(parse_record(j), std::invalid_argument);
    EXPECT_THROW(parse_record(nlohmann::json::array()), std::invalid_argument);
}

TEST(Run, FirstExample)
{
    auto r = run(parse_spec("H = beta*m + F + O; scheme vc; order 6; method fw-corrected"));
    EXPECT_EQ(r.hamiltonian, fw::reference::build(fw::reference::ReferenceId::H_corr_38));
    EXPECT_EQ(r.record.H_orig, fw::reference::build(fw::reference::ReferenceId::H_orig_35));
    auto text = render_run(r, OutputFormat::text);
    EXPECT_NE(text.find("H_orig"), std::string::npos);
    auto rec = nlohmann::json::parse(render_run(r, OutputFormat::record));
    EXPECT_TRUE(rec.is_object());
}

TEST(Run, SecondExample)
{
    auto r = run(parse_spec("H = beta*m + F + O; scheme mass; order 4"));
    EXPECT_EQ(r.hamiltonian, fw::reference::build(fw::reference::ReferenceId::H_corr_43));
    r = run(parse_spec("H = beta*m + F + O; scheme mass; method fw"));
    EXPECT_EQ(r.hamiltonian, fw::reference::build(fw::reference::ReferenceId::H_orig_40));
}

TEST(Run, EriksenFreeParticle)
{
    auto r = run(parse_spec("H = beta*m + O; order 8; method eriksen"));
    EXPECT_EQ(r.hamiltonian, fw::reference::build(fw::reference::ReferenceId::FreeParticle_22));
    EXPECT_TRUE(r.record.steps.empty());
}

TEST(Verify, SymbolicSuites)
{
    for (auto s : {Suite::vc6, Suite::m4, Suite::eriksen8, Suite::dirac}) {
        auto rep = verify(s);
        EXPECT_TRUE(rep.passed()) << format_report(rep);
        EXPECT_EQ(report_json(rep)["passed"], true);
    }
    EXPECT_EQ(parse_suite("eriksen8"), Suite::eriksen8);
    EXPECT_FALSE(parse_suite("nope").has_value());
}
