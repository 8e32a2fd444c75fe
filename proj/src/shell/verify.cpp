#include "fw/shell/verify.hpp"

#include <cmath>
#include <exception>

#include <fmt/format.h>

#include "fw/dirac/instantiate.hpp"
#include "fw/num/eriksen_unitary.hpp"
#include "fw/num/probe.hpp"
#include "fw/reference/diff.hpp"
#include "fw/reference/reference.hpp"
#include "fw/shell/render.hpp"
#include "fw/transform/eriksen.hpp"
#include "fw/transform/pipeline.hpp"

namespace fw::shell {

using alg::OperatorExpr;
using alg::WeightScheme;
using reference::ReferenceId;
using namespace alg::ops;

namespace {

Check equal(std::string name, const OperatorExpr& actual, const OperatorExpr& expected)
{
    auto d = reference::diff(actual, expected);
    return {std::move(name), d.empty(), d.empty() ? "" : reference::describe(d)};
}

// Passes when actual - expected is exactly `known`, a documented omission in
// the printed closed form.
Check equal_up_to(std::string name, const OperatorExpr& actual, const OperatorExpr& expected, const OperatorExpr& known)
{
    auto d = reference::diff(actual, expected);
    bool ok = -d.delta == known;
    std::string detail = fmt::format("printed form lacks {}", render_text(known));
    if (!ok) detail += "\n" + reference::describe(d);
    return {std::move(name), ok, detail};
}

Check flag(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

OperatorExpr H_nonstationary() { return rest_energy() + F() + O(); }
OperatorExpr H_stationary() { return rest_energy() + E() + O(); }

// Even correction term H_corrected - H_orig at the lowest correction order.
OperatorExpr first_correction()
{
    return comm(c(1, 16) * beta() * inv_mc2(3) * comm(O() * O(), F()), F() + c(1, 2) * beta() * O() * O() * inv_mc2(1));
}

void eriksen_condition_checks(VerifyReport& r, const transform::TransformRecord& rec)
{
    auto cond = transform::eriksen_condition_check(rec);
    r.checks.push_back(flag("combined exponent has an even part", !alg::parity_split(rec.combined_exponent).even.is_zero()));
    r.checks.push_back(flag("uncorrected transformation violates beta U = U^dagger beta",
                            !cond.uncorrected_residual.is_zero(), render_text(cond.uncorrected_residual)));
    r.checks.push_back(flag("corrected transformation satisfies beta U = U^dagger beta", cond.corrected_residual.is_zero(),
                            render_text(cond.corrected_residual)));
}

VerifyReport suite_vc6()
{
    VerifyReport r{"vc6", {}};
    auto rec = transform::fw_corrected(H_nonstationary(), WeightScheme::velocity, 6, 3);
    auto seq = reference::build_sequence(ReferenceId::S_prime_34);
    r.checks.push_back(flag("three steps", rec.steps.size() == 3, fmt::format("{} steps", rec.steps.size())));
    if (rec.steps.size() < 3) return r;
    r.checks.push_back(equal("first exponent S", rec.steps[0], seq[0]));
    r.checks.push_back(equal("first transformed Hamiltonian H'", transform::finalize(rec.intermediates[0]),
                             reference::build(ReferenceId::H_prime_34)));
    r.checks.push_back(equal("second exponent S'", rec.steps[1], seq[1]));
    r.checks.push_back(equal_up_to("second transformed Hamiltonian H''", transform::finalize(rec.intermediates[1]),
                                   reference::build(ReferenceId::H_dprime_34), c(1, 6) * alg::pow(O(), 5) * inv_mc2(4)));
    r.checks.push_back(equal_up_to("third exponent S''", rec.steps[2], seq[2],
                                   OperatorExpr::scalar(alg::Complex(0, -1)) * c(1, 12) * beta() * alg::pow(O(), 5) * inv_mc2(5)));
    r.checks.push_back(equal("original-method Hamiltonian", rec.H_orig, reference::build(ReferenceId::H_orig_35)));
    r.checks.push_back(equal("corrected Hamiltonian", rec.H_corrected, reference::build(ReferenceId::H_corr_38)));
    r.checks.push_back(equal("correction term", rec.H_corrected - rec.H_orig, first_correction()));
    eriksen_condition_checks(r, rec);
    return r;
}

VerifyReport suite_m4()
{
    VerifyReport r{"m4", {}};
    auto rec = transform::fw_corrected(H_nonstationary(), WeightScheme::mass, 4, 4);
    auto seq = reference::build_sequence(ReferenceId::Steps_39);
    r.checks.push_back(flag("four steps", rec.steps.size() == 4, fmt::format("{} steps", rec.steps.size())));
    for (std::size_t k = 0; k < std::min(rec.steps.size(), seq.size()); ++k)
        r.checks.push_back(equal(fmt::format("exponent S{}", std::string(k, '\'')), rec.steps[k], seq[k]));
    r.checks.push_back(equal("original-method Hamiltonian", rec.H_orig, reference::build(ReferenceId::H_orig_40)));
    r.checks.push_back(equal("corrected Hamiltonian", rec.H_corrected, reference::build(ReferenceId::H_corr_43)));
    OperatorExpr extra = c(-1, 32) * inv_mc2(4) * comm(comm(O(), comm(comm(O(), F()), F())), F());
    r.checks.push_back(equal("correction term", rec.H_corrected - rec.H_orig,
                             alg::truncate(first_correction() + extra, WeightScheme::mass, 4)));
    eriksen_condition_checks(r, rec);
    return r;
}

VerifyReport suite_eriksen8()
{
    VerifyReport r{"eriksen8", {}};
    auto stationary = [](ReferenceId id) { return alg::substitute(reference::build(id), alg::sym::F, alg::sym::E); };
    OperatorExpr he = transform::eriksen_series(H_stationary(), WeightScheme::velocity, 8);
    r.checks.push_back(equal("Eriksen series through (v/c)^8", he, stationary(ReferenceId::Eriksen_24)));
    r.checks.push_back(equal("truncated to (v/c)^6", alg::truncate(he, WeightScheme::velocity, 6), stationary(ReferenceId::H_corr_38)));
    r.checks.push_back(equal("truncated to m^-4", alg::truncate(he, WeightScheme::mass, 4), stationary(ReferenceId::H_corr_43)));
    r.checks.push_back(equal("mass-scheme Eriksen series through m^-4",
                             transform::eriksen_series(H_stationary(), WeightScheme::mass, 4), stationary(ReferenceId::H_corr_43)));
    r.checks.push_back(equal("free particle through (v/c)^8",
                             transform::eriksen_series(rest_energy() + O(), WeightScheme::velocity, 8),
                             reference::build(ReferenceId::FreeParticle_22)));
    return r;
}

VerifyReport suite_dirac()
{
    using namespace fw::dirac;
    VerifyReport r{"dirac", {}};
    auto rec = transform::fw_corrected(H_nonstationary(), WeightScheme::velocity, 4, 2);
    DiracExpr full = instantiate(rec.H_corrected);
    DiracExpr h = truncate_c(full, -2);
    DiracExpr expected = reference::build_dirac13();
    bool same = h == expected;
    r.checks.push_back(flag("field form through 1/c^2", same, same ? "" : to_string(h - expected)));

    auto dec = decompose(h, standard_combinations(), -2);
    auto coefficient = [&dec](const std::string& name) {
        for (const auto& [n, c] : dec.parts)
            if (n == name) return c;
        return DiracExpr();
    };
    auto expect_coeff = [&](const std::string& name, alg::Rational k, Units u) {
        DiracExpr want = DiracExpr::scalar(alg::Complex(k), u);
        DiracExpr got = coefficient(name);
        r.checks.push_back(flag("coefficient of " + name, got == want, to_string(got)));
    };
    expect_coeff("Pi.B", alg::Rational(-1, 2), Units{-1, -1, 1, 1});
    expect_coeff("Sigma.[pi x E] - Sigma.[E x pi]", alg::Rational(1, 8), Units{-2, -2, 1, 1});
    expect_coeff("div E", alg::Rational(-1, 8), Units{-2, -2, 1, 2});
    r.checks.push_back(flag("nothing left after collecting field combinations", dec.remainder.is_zero(), to_string(dec.remainder)));

    DiracExpr pi2;
    DiracExpr sigma_b;
    for (int a = 0; a < 3; ++a) {
        pi2 += DiracExpr::pi(a) * DiracExpr::pi(a);
        sigma_b += DiracExpr::gamma(Sigma(a)) * DiracExpr::field(B_field(a));
    }
    DiracExpr pauli = DiracExpr::scalar(1, {2, 0, 0, 0}) * pi2 - DiracExpr::scalar(1, {1, 0, 1, 1}) * sigma_b;
    r.checks.push_back(flag("(c alpha.pi)^2 = c^2 pi^2 - c e hbar Sigma.B", instantiate(O() * O()) == pauli));

    DiracExpr free_expected = drop_fields(
        DiracExpr::gamma(beta_gamma) *
        (DiracExpr::scalar(1, {2, 1, 0, 0}) + DiracExpr::scalar(alg::Rational(1, 2), {0, -1, 0, 0}) * pi2 -
         DiracExpr::scalar(alg::Rational(1, 8), {-2, -3, 0, 0}) * pi2 * pi2));
    r.checks.push_back(flag("free fields", instantiate(rec.H_corrected, FieldContext{true}) == free_expected));
    r.checks.push_back(flag("Hermitian", adjoint(full) == full));
    return r;
}

VerifyReport suite_numeric()
{
    VerifyReport r{"numeric", {}};
    for (double p : {0.0, 0.5, 2.0}) {
        auto model = num::free_particle({p, 0.0, 0.0});
        auto U = num::eriksen_unitary(model);
        double off = num::block_diag_residual(model, U);
        double cond = num::eriksen_condition_residual(model, U);
        auto spec = num::positive_block_spectrum(model, U);
        double energy = std::sqrt(1.0 + p * p);
        double spec_err = (spec.array() - energy).abs().maxCoeff();
        r.checks.push_back(flag(fmt::format("free p/mc={} off-block residual <= 1e-10", p), off <= 1e-10, fmt::format("{:.3e}", off)));
        r.checks.push_back(flag(fmt::format("free p/mc={} positive block = sqrt(m^2c^4+c^2p^2) within 1e-12", p),
                                spec_err <= 1e-12, fmt::format("{:.3e}", spec_err)));
        r.checks.push_back(flag(fmt::format("free p/mc={} Eriksen condition <= 1e-10", p), cond <= 1e-10, fmt::format("{:.3e}", cond)));
    }
    auto lattice = num::lattice1d(256, 0.1, num::gaussian_well(0.5, 0.8));
    auto U = num::eriksen_unitary(lattice);
    double off = num::block_diag_residual(lattice, U);
    double cond = num::eriksen_condition_residual(lattice, U);
    r.checks.push_back(flag("lattice 4N=1024 off-block residual <= 1e-10", off <= 1e-10, fmt::format("{:.3e}", off)));
    r.checks.push_back(flag("lattice 4N=1024 Eriksen condition <= 1e-10", cond <= 1e-10, fmt::format("{:.3e}", cond)));

    const std::vector<int> orders{2, 4, 6, 8};
    auto slow = num::convergence_probe(0.5, orders);
    bool decreasing = true;
    for (std::size_t k = 1; k < slow.norms.size(); ++k) decreasing = decreasing && slow.norms[k].second < slow.norms[k - 1].second;
    r.checks.push_back(flag("p/mc=0.5 contributions decrease", decreasing && slow.classification == num::SeriesBehaviour::converging,
                            num::format_report(slow)));
    auto fast = num::convergence_probe(1.5, orders);
    r.checks.push_back(flag("p/mc=1.5 contributions grow", fast.classification == num::SeriesBehaviour::diverging,
                            num::format_report(fast)));
    return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::vc6, Suite::m4, Suite::eriksen8, Suite::dirac, Suite::numeric})
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::vc6: return "vc6";
    case Suite::m4: return "m4";
    case Suite::eriksen8: return "eriksen8";
    case Suite::dirac: return "dirac";
    case Suite::numeric: return "numeric";
    }
    return "?";
}

bool VerifyReport::passed() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport verify(Suite suite)
{
    try {
        switch (suite) {
        case Suite::vc6: return suite_vc6();
        case Suite::m4: return suite_m4();
        case Suite::eriksen8: return suite_eriksen8();
        case Suite::dirac: return suite_dirac();
        case Suite::numeric: return suite_numeric();
        }
    } catch (const std::exception& e) {
        return VerifyReport{std::string(suite_name(suite)), {Check{"suite raised an error", false, e.what()}}};
    }
    return {};
}

std::string format_report(const VerifyReport& r)
{
    std::string out;
    std::size_t ok = 0;
    for (const auto& c : r.checks) {
        ok += c.passed ? 1 : 0;
        out += fmt::format("{} {}\n", c.passed ? "PASS" : "FAIL", c.name);
        if (!c.detail.empty() && (!c.passed || c.detail.find('\n') == std::string::npos)) {
            std::string d = c.detail;
            if (!d.empty() && d.back() == '\n') d.pop_back();
            std::string indented = "    ";
            for (char ch : d) {
                indented += ch;
                if (ch == '\n') indented += "    ";
            }
            out += indented + "\n";
        }
    }
    out += fmt::format("suite {}: {}/{} checks passed\n", r.suite, ok, r.checks.size());
    return out;
}

nlohmann::json report_json(const VerifyReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace fw::shell
