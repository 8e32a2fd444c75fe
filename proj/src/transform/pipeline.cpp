#include "fw/transform/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "fw/alg/series.hpp"
#include "fw/errors.hpp"
#include "fw/transform/bch.hpp"

namespace fw::transform {

using alg::Complex;
using alg::Rational;
using alg::TermKey;
namespace sym = alg::sym;

namespace {

const TermKey& rest_energy_key()
{
    static const TermKey key{{sym::beta}, -1, 0};
    return key;
}

// -(i / 2mc^2) beta X
OperatorExpr step_generator(const OperatorExpr& odd)
{
    OperatorExpr factor = OperatorExpr::symbol(sym::beta) * OperatorExpr::mass_factor(1);
    factor *= Complex(0, Rational(-1, 2));
    return factor * odd;
}

}  // namespace

HamiltonianSplit split_hamiltonian(const OperatorExpr& H)
{
    if (H.coefficient(rest_energy_key()) != Complex(1))
        throw MissingMassTerm("Hamiltonian lacks the rest-energy term beta*mc^2 with unit coefficient");
    HamiltonianSplit out;
    out.mass_term.accumulate(rest_energy_key(), 1);
    auto parts = alg::parity_split(H - out.mass_term);
    out.even = std::move(parts.even);
    out.odd = std::move(parts.odd);
    return out;
}

StepResult fw_step(const OperatorExpr& K, WeightScheme scheme, int max_order)
{
    HamiltonianSplit parts = split_hamiltonian(K);
    StepResult r;
    r.exponent = alg::truncate(step_generator(parts.odd), scheme, max_order);
    r.transformed = alg::ad_exp_conjugate(r.exponent, K, scheme, max_order);
    return r;
}

OperatorExpr finalize(const OperatorExpr& K)
{
    const TermKey bare_f{{sym::F}, 0, 0};
    Complex c = K.coefficient(bare_f);
    if (c != Complex(1))
        throw BareFAnomaly(fmt::format("bare F term has coefficient {} instead of 1", c.to_string()));
    OperatorExpr out = K;
    out.accumulate(bare_f, -1);
    out.accumulate(TermKey{{sym::E}, 0, 0}, 1);
    return out;
}

int default_steps(WeightScheme scheme, int max_order)
{
    if (scheme == WeightScheme::mass) return std::max(1, max_order);
    return std::max(1, max_order / 2);
}

TransformRecord fw_pipeline(const OperatorExpr& H, WeightScheme scheme, int max_order, int max_steps)
{
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    TransformRecord rec;
    rec.scheme = scheme;
    rec.max_order = max_order;
    rec.nonstationary = alg::contains_symbol(H, sym::F);
    rec.input = alg::truncate(H, scheme, max_order);
    split_hamiltonian(rec.input);

    OperatorExpr K = rec.input;
    for (int step = 0; step < max_steps; ++step) {
        StepResult r = fw_step(K, scheme, max_order);
        if (r.exponent.is_zero()) break;
        rec.steps.push_back(std::move(r.exponent));
        rec.intermediates.push_back(r.transformed);
        K = std::move(r.transformed);
    }

    // Odd terms whose generator lies beyond max_order only feed orders above
    // max_order once removed, so a final step drops them exactly.
    OperatorExpr odd = alg::parity_split(K).odd;
    if (!alg::truncate(step_generator(odd), scheme, max_order).is_zero())
        throw NoConvergence(fmt::format("odd terms of order {} remain after {} steps",
                                        alg::min_order(odd, scheme).value_or(0), max_steps));
    rec.final_operator = K - odd;
    rec.H_orig = rec.nonstationary ? finalize(rec.final_operator) : rec.final_operator;
    return rec;
}

OperatorExpr combine_steps(const TransformRecord& record)
{
    if (record.steps.empty()) return {};
    const Complex i(0, 1);
    OperatorExpr z = i * record.steps.front();
    for (std::size_t k = 1; k < record.steps.size(); ++k)
        z = bch_combine(i * record.steps[k], z, record.scheme, record.max_order);
    return Complex(0, -1) * z;
}

OperatorExpr correction_exponent(const OperatorExpr& R, WeightScheme scheme, int max_order)
{
    const OperatorExpr z0 = alg::truncate(Complex(0, 1) * R, scheme, max_order);
    OperatorExpr c;
    std::optional<int> last;
    for (;;) {
        OperatorExpr z = c.is_zero() ? z0 : bch_combine(c, z0, scheme, max_order);
        OperatorExpr even = alg::parity_split(z).even;
        if (even.is_zero()) return c;
        int lo = *alg::min_order(even, scheme);
        if (lo < 1 || (last && lo <= *last))
            throw EliminationFailure(fmt::format("even residual at order {} could not be eliminated", lo));
        last = lo;
        c -= alg::order_slice(even, scheme, lo);
    }
}

OperatorExpr apply_correction(const TransformRecord& record)
{
    const OperatorExpr& c = record.correction_exponent;
    OperatorExpr h = alg::ad_exp_conjugate(Complex(0, -1) * c, record.final_operator, record.scheme, record.max_order);
    OperatorExpr odd = alg::parity_split(h).odd;
    if (!odd.is_zero())
        throw OddResidual(fmt::format("{} odd terms survive the correction", odd.size()));
    return record.nonstationary ? finalize(h) : h;
}

TransformRecord fw_corrected(const OperatorExpr& H, WeightScheme scheme, int max_order, int max_steps)
{
    TransformRecord rec = fw_pipeline(H, scheme, max_order, max_steps);
    rec.combined_exponent = combine_steps(rec);
    rec.correction_exponent = correction_exponent(rec.combined_exponent, scheme, max_order);
    rec.H_corrected = apply_correction(rec);
    return rec;
}

EriksenConditionReport eriksen_condition_check(const TransformRecord& record)
{
    const auto scheme = record.scheme;
    const int n = record.max_order;
    const OperatorExpr beta = OperatorExpr::symbol(sym::beta);
    auto residual = [&](const OperatorExpr& u) {
        return alg::truncate(beta * u - alg::adjoint(u) * beta, scheme, n);
    };
    OperatorExpr u = alg::exp_series(Complex(0, 1) * record.combined_exponent, scheme, n);
    OperatorExpr uc = alg::mul(alg::exp_series(record.correction_exponent, scheme, n), u, scheme, n);
    return {residual(u), residual(uc)};
}

}  // namespace fw::transform
