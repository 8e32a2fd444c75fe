#pragma once

#include <vector>

#include "fw/alg/expr.hpp"

namespace fw::transform {

using alg::OperatorExpr;
using alg::WeightScheme;

/// H = beta mc^2 + even + odd.
struct HamiltonianSplit {
    OperatorExpr mass_term;
    OperatorExpr even;
    OperatorExpr odd;
};

/// Throws MissingMassTerm unless H holds the bare rest-energy term beta*mc^2
/// with unit coefficient.
HamiltonianSplit split_hamiltonian(const OperatorExpr& H);

struct StepResult {
    OperatorExpr exponent;     // S of exp(iS)
    OperatorExpr transformed;  // exp(iS) K exp(-iS), truncated
};

/// One Foldy-Wouthuysen iteration with S = -(i/2mc^2) beta odd(K).
///
/// K is the full operator H - i hbar d/dt written with the atomic even symbol
/// F, so the time-derivative terms of the transformation come out as ordinary
/// commutators with F. S is truncated at max_order.
StepResult fw_step(const OperatorExpr& K, WeightScheme scheme, int max_order);

struct TransformRecord {
    WeightScheme scheme = WeightScheme::velocity;
    int max_order = 0;
    bool nonstationary = false;        // the input carried F
    OperatorExpr input;                // truncated input K
    std::vector<OperatorExpr> steps;   // S, S', S'', ...
    std::vector<OperatorExpr> intermediates;  // K', K'', ... (un-finalized)
    OperatorExpr final_operator;       // last K with sub-threshold odd terms removed
    OperatorExpr H_orig;               // finalize(final_operator)
    OperatorExpr combined_exponent;    // R with exp(iR) = ... exp(iS') exp(iS)
    OperatorExpr correction_exponent;  // even, anti-self-adjoint C
    OperatorExpr H_corrected;
};

/// Rewrites the bare linear F term (coefficient exactly 1) to E.
/// Throws BareFAnomaly if that coefficient is anything else.
OperatorExpr finalize(const OperatorExpr& K);

/// Original iterative method. Fills input, steps, intermediates,
/// final_operator and H_orig. Throws NoConvergence if transformable odd
/// terms remain after max_steps.
TransformRecord fw_pipeline(const OperatorExpr& H, WeightScheme scheme, int max_order, int max_steps);

/// R with exp(iR) = exp(iS^(n)) ... exp(iS') exp(iS), folded right to left.
OperatorExpr combine_steps(const TransformRecord& record);

/// Even anti-self-adjoint C such that the even part of bch(C, iR) vanishes
/// through max_order. Built order by order.
OperatorExpr correction_exponent(const OperatorExpr& R, WeightScheme scheme, int max_order);

/// exp(C) K_final exp(-C), truncated and finalized. Throws OddResidual if any
/// odd term survives.
OperatorExpr apply_correction(const TransformRecord& record);

/// fw_pipeline followed by combine_steps, correction_exponent and apply_correction.
TransformRecord fw_corrected(const OperatorExpr& H, WeightScheme scheme, int max_order, int max_steps);

struct EriksenConditionReport {
    OperatorExpr uncorrected_residual;  // beta U - U^dagger beta, U = exp(iR)
    OperatorExpr corrected_residual;    // same for exp(C) exp(iR)
};

EriksenConditionReport eriksen_condition_check(const TransformRecord& record);

/// Default step limit: 3 for velocity order 6, 4 for mass order 4, else
/// enough for the odd part to clear max_order.
int default_steps(WeightScheme scheme, int max_order);

}  // namespace fw::transform
