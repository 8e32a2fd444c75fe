#pragma once

#include <string>

#include "fw/shell/dsl.hpp"
#include "fw/shell/render.hpp"
#include "fw/transform/pipeline.hpp"

namespace fw::shell {

struct RunResult {
    HamiltonianSpec spec;
    transform::TransformRecord record;  // steps are empty for the eriksen method
    alg::OperatorExpr hamiltonian;      // final block-diagonal Hamiltonian
};

/// Dispatches to the pipeline selected by spec.method. Engine errors propagate.
RunResult run(const HamiltonianSpec& spec);

/// Steps, H_orig, C and the final Hamiltonian in the requested format.
std::string render_run(const RunResult& result, OutputFormat format);

}  // namespace fw::shell
