#include "fw/num/probe.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fw/num/evaluate.hpp"
#include "fw/transform/eriksen.hpp"

namespace fw::num {

using namespace alg::ops;

SeriesBehaviour classify(const std::vector<std::pair<int, double>>& norms)
{
    if (norms.size() < 3) return SeriesBehaviour::converging;
    const auto n = norms.size();
    bool non_decreasing = norms[n - 3].second <= norms[n - 2].second && norms[n - 2].second <= norms[n - 1].second;
    return non_decreasing ? SeriesBehaviour::diverging : SeriesBehaviour::converging;
}

ProbeReport convergence_probe(const MatrixModel& model, const std::vector<int>& orders)
{
    ProbeReport r;
    r.regime = model.regime;
    r.boundary = model.kind == MatrixModel::Kind::free_momentum && std::abs(model.regime - 1.0) < 1e-9;
    if (orders.empty()) return r;
    std::vector<int> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const alg::OperatorExpr series =
        transform::eriksen_series(rest_energy() + E() + O(), alg::WeightScheme::velocity, sorted.back());
    for (int k : sorted) {
        alg::OperatorExpr slice = alg::order_slice(series, alg::WeightScheme::velocity, k);
        r.norms.emplace_back(k, spectral_norm(evaluate_symbolic(slice, model)));
    }
    r.classification = classify(r.norms);
    return r;
}

ProbeReport convergence_probe(double p_over_mc, const std::vector<int>& orders)
{
    return convergence_probe(free_particle({p_over_mc, 0.0, 0.0}), orders);
}

std::string to_string(SeriesBehaviour b) { return b == SeriesBehaviour::diverging ? "diverging" : "converging"; }

std::string format_report(const ProbeReport& r)
{
    std::string out = fmt::format("regime {}\n", r.regime);
    for (const auto& [k, v] : r.norms) out += fmt::format("order {} norm {:.12g}\n", k, v);
    out += fmt::format("classification {}{}\n", to_string(r.classification), r.boundary ? " (boundary)" : "");
    return out;
}

}  // namespace fw::num
