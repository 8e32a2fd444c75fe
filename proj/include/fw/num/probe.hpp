#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fw/num/model.hpp"

namespace fw::num {

enum class SeriesBehaviour { converging, diverging };

struct ProbeReport {
    std::vector<std::pair<int, double>> norms;  // (v/c order, spectral norm of that order's contribution)
    SeriesBehaviour classification = SeriesBehaviour::converging;
    double regime = 0.0;    // p/(mc) or well depth
    bool boundary = false;  // p/(mc) = 1
};

/// Contribution norms of the series Hamiltonian beta m c^2 + E + O expanded
/// to each requested velocity order, evaluated on the model. Diverging iff
/// the norms are non-decreasing over the last three recorded orders.
ProbeReport convergence_probe(const MatrixModel& model, const std::vector<int>& orders);

/// Free particle with momentum along x.
ProbeReport convergence_probe(double p_over_mc, const std::vector<int>& orders);

SeriesBehaviour classify(const std::vector<std::pair<int, double>>& norms);

std::string to_string(SeriesBehaviour b);

/// Line-oriented report: "order <k> norm <x>" lines, then the classification.
std::string format_report(const ProbeReport& r);

}  // namespace fw::num
