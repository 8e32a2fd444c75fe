#include "fw/shell/run.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fw/shell/record.hpp"
#include "fw/transform/eriksen.hpp"

namespace fw::shell {

using alg::OperatorExpr;

RunResult run(const HamiltonianSpec& spec)
{
    RunResult r;
    r.spec = spec;
    int steps = spec.steps.value_or(transform::default_steps(spec.scheme, spec.max_order));
    switch (spec.method) {
    case Method::fw:
        r.record = transform::fw_pipeline(spec.hamiltonian, spec.scheme, spec.max_order, steps);
        r.hamiltonian = r.record.H_orig;
        break;
    case Method::fw_corrected:
        r.record = transform::fw_corrected(spec.hamiltonian, spec.scheme, spec.max_order, steps);
        r.hamiltonian = r.record.H_corrected;
        break;
    case Method::eriksen:
        r.record.scheme = spec.scheme;
        r.record.max_order = spec.max_order;
        r.record.input = alg::truncate(spec.hamiltonian, spec.scheme, spec.max_order);
        r.hamiltonian = transform::eriksen_series(spec.hamiltonian, spec.scheme, spec.max_order);
        r.record.H_corrected = r.hamiltonian;
        break;
    }
    return r;
}

namespace {

std::string primes(std::size_t k)
{
    return std::string(k, '\'');
}

}  // namespace

std::string render_run(const RunResult& result, OutputFormat format)
{
    const auto& rec = result.record;
    const auto scheme = result.spec.scheme;
    const bool corrected = result.spec.method == Method::fw_corrected;
    const char* scheme_name = scheme == alg::WeightScheme::mass ? "mass" : "vc";

    if (format == OutputFormat::record) {
        nlohmann::json j{{"method", method_name(result.spec.method)},
                         {"scheme", scheme_name},
                         {"order", result.spec.max_order}};
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : rec.steps) steps.push_back(serialize_record(s));
        j["steps"] = std::move(steps);
        if (result.spec.method != Method::eriksen) j["H_orig"] = serialize_record(rec.H_orig);
        if (corrected) {
            j["combined_exponent"] = serialize_record(rec.combined_exponent);
            j["correction_exponent"] = serialize_record(rec.correction_exponent);
        }
        j["H"] = serialize_record(result.hamiltonian);
        return j.dump(2) + "\n";
    }

    std::string out;
    if (format == OutputFormat::text) {
        out += fmt::format("# method {}, scheme {}, order {}\n", method_name(result.spec.method), scheme_name,
                           result.spec.max_order);
        for (std::size_t k = 0; k < rec.steps.size(); ++k)
            out += fmt::format("S{} = {}\n", primes(k), render_text(rec.steps[k], scheme));
        if (result.spec.method != Method::eriksen) out += fmt::format("H_orig = {}\n", render_text(rec.H_orig, scheme));
        if (corrected) out += fmt::format("C = {}\n", render_text(rec.correction_exponent, scheme));
        out += fmt::format("H = {}\n", render_text(result.hamiltonian, scheme));
        return out;
    }
    for (std::size_t k = 0; k < rec.steps.size(); ++k)
        out += fmt::format("S{} = {}\n", primes(k), render_latex(rec.steps[k], scheme));
    if (result.spec.method != Method::eriksen)
        out += fmt::format("{{\\cal H}}_{{FW}}^{{(orig)}} = {}\n", render_latex(rec.H_orig, scheme));
    if (corrected) out += fmt::format("C = {}\n", render_latex(rec.correction_exponent, scheme));
    out += fmt::format("{{\\cal H}}_{{FW}} = {}\n", render_latex(result.hamiltonian, scheme));
    return out;
}

}  // namespace fw::shell
