#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fw/errors.hpp"
#include "fw/num/probe.hpp"
#include "fw/shell/dsl.hpp"
#include "fw/shell/run.hpp"
#include "fw/shell/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Copies output into $FW_OUT_DIR/<name> when the variable is set.
void save_output(const std::string& name, const std::string& content)
{
    const char* dir = std::getenv("FW_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return;
    std::filesystem::path p(dir);
    std::filesystem::create_directories(p);
    std::ofstream(p / name) << content;
}

int cmd_transform(const std::string& path, const std::string& out)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "fw: cannot read " << path << "\n";
        return exit_usage;
    }
    std::stringstream ss;
    ss << in.rdbuf();

    fw::shell::HamiltonianSpec spec;
    try {
        spec = fw::shell::parse_spec(ss.str());
    } catch (const fw::Error& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return exit_usage;
    }

    fw::shell::OutputFormat format = out == "latex"    ? fw::shell::OutputFormat::latex
                                     : out == "record" ? fw::shell::OutputFormat::record
                                                       : fw::shell::OutputFormat::text;
    try {
        auto result = fw::shell::run(spec);
        std::string rendered = fw::shell::render_run(result, format);
        std::cout << rendered;
        const char* ext = out == "latex" ? ".tex" : out == "record" ? ".json" : ".txt";
        save_output(std::filesystem::path(path).stem().string() + ext, rendered);
    } catch (const fw::Error& e) {
        std::cerr << "fw: " << path << " (method " << fw::shell::method_name(spec.method) << "): " << e.what() << "\n";
        return exit_failed;
    }
    return exit_ok;
}

int cmd_verify(const std::string& name, bool json)
{
    auto suite = fw::shell::parse_suite(name);
    if (!suite) {
        std::cerr << "fw: unknown suite '" << name << "' (vc6, m4, eriksen8, dirac, numeric)\n";
        return exit_usage;
    }
    auto report = fw::shell::verify(*suite);
    std::string text = json ? fw::shell::report_json(report).dump(2) + "\n" : fw::shell::format_report(report);
    std::cout << text;
    save_output("verify-" + name + (json ? ".json" : ".txt"), text);
    return report.passed() ? exit_ok : exit_failed;
}

int cmd_probe(double p, const std::vector<int>& orders)
{
    auto report = fw::num::convergence_probe(p, orders);
    std::string text = fw::num::format_report(report);
    std::cout << text;
    save_output(fmt::format("probe-{}.txt", p), text);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Foldy-Wouthuysen transformation engine"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out = "text";
    auto* transform = app.add_subcommand("transform", "Run the derivation described by a spec file");
    transform->add_option("spec-file", spec_path, "Hamiltonian specification")->required();
    transform->add_option("--out", out, "Output format")->check(CLI::IsMember({"text", "latex", "record"}));

    std::string suite;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "Check results against closed forms and tolerances");
    verify->add_option("suite", suite, "vc6, m4, eriksen8, dirac or numeric")->required();
    verify->add_flag("--json", json, "Machine-readable report");

    double p = 0.0;
    std::vector<int> orders{2, 4, 6, 8};
    auto* probe = app.add_subcommand("probe", "Order-wise norms of the free-particle series");
    probe->add_option("--p-over-mc", p, "Momentum in units of mc")->required();
    probe->add_option("--orders", orders, "Comma-separated v/c orders")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (*transform) return cmd_transform(spec_path, out);
    if (*verify) return cmd_verify(suite, json);
    if (*probe) return cmd_probe(p, orders);
    return exit_usage;
}
