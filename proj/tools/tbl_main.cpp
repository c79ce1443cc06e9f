// tbl — evaluations of tame Brauer classes over p-adic fields.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage or parse error,
// 3 precision exhaustion.

#include <CLI11.hpp>

#include <iostream>

#include "tbl/runner.hpp"

namespace {

int exit_code_for(const tbl::Error& e) {
    switch (e.code()) {
        case tbl::ErrorCode::ParseError:
        case tbl::ErrorCode::ValidationError:
            return 2;
        case tbl::ErrorCode::PrecisionExhausted:
            return 3;
        default:
            return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tamebrauer: tame Brauer class evaluation over Q_p"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string repro_name;
    long seed = -1;
    int precision = -1;
    long samples = -1;

    auto add_common = [&](CLI::App* cmd, bool scenario_required) {
        auto* opt = cmd->add_option("--scenario", scenario_path, "scenario file");
        if (scenario_required) opt->required();
        cmd->add_option("--seed", seed, "sampling seed (overrides the scenario)");
        cmd->add_option("--precision", precision, "p-adic working precision (digits)");
        cmd->add_option("--samples", samples, "sample count (overrides the scenario)");
    };

    std::vector<std::pair<std::string, std::string>> subcommands = {
        {"eval", "evaluate all classes at all points"},
        {"intersect", "intersection data tables"},
        {"equiv", "Theorem 0.1 property check over sampled pairs"},
        {"verify-thm16", "Diagram (4) commutativity over samples"},
        {"cohom", "finite abelian group computations"},
    };
    for (const auto& [name, desc] : subcommands) add_common(app.add_subcommand(name, desc), true);

    auto* repro = app.add_subcommand("repro", "run a named reproduction");
    std::string allowed;
    for (const std::string& n : tbl::repro_names()) allowed += (allowed.empty() ? "" : ", ") + n;
    repro->add_option("name", repro_name, "one of: " + allowed)->required();
    add_common(repro, false);

    CLI11_PARSE(app, argc, argv);

    tbl::RunOptions opts;
    if (seed >= 0) opts.seed = static_cast<uint64_t>(seed);
    if (precision > 0) opts.precision = precision;
    if (samples > 0) opts.samples = samples;

    try {
        tbl::RunResult result;
        if (repro->parsed()) {
            result = tbl::run_repro(repro_name, opts);
        } else {
            tbl::Scenario scenario = tbl::load_scenario(scenario_path);
            result = tbl::run(app.get_subcommands().front()->get_name(), scenario, opts);
        }
        std::cout << result.report;
        return result.exit_code;
    } catch (const tbl::Error& e) {
        std::cerr << "error (" << tbl::error_code_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
