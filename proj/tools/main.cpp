#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paritydistill/checks.hpp"
#include "paritydistill/po_equiv.hpp"
#include "paritydistill/protocol.hpp"
#include "paritydistill/sweep.hpp"

namespace {

using namespace paritydistill;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw IoError("failed writing output file: " + path);
}

template <typename T>
T parse_or_throw(std::optional<T> (*parser)(const std::string&), const std::string& value,
                 const std::string& what) {
    auto parsed = parser(value);
    if (!parsed) throw Error("invalid " + what + ": " + value);
    return *parsed;
}

struct CommonFlags {
    std::string statistics = "fermion";
    std::string output;
};

int cmd_sweep(const std::string& channel, const CommonFlags& common, const SweepConfig& base,
              const BathParams& bath, const std::vector<double>& phis, const std::string& format) {
    SweepConfig config = base;
    config.bath = bath;
    config.channel = parse_or_throw(parse_channel_kind, channel, "channel");
    config.statistics = parse_or_throw(parse_statistics, common.statistics, "statistics");
    if (!phis.empty()) config.phis = phis;
    if (format != "csv" && format != "json") throw Error("format must be csv or json");
    auto rows = run_sweep(config);
    write_output(common.output, format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows));
    return kExitOk;
}

int cmd_protocol(const std::string& scheme_name, const CommonFlags& common, const std::string& channel,
                 int iterations, const std::string& mode, std::uint64_t trials, std::uint64_t seed,
                 double a, double phi, const BathParams& bath, double t, const std::string& target) {
    SchemeVariant variant = parse_or_throw(parse_scheme_variant, scheme_name, "scheme");
    Statistics statistics = parse_or_throw(parse_statistics, common.statistics, "statistics");

    ProtocolScheme scheme;
    switch (variant) {
        case SchemeVariant::ResetDepolarize:
            if (!target.empty())
                throw Error("reset-dep pins the target parity (even for fermions, odd for bosons)");
            scheme = ProtocolScheme::reset_depolarize(statistics, iterations);
            break;
        case SchemeVariant::ResetAmplitudeDamp: {
            Parity parity = target.empty()
                                ? ProtocolScheme::default_target_parity(variant, statistics)
                                : parse_or_throw(parse_parity, target, "target parity");
            scheme = ProtocolScheme::reset_amplitude_damp(statistics, parity, iterations);
            break;
        }
        case SchemeVariant::NonReset: {
            ChannelKind kind = parse_or_throw(parse_channel_kind, channel, "channel");
            scheme = ProtocolScheme::non_reset(kind, statistics, {a, phi}, bath, t);
            if (!target.empty()) scheme.target_parity = parse_or_throw(parse_parity, target, "target parity");
            if (iterations != 1) throw Error("the non-reset process is single shot; iterations are rejected");
            break;
        }
    }

    RunSummary summary;
    if (mode == "exact")
        summary = run_exact(scheme);
    else if (mode == "mc")
        summary = run_monte_carlo(scheme, trials, seed);
    else
        throw Error("mode must be exact or mc");
    write_output(common.output, summary.to_json() + "\n");
    return kExitOk;
}

int cmd_po_graph(const CommonFlags& common, int depth, const std::string& dot_path,
                 const std::string& json_path) {
    Statistics statistics = parse_or_throw(parse_statistics, common.statistics, "statistics");
    PoGraph graph = build_po_graph(statistics, depth);
    if (dot_path.empty() && json_path.empty()) {
        std::cout << to_dot(graph);
        return kExitOk;
    }
    if (!dot_path.empty()) write_output(dot_path, to_dot(graph));
    if (!json_path.empty()) write_output(json_path, to_json(graph) + "\n");
    return kExitOk;
}

int cmd_verify(const std::string& self_path) {
    auto results = checks::run_all(self_path);
    std::size_t failed = 0;
    std::size_t width = 0;
    for (const auto& result : results) width = std::max(width, result.name.size());
    for (const auto& result : results) {
        std::cout << (result.pass ? "PASS  " : "FAIL  ") << result.name;
        if (!result.detail.empty())
            std::cout << std::string(width - result.name.size() + 2, ' ') << result.detail;
        std::cout << "\n";
        if (!result.pass) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for parity-check distillation of maximally entangled states "
                 "of two identical qubits"};
    app.require_subcommand(1);

    CommonFlags common;
    BathParams bath;
    SweepConfig sweep_base;
    std::vector<double> phis;
    std::string channel = "pd", format = "csv", mode = "exact", target;
    std::string dot_path, json_path;
    int iterations = 1, depth = 6;
    std::uint64_t trials = 100000, seed = 0;
    double a = 1.0 / std::numbers::sqrt2, phi = std::numbers::pi, t = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--statistics", common.statistics, "boson | fermion")->capture_default_str();
        cmd->add_option("--output,-o", common.output, "output file (default stdout)");
    };
    auto add_bath = [&](CLI::App* cmd) {
        cmd->add_option("--gamma", bath.gamma, "bath coupling strength")->capture_default_str();
        cmd->add_option("--lambda", bath.lambda, "bath spectral width")->capture_default_str();
        cmd->add_option("--omega0", bath.omega0, "qubit transition frequency")->capture_default_str();
    };

    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep of the non-reset pipeline");
    add_common(sweep);
    add_bath(sweep);
    sweep->add_option("--channel", channel, "pd | dep | ad")->capture_default_str();
    sweep->add_option("--a-min", sweep_base.a_min)->capture_default_str();
    sweep->add_option("--a-max", sweep_base.a_max)->capture_default_str();
    sweep->add_option("--a-steps", sweep_base.a_steps, "number of a grid points")->capture_default_str();
    sweep->add_option("--phi", phis, "phi values (repeatable)");
    sweep->add_option("--t-min", sweep_base.t_min)->capture_default_str();
    sweep->add_option("--t-max", sweep_base.t_max)->capture_default_str();
    sweep->add_option("--t-steps", sweep_base.t_steps, "number of t grid points")->capture_default_str();
    sweep->add_option("--format", format, "csv | json")->capture_default_str();

    CLI::App* protocol = app.add_subcommand("protocol", "run one protocol scheme");
    add_common(protocol);
    add_bath(protocol);
    std::string scheme_name = "reset-dep";
    protocol->add_option("--scheme", scheme_name, "reset-dep | reset-ad | non-reset")->capture_default_str();
    protocol->add_option("--channel", channel, "pd | dep | ad (non-reset)")->capture_default_str();
    protocol->add_option("--iterations", iterations, "iteration budget")->capture_default_str();
    protocol->add_option("--mode", mode, "exact | mc")->capture_default_str();
    protocol->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    protocol->add_option("--seed", seed, "Monte Carlo master seed")->capture_default_str();
    protocol->add_option("--a", a, "initial-state amplitude a")->capture_default_str();
    protocol->add_option("--phi", phi, "initial-state phase")->capture_default_str();
    protocol->add_option("--t", t, "interaction time (non-reset)")->capture_default_str();
    protocol->add_option("--target-parity", target, "odd | even (reset-ad or non-reset)");

    CLI::App* po = app.add_subcommand("po-graph", "passive-optical reachability graph");
    add_common(po);
    po->add_option("--depth", depth, "search depth")->capture_default_str();
    po->add_option("--dot", dot_path, "DOT output file");
    po->add_option("--json", json_path, "JSON output file");

    CLI::App* verify = app.add_subcommand("verify", "run all invariant suites and acceptance criteria");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(channel, common, sweep_base, bath, phis, format);
        if (protocol->parsed())
            return cmd_protocol(scheme_name, common, channel, iterations, mode, trials, seed, a, phi,
                                bath, t, target);
        if (po->parsed()) return cmd_po_graph(common, depth, dot_path, json_path);
        if (verify->parsed()) return cmd_verify(argv[0]);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
