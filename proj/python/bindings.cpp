// Python bindings: the main operations of the core library, with density
// operators and unitaries exchanged as numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paritydistill/channels.hpp"
#include "paritydistill/detector.hpp"
#include "paritydistill/elements.hpp"
#include "paritydistill/oracle.hpp"
#include "paritydistill/po_equiv.hpp"
#include "paritydistill/protocol.hpp"
#include "paritydistill/sweep.hpp"

namespace py = pybind11;
using namespace paritydistill;

namespace {

Statistics stats_arg(const std::string& s) {
    auto parsed = parse_statistics(s);
    if (!parsed) throw py::value_error("statistics must be 'boson' or 'fermion'");
    return *parsed;
}

ChannelKind channel_arg(const std::string& s) {
    auto parsed = parse_channel_kind(s);
    if (!parsed) throw py::value_error("channel must be 'pd', 'dep' or 'ad'");
    return *parsed;
}

Parity parity_arg(const std::string& s) {
    auto parsed = parse_parity(s);
    if (!parsed) throw py::value_error("parity must be 'odd' or 'even'");
    return *parsed;
}

NamedLabel label_arg(const std::string& s) {
    auto parsed = parse_named_label(s);
    if (!parsed) throw py::value_error("unknown state label: " + s);
    return *parsed;
}

ModeIndex mode_arg(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (to_string(ModeIndex::from_linear(i)) == s) return ModeIndex::from_linear(i);
    throw py::value_error("mode must be one of Lup, Ldown, Rup, Rdown");
}

ElementSpec spec_arg(const std::string& kind, double theta, const std::string& mode,
                     const std::string& spin) {
    if (kind == "BS") return ElementSpec::bs();
    if (kind == "PBS") return ElementSpec::pbs();
    Spatial target = mode == "L" ? Spatial::L : Spatial::R;
    if (mode != "L" && mode != "R") throw py::value_error("mode must be 'L' or 'R'");
    if (kind == "PR") return ElementSpec::pr(target);
    if (kind == "PIPS") return ElementSpec::pips(theta, target);
    if (kind == "PDPS") {
        if (spin != "up" && spin != "down") throw py::value_error("spin must be 'up' or 'down'");
        return ElementSpec::pdps(theta, target, spin == "up" ? Pseudospin::Up : Pseudospin::Down);
    }
    throw py::value_error("kind must be BS, PBS, PR, PIPS or PDPS");
}

py::dict outcome_dict(const ParityOutcome& outcome) {
    py::dict d;
    d["parity"] = to_string(outcome.parity);
    d["probability"] = outcome.probability;
    d["conditional"] = outcome.conditional ? py::cast(outcome.conditional->matrix()) : py::none();
    return d;
}

py::dict summary_dict(const RunSummary& summary) {
    py::dict d;
    py::dict scheme;
    scheme["variant"] = to_string(summary.scheme.variant);
    scheme["statistics"] = to_string(summary.scheme.statistics);
    scheme["target_parity"] = to_string(summary.scheme.target_parity);
    scheme["max_iterations"] = summary.scheme.max_iterations;
    if (summary.scheme.channel_kind) scheme["channel"] = to_string(*summary.scheme.channel_kind);
    if (summary.scheme.init) {
        scheme["a"] = summary.scheme.init->a;
        scheme["phi"] = summary.scheme.init->phi;
    }
    if (summary.scheme.t) scheme["t"] = *summary.scheme.t;
    d["scheme"] = scheme;
    d["mode"] = summary.mode == RunMode::Exact ? "exact" : "mc";
    if (summary.trials) d["trials"] = *summary.trials;
    if (summary.seed) d["seed"] = *summary.seed;
    if (!summary.rng_name.empty()) d["rng"] = summary.rng_name;
    py::list iterations;
    for (const auto& r : summary.iterations) {
        py::dict rec;
        rec["j"] = r.j;
        rec["p_odd"] = r.p_odd;
        rec["p_even"] = r.p_even;
        rec["success_this_round"] = r.success_this_round;
        rec["cumulative_success"] = r.cumulative_success;
        rec["fidelity_to_target"] = r.fidelity_to_target;
        rec["target_label"] = r.target_label;
        rec["distilled_state"] = r.distilled_state ? py::cast(r.distilled_state->matrix()) : py::none();
        iterations.append(rec);
    }
    d["iterations"] = iterations;
    if (summary.mode == RunMode::MonteCarlo) {
        py::list empirical;
        for (const auto& r : summary.empirical) {
            py::dict rec;
            rec["j"] = r.j;
            rec["success_freq"] = r.success_freq;
            rec["cumulative_freq"] = r.cumulative_freq;
            empirical.append(rec);
        }
        d["empirical"] = empirical;
    }
    return d;
}

ProtocolScheme build_scheme(const std::string& variant, const std::string& statistics,
                            const std::string& channel, int iterations, double a, double phi,
                            double gamma, double lambda, double omega0, double t,
                            const std::string& target_parity) {
    SchemeVariant v = *parse_scheme_variant(variant);
    Statistics s = stats_arg(statistics);
    ProtocolScheme scheme;
    switch (v) {
        case SchemeVariant::ResetDepolarize:
            scheme = ProtocolScheme::reset_depolarize(s, iterations);
            break;
        case SchemeVariant::ResetAmplitudeDamp: {
            Parity parity = target_parity.empty() ? ProtocolScheme::default_target_parity(v, s)
                                                  : parity_arg(target_parity);
            scheme = ProtocolScheme::reset_amplitude_damp(s, parity, iterations);
            break;
        }
        case SchemeVariant::NonReset:
            scheme = ProtocolScheme::non_reset(channel_arg(channel), s, {a, phi},
                                               BathParams{gamma, lambda, omega0}, t);
            if (!target_parity.empty()) scheme.target_parity = parity_arg(target_parity);
            break;
    }
    return scheme;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simulator for parity-check distillation of maximally entangled "
              "states of two identical qubits";

    py::register_exception<Error>(m, "SimulatorError");

    m.def("basis_occupancies", [](const std::string& statistics) {
        py::list out;
        for (const auto& state : sector_basis(stats_arg(statistics)).states)
            out.append(py::make_tuple(state.occupancy[0], state.occupancy[1], state.occupancy[2],
                                      state.occupancy[3]));
        return out;
    }, py::arg("statistics"), "Canonical occupation basis, lexicographically descending.");

    m.def("named_labels", [](const std::string& statistics) {
        py::list out;
        for (NamedLabel label : named_labels(stats_arg(statistics))) out.append(to_string(label));
        return out;
    }, py::arg("statistics"));

    m.def("named_state", [](const std::string& label, const std::string& statistics) {
        return Vector(named_state(label_arg(label), stats_arg(statistics)).amplitudes());
    }, py::arg("label"), py::arg("statistics"));

    m.def("product_state", [](const std::string& mode_a, const std::string& mode_b,
                              const std::string& statistics) {
        return Vector(product_state(mode_arg(mode_a), mode_arg(mode_b), stats_arg(statistics)).amplitudes());
    }, py::arg("mode_a"), py::arg("mode_b"), py::arg("statistics"));

    m.def("parity_projector", [](const std::string& parity, const std::string& statistics) {
        return parity_projector(parity_class_of(parity_arg(parity)), stats_arg(statistics));
    }, py::arg("parity"), py::arg("statistics"));

    m.def("element_unitary", [](const std::string& kind, double theta, const std::string& mode,
                                const std::string& spin) {
        return Eigen::Matrix4cd(element_unitary(spec_arg(kind, theta, mode, spin)).matrix);
    }, py::arg("kind"), py::arg("theta") = 0.0, py::arg("mode") = "L", py::arg("spin") = "up");

    m.def("lift", [](const std::string& kind, const std::string& statistics, double theta,
                     const std::string& mode, const std::string& spin) {
        return Matrix(lift(spec_arg(kind, theta, mode, spin), stats_arg(statistics)).matrix);
    }, py::arg("kind"), py::arg("statistics"), py::arg("theta") = 0.0, py::arg("mode") = "L",
       py::arg("spin") = "up");

    m.def("lift_matrix", [](const Eigen::Matrix4cd& u, const std::string& statistics) {
        return Matrix(lift(SingleParticleUnitary{u, "custom"}, stats_arg(statistics)).matrix);
    }, py::arg("u"), py::arg("statistics"), "Lift an arbitrary 4x4 single-particle unitary.");

    m.def("spectral_density", [](double omega, double gamma, double lambda, double omega0) {
        return spectral_density(BathParams{gamma, lambda, omega0}, omega);
    }, py::arg("omega"), py::arg("gamma") = 1.0, py::arg("lambda") = 1.0, py::arg("omega0") = 1.0);

    m.def("disturbance_probability", [](double t, double gamma, double lambda) {
        return disturbance_probability(BathParams{gamma, lambda, 1.0}, t);
    }, py::arg("t"), py::arg("gamma") = 1.0, py::arg("lambda") = 1.0);

    m.def("evolve", [](const std::string& channel, const Matrix& rho, double p,
                       const std::string& statistics) {
        return Matrix(evolve(channel_arg(channel), DensityOperator(stats_arg(statistics), rho), p).matrix());
    }, py::arg("channel"), py::arg("rho"), py::arg("p"), py::arg("statistics"));

    m.def("local_kraus", [](const std::string& channel, double p) {
        py::list out;
        for (const auto& k : local_kraus(channel_arg(channel), p).ops) out.append(Eigen::Matrix2cd(k));
        return out;
    }, py::arg("channel"), py::arg("p"));

    m.def("apply_local_pair", [](const std::string& channel, double p, const Matrix& rho,
                                 const std::string& statistics) {
        return Matrix(apply_local_pair(local_kraus(channel_arg(channel), p),
                                       DensityOperator(stats_arg(statistics), rho))
                          .matrix());
    }, py::arg("channel"), py::arg("p"), py::arg("rho"), py::arg("statistics"));

    m.def("reset_depolarize", [](const std::string& statistics) {
        return Matrix(reset_depolarize(stats_arg(statistics)).matrix());
    }, py::arg("statistics"));

    m.def("reset_amplitude_damp", [](const std::string& statistics) {
        return Matrix(reset_amplitude_damp(stats_arg(statistics)).matrix());
    }, py::arg("statistics"));

    m.def("parity_measure", [](const Matrix& rho, const std::string& statistics) {
        ParityMeasurement measurement = parity_measure(DensityOperator(stats_arg(statistics), rho));
        py::dict d;
        d["odd"] = outcome_dict(measurement.odd);
        d["even"] = outcome_dict(measurement.even);
        return d;
    }, py::arg("rho"), py::arg("statistics"));

    m.def("fidelity", [](const Matrix& rho, const Matrix& sigma, const std::string& statistics) {
        Statistics s = stats_arg(statistics);
        return fidelity(DensityOperator(s, rho), DensityOperator(s, sigma));
    }, py::arg("rho"), py::arg("sigma"), py::arg("statistics"));

    m.def("purity", [](const Matrix& rho, const std::string& statistics) {
        return purity(DensityOperator(stats_arg(statistics), rho));
    }, py::arg("rho"), py::arg("statistics"));

    m.def("closed_form_probabilities", [](const std::string& channel, const std::string& statistics,
                                          double a, double phi, double p) {
        BranchProbabilities b = closed_form_probability(channel_arg(channel), stats_arg(statistics), a, phi, p);
        return py::make_tuple(b.odd, b.even);
    }, py::arg("channel"), py::arg("statistics"), py::arg("a"), py::arg("phi"), py::arg("p"));

    m.def("post_bs_state", [](const std::string& channel, const std::string& statistics, double a,
                              double phi, double p) {
        return Matrix(post_bs_state(channel_arg(channel), stats_arg(statistics), a, phi, p).matrix());
    }, py::arg("channel"), py::arg("statistics"), py::arg("a"), py::arg("phi"), py::arg("p"));

    m.def("run_exact", [](const std::string& scheme, const std::string& statistics,
                          const std::string& channel, int iterations, double a, double phi,
                          double gamma, double lambda, double omega0, double t,
                          const std::string& target_parity) {
        return summary_dict(run_exact(build_scheme(scheme, statistics, channel, iterations, a, phi,
                                                   gamma, lambda, omega0, t, target_parity)));
    }, py::arg("scheme"), py::arg("statistics"), py::arg("channel") = "pd", py::arg("iterations") = 1,
       py::arg("a") = 0.7071067811865475, py::arg("phi") = 3.141592653589793, py::arg("gamma") = 1.0,
       py::arg("lambda") = 1.0, py::arg("omega0") = 1.0, py::arg("t") = 0.0,
       py::arg("target_parity") = "");

    m.def("run_monte_carlo", [](const std::string& scheme, const std::string& statistics,
                                std::uint64_t trials, std::uint64_t seed, const std::string& channel,
                                int iterations, double a, double phi, double gamma, double lambda,
                                double omega0, double t, const std::string& target_parity) {
        return summary_dict(run_monte_carlo(build_scheme(scheme, statistics, channel, iterations, a, phi,
                                                         gamma, lambda, omega0, t, target_parity),
                                            trials, seed));
    }, py::arg("scheme"), py::arg("statistics"), py::arg("trials"), py::arg("seed"),
       py::arg("channel") = "pd", py::arg("iterations") = 1, py::arg("a") = 0.7071067811865475,
       py::arg("phi") = 3.141592653589793, py::arg("gamma") = 1.0, py::arg("lambda") = 1.0,
       py::arg("omega0") = 1.0, py::arg("t") = 0.0, py::arg("target_parity") = "");

    m.def("verify_stated_edges", [](const std::string& statistics) {
        EdgeReport report = verify_stated_edges(stats_arg(statistics));
        py::list edges;
        for (const auto& edge : report.edges) {
            py::dict d;
            d["from"] = edge.from;
            d["to"] = edge.to;
            d["stated_device"] = to_string(edge.stated_device);
            d["stated_device_pass"] = edge.stated_device_pass;
            d["realized_device"] = to_string(edge.realized_device);
            d["realized_phase"] = edge.realized_phase;
            d["pass"] = edge.pass;
            edges.append(d);
        }
        py::dict out;
        out["edges"] = edges;
        out["notes"] = report.notes;
        out["all_pass"] = report.all_pass();
        return out;
    }, py::arg("statistics"));

    m.def("po_components", [](const std::string& statistics, int depth) {
        PoGraph graph = build_po_graph(stats_arg(statistics), depth);
        py::dict out;
        for (const auto& [label, component] : graph.label_components) out[label.c_str()] = component;
        return out;
    }, py::arg("statistics"), py::arg("depth") = 6,
       "Connected-component index of each named state in the passive-optical reachability graph.");

    m.def("po_reach_labels", [](const std::string& label, const std::string& statistics, int depth) {
        ReachResult result = reach(label_arg(label), stats_arg(statistics), depth);
        py::list out;
        for (NamedLabel named : named_labels(stats_arg(statistics)))
            if (result.contains(named)) out.append(to_string(named));
        return out;
    }, py::arg("label"), py::arg("statistics"), py::arg("depth") = 4);

    m.def("sweep_csv", [](const std::string& channel, const std::string& statistics, double a_min,
                          double a_max, int a_steps, const std::vector<double>& phis, double t_min,
                          double t_max, int t_steps, double gamma, double lambda, double omega0) {
        SweepConfig config;
        config.channel = channel_arg(channel);
        config.statistics = stats_arg(statistics);
        config.a_min = a_min;
        config.a_max = a_max;
        config.a_steps = a_steps;
        config.phis = phis;
        config.t_min = t_min;
        config.t_max = t_max;
        config.t_steps = t_steps;
        config.bath = BathParams{gamma, lambda, omega0};
        return sweep_to_csv(run_sweep(config));
    }, py::arg("channel"), py::arg("statistics"), py::arg("a_min") = 0.0, py::arg("a_max") = 1.0,
       py::arg("a_steps") = 11, py::arg("phis") = std::vector<double>{0.0, 3.141592653589793},
       py::arg("t_min") = 0.0, py::arg("t_max") = 10.0, py::arg("t_steps") = 101,
       py::arg("gamma") = 1.0, py::arg("lambda") = 1.0, py::arg("omega0") = 1.0);

    m.attr("__version__") = "0.1.0";
}
