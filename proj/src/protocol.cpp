#include "paritydistill/protocol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "paritydistill/elements.hpp"

namespace paritydistill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kRngName = "splitmix64/mt19937_64";

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability("probability outside [0, 1]");
}

std::string reset_target_label(SchemeVariant variant, Statistics statistics, Parity parity) {
    if (variant == SchemeVariant::ResetDepolarize)
        return statistics == Statistics::Fermion ? "1-NO" : "1-LR";
    // Amplitude-damping reset: both branches are pure named states.
    if (parity == Parity::Even) return "1-NO";
    return statistics == Statistics::Fermion ? "1+LR" : "1-LR";
}

}  // namespace

double InitialStateParams::b() const {
    return std::sqrt(std::max(0.0, 1.0 - a * a));
}

void InitialStateParams::validate() const {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("initial-state parameter a must lie in [0, 1]");
}

StateVector initial_state(const InitialStateParams& init, Statistics statistics) {
    init.validate();
    Vector amps = init.a * product_state(kLUp, kRDown, statistics).amplitudes() +
                  init.b() * std::polar(1.0, init.phi) * product_state(kLDown, kRUp, statistics).amplitudes();
    return StateVector(statistics, std::move(amps));
}

std::string to_string(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::ResetDepolarize: return "reset-dep";
        case SchemeVariant::ResetAmplitudeDamp: return "reset-ad";
        case SchemeVariant::NonReset: return "non-reset";
    }
    return "?";
}

std::optional<SchemeVariant> parse_scheme_variant(const std::string& s) {
    if (s == "reset-dep") return SchemeVariant::ResetDepolarize;
    if (s == "reset-ad") return SchemeVariant::ResetAmplitudeDamp;
    if (s == "non-reset") return SchemeVariant::NonReset;
    return std::nullopt;
}

Parity ProtocolScheme::default_target_parity(SchemeVariant, Statistics statistics) {
    return statistics == Statistics::Boson ? Parity::Odd : Parity::Even;
}

ProtocolScheme ProtocolScheme::reset_depolarize(Statistics statistics, int iterations) {
    ProtocolScheme scheme;
    scheme.variant = SchemeVariant::ResetDepolarize;
    scheme.statistics = statistics;
    scheme.target_parity = default_target_parity(scheme.variant, statistics);
    scheme.max_iterations = iterations;
    return scheme;
}

ProtocolScheme ProtocolScheme::reset_amplitude_damp(Statistics statistics, Parity target, int iterations) {
    ProtocolScheme scheme;
    scheme.variant = SchemeVariant::ResetAmplitudeDamp;
    scheme.statistics = statistics;
    scheme.apply_pr_before_bs = true;
    scheme.target_parity = target;
    scheme.max_iterations = iterations;
    return scheme;
}

ProtocolScheme ProtocolScheme::non_reset(ChannelKind kind, Statistics statistics, InitialStateParams init,
                                         BathParams bath, double t) {
    ProtocolScheme scheme;
    scheme.variant = SchemeVariant::NonReset;
    scheme.statistics = statistics;
    scheme.channel_kind = kind;
    init.phi = reduce_angle(init.phi);
    scheme.init = init;
    scheme.bath = bath;
    scheme.t = t;
    scheme.target_parity = default_target_parity(scheme.variant, statistics);
    scheme.max_iterations = 1;
    return scheme;
}

void ProtocolScheme::validate() const {
    if (max_iterations < 1) throw Error("max_iterations must be positive");
    const bool non_reset = variant == SchemeVariant::NonReset;
    if (non_reset) {
        if (!channel_kind || !init || !bath || !t)
            throw Error("non-reset scheme requires channel, initial state, bath and time");
        if (max_iterations != 1) throw Error("the non-reset process is single shot; iterations are rejected");
        if (apply_pr_before_bs) throw Error("the pseudospin rotator applies only to the amplitude-damping reset");
        init->validate();
        bath->validate();
        if (*t < 0.0) throw NegativeTime("interaction time must be non-negative");
    } else {
        if (channel_kind || init || bath || t)
            throw Error("reset schemes take no channel, initial-state or bath parameters");
        if (variant == SchemeVariant::ResetAmplitudeDamp) {
            if (!apply_pr_before_bs) throw Error("the amplitude-damping reset requires the pseudospin rotator");
        } else {
            if (apply_pr_before_bs) throw Error("the pseudospin rotator applies only to the amplitude-damping reset");
            if (target_parity != default_target_parity(variant, statistics))
                throw Error("the depolarizing reset targets the even branch for fermions and the odd one for bosons");
        }
    }
}

std::pair<std::string, double> dominant_target(const DensityOperator& rho, Parity parity) {
    std::string best_label;
    double best = -1.0;
    for (NamedLabel label : named_labels(rho.statistics())) {
        if (parity_class_of(label) != parity_class_of(parity)) continue;
        double f = fidelity_with_pure(rho, named_state(label, rho.statistics()));
        if (f > best + kTol) {
            best = f;
            best_label = to_string(label);
        }
    }
    if (parity == Parity::Odd) {
        // The two-particle ground state is the one non-named pure branch
        // the pipelines can produce (fermionic amplitude damping).
        double f = fidelity_with_pure(rho, product_state(kLDown, kRDown, rho.statistics()));
        if (f > best + kTol) {
            best = f;
            best_label = "ground";
        }
    }
    return {best_label, best};
}

RunSummary run_exact(const ProtocolScheme& scheme) {
    scheme.validate();
    const Statistics statistics = scheme.statistics;
    const LiftedOperator bs = lift(ElementSpec::bs(), statistics);
    const LiftedOperator pr_left = lift(ElementSpec::pr(Spatial::L), statistics);

    auto reset_state = [&]() -> DensityOperator {
        switch (scheme.variant) {
            case SchemeVariant::ResetDepolarize: return reset_depolarize(statistics);
            case SchemeVariant::ResetAmplitudeDamp: return reset_amplitude_damp(statistics);
            default: throw Error("unreachable");
        }
    };

    DensityOperator rho = [&] {
        if (scheme.variant != SchemeVariant::NonReset) return reset_state();
        double p = disturbance_probability(*scheme.bath, *scheme.t);
        return evolve(*scheme.channel_kind, DensityOperator::pure(initial_state(*scheme.init, statistics)), p);
    }();

    RunSummary summary;
    summary.scheme = scheme;
    summary.mode = RunMode::Exact;

    double survival = 1.0;
    double cumulative = 0.0;
    for (int j = 1; j <= scheme.max_iterations; ++j) {
        if (scheme.apply_pr_before_bs) rho = apply_to_density(pr_left, rho);
        DensityOperator rho_bs = apply_to_density(bs, rho);
        ParityMeasurement measurement = parity_measure(rho_bs);
        const ParityOutcome& hit = measurement.branch(scheme.target_parity);
        const ParityOutcome& miss = measurement.branch(opposite(scheme.target_parity));

        IterationRecord record;
        record.j = j;
        record.p_odd = measurement.odd.probability;
        record.p_even = measurement.even.probability;
        record.success_this_round = survival * hit.probability;
        cumulative += record.success_this_round;
        record.cumulative_success = cumulative;
        record.distilled_state = hit.conditional;
        if (hit.conditional) {
            if (scheme.variant == SchemeVariant::NonReset) {
                auto [label, f] = dominant_target(*hit.conditional, scheme.target_parity);
                record.target_label = label;
                record.fidelity_to_target = f;
            } else {
                record.target_label = reset_target_label(scheme.variant, statistics, scheme.target_parity);
                auto target = named_state(*parse_named_label(record.target_label), statistics);
                record.fidelity_to_target = fidelity_with_pure(*hit.conditional, target);
            }
        } else {
            record.target_label = "";
            record.fidelity_to_target = std::numeric_limits<double>::quiet_NaN();
        }
        summary.iterations.push_back(std::move(record));

        if (scheme.variant == SchemeVariant::NonReset) break;
        if (!miss.conditional) break;  // the non-target branch is empty
        survival *= miss.probability;
        DensityOperator next = *miss.conditional;
        if (next.support_outside(ParityClass::LR) > kTol) {
            // Even-parity outcomes re-enter through the beam splitter,
            // which maps them back into the one-particle-per-mode sector
            // before the reset noise is applied again.
            next = apply_to_density(bs, next);
            if (next.support_outside(ParityClass::LR) > kTol)
                throw Error("beam splitter failed to return the retry branch to the LR sector");
        }
        ChannelKind reset_kind = scheme.variant == SchemeVariant::ResetDepolarize
                                     ? ChannelKind::Depolarizing
                                     : ChannelKind::AmplitudeDamping;
        rho = evolve(reset_kind, next, 1.0);
    }
    return summary;
}

RunSummary run_monte_carlo(const ProtocolScheme& scheme, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw Error("trials must be positive");
    RunSummary summary = run_exact(scheme);
    summary.mode = RunMode::MonteCarlo;
    summary.trials = trials;
    summary.seed = seed;
    summary.rng_name = kRngName;

    std::vector<double> p_hit;
    p_hit.reserve(summary.iterations.size());
    for (const auto& record : summary.iterations)
        p_hit.push_back(scheme.target_parity == Parity::Odd ? record.p_odd : record.p_even);

    std::vector<std::uint64_t> first_success(p_hit.size(), 0);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // One independent stream per trial, so any partitioning of the
        // trial range reproduces the same outcomes.
        std::mt19937_64 rng(stream_seed(seed, trial));
        for (std::size_t j = 0; j < p_hit.size(); ++j) {
            if (uniform_double(rng) < p_hit[j]) {
                ++first_success[j];
                break;
            }
        }
    }

    double cumulative = 0.0;
    for (std::size_t j = 0; j < p_hit.size(); ++j) {
        EmpiricalRecord record;
        record.j = static_cast<int>(j) + 1;
        record.success_freq = static_cast<double>(first_success[j]) / static_cast<double>(trials);
        cumulative += record.success_freq;
        record.cumulative_freq = cumulative;
        summary.empirical.push_back(record);
    }
    return summary;
}

BranchProbabilities closed_form_probability(ChannelKind kind, Statistics statistics, double a,
                                            double phi, double p) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("initial-state parameter a must lie in [0, 1]");
    check_probability(p);
    const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    const double x = a * b * std::cos(phi);
    double odd_boson = 0.0;
    switch (kind) {
        case ChannelKind::PhaseDamping: odd_boson = 0.5 - (1.0 - p) * x; break;
        case ChannelKind::Depolarizing: odd_boson = 0.5 - p / 4.0 - (1.0 - p) * x; break;
        case ChannelKind::AmplitudeDamping: odd_boson = (1.0 - p) * (0.5 - x); break;
    }
    if (statistics == Statistics::Boson) return {odd_boson, 1.0 - odd_boson};
    // Statistics swap the parity of every branch.
    return {1.0 - odd_boson, odd_boson};
}

BranchProbabilities closed_form_reset_round(SchemeVariant variant, Statistics statistics) {
    switch (variant) {
        case SchemeVariant::ResetDepolarize:
            return statistics == Statistics::Fermion ? BranchProbabilities{0.75, 0.25}
                                                     : BranchProbabilities{0.25, 0.75};
        case SchemeVariant::ResetAmplitudeDamp: return {0.5, 0.5};
        case SchemeVariant::NonReset: break;
    }
    throw Error("closed-form reset rounds exist only for the reset schemes");
}

DensityOperator post_bs_state(ChannelKind kind, Statistics statistics, double a, double phi, double p) {
    InitialStateParams init{a, phi};
    DensityOperator rho = evolve(kind, DensityOperator::pure(initial_state(init, statistics)), p);
    return apply_to_density(lift(ElementSpec::bs(), statistics), rho);
}

namespace {

std::string json_number(double v) {
    if (std::isnan(v) || std::isinf(v)) return "null";
    return format_double(v);
}

void append_scheme_json(std::ostringstream& out, const ProtocolScheme& scheme) {
    out << "{\"variant\":\"" << to_string(scheme.variant) << "\""
        << ",\"statistics\":\"" << to_string(scheme.statistics) << "\"";
    if (scheme.channel_kind) out << ",\"channel\":\"" << to_string(*scheme.channel_kind) << "\"";
    if (scheme.init)
        out << ",\"a\":" << json_number(scheme.init->a) << ",\"phi\":" << json_number(scheme.init->phi);
    if (scheme.bath)
        out << ",\"gamma\":" << json_number(scheme.bath->gamma)
            << ",\"lambda\":" << json_number(scheme.bath->lambda)
            << ",\"omega0\":" << json_number(scheme.bath->omega0);
    if (scheme.t) {
        out << ",\"t\":" << json_number(*scheme.t);
        out << ",\"p_disturb\":" << json_number(disturbance_probability(*scheme.bath, *scheme.t));
    }
    out << ",\"apply_pr_before_bs\":" << (scheme.apply_pr_before_bs ? "true" : "false")
        << ",\"target_parity\":\"" << to_string(scheme.target_parity) << "\""
        << ",\"max_iterations\":" << scheme.max_iterations << "}";
}

}  // namespace

std::string RunSummary::to_json() const {
    std::ostringstream out;
    out << "{\"scheme\":";
    append_scheme_json(out, scheme);
    out << ",\"mode\":\"" << (mode == RunMode::Exact ? "exact" : "mc") << "\"";
    if (trials) out << ",\"trials\":" << *trials;
    if (seed) out << ",\"seed\":" << *seed;
    if (!rng_name.empty()) out << ",\"rng\":\"" << rng_name << "\"";
    out << ",\"iterations\":[";
    for (std::size_t k = 0; k < iterations.size(); ++k) {
        const auto& r = iterations[k];
        if (k) out << ",";
        out << "{\"j\":" << r.j << ",\"p_odd\":" << json_number(r.p_odd)
            << ",\"p_even\":" << json_number(r.p_even)
            << ",\"success_this_round\":" << json_number(r.success_this_round)
            << ",\"cumulative_success\":" << json_number(r.cumulative_success)
            << ",\"fidelity_to_target\":" << json_number(r.fidelity_to_target)
            << ",\"target_label\":\"" << r.target_label << "\"}";
    }
    out << "]";
    if (mode == RunMode::MonteCarlo) {
        out << ",\"empirical\":[";
        for (std::size_t k = 0; k < empirical.size(); ++k) {
            const auto& r = empirical[k];
            if (k) out << ",";
            out << "{\"j\":" << r.j << ",\"success_freq\":" << json_number(r.success_freq)
                << ",\"cumulative_freq\":" << json_number(r.cumulative_freq) << "}";
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

}  // namespace paritydistill
