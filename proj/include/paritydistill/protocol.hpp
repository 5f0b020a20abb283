#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paritydistill/channels.hpp"
#include "paritydistill/detector.hpp"

namespace paritydistill {

/// Parameters of the initial pure state a |Lup,Rdown> + b e^{i phi}
/// |Ldown,Rup| with b = sqrt(1 - a^2).
struct InitialStateParams {
    double a = 0.0;
    double phi = 0.0;  // stored reduced mod 2pi

    double b() const;
    void validate() const;
};

StateVector initial_state(const InitialStateParams& init, Statistics statistics);

enum class SchemeVariant { ResetDepolarize, ResetAmplitudeDamp, NonReset };

/// Serialized forms: "reset-dep" | "reset-ad" | "non-reset".
std::string to_string(SchemeVariant v);
std::optional<SchemeVariant> parse_scheme_variant(const std::string& s);

/// Configuration of one protocol variant.
///
/// Reset variants ignore the initial state and bath by construction (the
/// externally activated noise runs to its fixed point each round).
/// NonReset is single shot: one channel evolution, one beam splitter pass,
/// one parity measurement; max_iterations must be 1.
struct ProtocolScheme {
    SchemeVariant variant = SchemeVariant::ResetDepolarize;
    Statistics statistics = Statistics::Fermion;
    std::optional<ChannelKind> channel_kind;      // NonReset only
    std::optional<InitialStateParams> init;       // NonReset only
    std::optional<BathParams> bath;               // NonReset only
    std::optional<double> t;                      // NonReset only
    bool apply_pr_before_bs = false;  // forced true (mode L) for ResetAmplitudeDamp
    Parity target_parity = Parity::Even;
    int max_iterations = 1;

    static ProtocolScheme reset_depolarize(Statistics statistics, int iterations);
    static ProtocolScheme reset_amplitude_damp(Statistics statistics, Parity target, int iterations);
    static ProtocolScheme non_reset(ChannelKind kind, Statistics statistics, InitialStateParams init,
                                    BathParams bath, double t);
    /// The branch holding the maximally entangled target the figures plot:
    /// odd for bosons, even for fermions.
    static Parity default_target_parity(SchemeVariant variant, Statistics statistics);

    void validate() const;
};

struct IterationRecord {
    int j = 0;  // from 1
    double p_odd = 0.0;
    double p_even = 0.0;
    /// Unconditional probability that the first success happens at round j.
    double success_this_round = 0.0;
    double cumulative_success = 0.0;
    std::optional<DensityOperator> distilled_state;  // target-parity conditional
    double fidelity_to_target = 0.0;
    std::string target_label;
};

struct EmpiricalRecord {
    int j = 0;
    double success_freq = 0.0;
    double cumulative_freq = 0.0;
};

enum class RunMode { Exact, MonteCarlo };

struct RunSummary {
    ProtocolScheme scheme;
    RunMode mode = RunMode::Exact;
    std::optional<std::uint64_t> trials;  // MC only
    std::optional<std::uint64_t> seed;    // MC only
    std::string rng_name;                 // MC only
    std::vector<IterationRecord> iterations;
    std::vector<EmpiricalRecord> empirical;  // MC only

    /// JSON with probabilities printed to 15 significant digits;
    /// byte-identical across runs for identical inputs.
    std::string to_json() const;
};

/// Exact density-matrix branch recursion. Reset schemes iterate: the
/// non-target branch is re-entered (passing through the beam splitter
/// first whenever it has even-parity support, which maps it back into the
/// LR sector) and reset by the externally activated channel at p = 1.
RunSummary run_exact(const ProtocolScheme& scheme);

/// Stochastic realization: samples parity outcomes with the exact branch
/// probabilities using per-trial generator streams derived from the master
/// seed (splitmix64 sub-seeds feeding mt19937_64, uniforms from the top 53
/// bits), so results are reproducible and independent of any partitioning.
RunSummary run_monte_carlo(const ProtocolScheme& scheme, std::uint64_t trials, std::uint64_t seed);

struct BranchProbabilities {
    double odd = 0.0;
    double even = 0.0;
};

/// Closed-form branch probabilities for the single-shot non-reset process:
///   PD  boson: p_odd = 1/2 - (1-p) a b cos(phi), p_even the complement;
///   DEP boson: p_odd = 1/2 - p/4 - (1-p) a b cos(phi);
///   AD  boson: p_odd = (1-p)(1/2 - a b cos(phi));
/// fermionic values by the parity swap p_even(fer) = p_odd(bos) and
/// p_odd(fer) = p_even(bos).
BranchProbabilities closed_form_probability(ChannelKind kind, Statistics statistics, double a,
                                            double phi, double p);

/// Per-round branch probabilities of the reset schemes (constant in j):
/// depolarize 1/4 target / 3/4 rest, amplitude damp 1/2 each.
BranchProbabilities closed_form_reset_round(SchemeVariant variant, Statistics statistics);

/// Full post-beam-splitter density operator of the non-reset pipeline
/// (prepare psi0 -> evolve -> conjugate by the lifted BS).
DensityOperator post_bs_state(ChannelKind kind, Statistics statistics, double a, double phi,
                              double p);

/// Candidate distillation targets for a parity branch: the named states of
/// that class, plus the two-particle ground state (label "ground") for the
/// odd class. Returns the best label and its fidelity with rho.
std::pair<std::string, double> dominant_target(const DensityOperator& rho, Parity parity);

}  // namespace paritydistill
