#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paritydistill/protocol.hpp"

using namespace paritydistill;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;

Complex entry_between(const DensityOperator& rho, NamedLabel row, NamedLabel col) {
    Vector r = named_state(row, rho.statistics()).amplitudes();
    Vector c = named_state(col, rho.statistics()).amplitudes();
    return (r.adjoint() * rho.matrix() * c)(0);
}
}  // namespace

TEST_CASE("initial state") {
    StateVector psi = initial_state({kInvSqrt2, kPi}, Statistics::Fermion);
    // a = 1/sqrt(2), phi = pi is the Bell singlet.
    CHECK(std::norm(overlap(named_state(NamedLabel::OneMinusLR, Statistics::Fermion), psi)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    StateVector plus = initial_state({kInvSqrt2, 0.0}, Statistics::Fermion);
    CHECK(std::norm(overlap(named_state(NamedLabel::OnePlusLR, Statistics::Fermion), plus)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(initial_state({1.5, 0.0}, Statistics::Fermion), Error);

    // The scheme stores phi reduced into [0, 2pi).
    ProtocolScheme scheme = ProtocolScheme::non_reset(ChannelKind::PhaseDamping, Statistics::Boson,
                                                      {0.5, 2.0 * kPi + 1.0}, BathParams{}, 1.0);
    CHECK(scheme.init->phi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("depolarize-reset iteration closed form") {
    RunSummary summary = run_exact(ProtocolScheme::reset_depolarize(Statistics::Fermion, 12));
    REQUIRE(summary.iterations.size() == 12);
    double previous = 0.0;
    for (const auto& record : summary.iterations) {
        CHECK(record.p_even == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(record.p_odd == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(record.success_this_round ==
              doctest::Approx(0.25 * std::pow(0.75, record.j - 1)).epsilon(1e-12));
        CHECK(record.cumulative_success ==
              doctest::Approx(1.0 - std::pow(0.75, record.j)).epsilon(1e-12));
        CHECK(record.cumulative_success >= previous);
        previous = record.cumulative_success;
        CHECK(record.target_label == "1-NO");
        CHECK(record.fidelity_to_target == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(summary.iterations[1].cumulative_success == doctest::Approx(7.0 / 16.0).epsilon(1e-12));

    // Bosons target the odd singlet branch with the same round structure;
    // even-parity outcomes pass through the splitter again, so the round
    // never feeds the channel anything outside the LR sector.
    RunSummary boson = run_exact(ProtocolScheme::reset_depolarize(Statistics::Boson, 12));
    for (const auto& record : boson.iterations) {
        CHECK(record.p_odd == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(record.cumulative_success ==
              doctest::Approx(1.0 - std::pow(0.75, record.j)).epsilon(1e-12));
        CHECK(record.target_label == "1-LR");
        CHECK(record.fidelity_to_target == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("amplitude-damping reset iteration closed form") {
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        for (Parity target : {Parity::Even, Parity::Odd}) {
            RunSummary summary = run_exact(ProtocolScheme::reset_amplitude_damp(s, target, 12));
            for (const auto& record : summary.iterations) {
                CHECK(record.p_odd == doctest::Approx(0.5).epsilon(1e-12));
                CHECK(record.p_even == doctest::Approx(0.5).epsilon(1e-12));
                CHECK(record.cumulative_success ==
                      doctest::Approx(1.0 - std::pow(0.5, record.j)).epsilon(1e-12));
                REQUIRE(record.distilled_state);
                CHECK(purity(*record.distilled_state) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(record.fidelity_to_target == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    // Fermion odd branch distills the triplet.
    RunSummary odd = run_exact(
        ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, Parity::Odd, 1));
    CHECK(odd.iterations.front().target_label == "1+LR");
}

TEST_CASE("non-reset is single shot") {
    ProtocolScheme scheme = ProtocolScheme::non_reset(ChannelKind::PhaseDamping, Statistics::Boson,
                                                      {0.0, 1.3}, BathParams{1.0, 1.0, 1.0}, 2.0);
    RunSummary summary = run_exact(scheme);
    REQUIRE(summary.iterations.size() == 1);
    // Separable initial states split evenly, independent of time.
    CHECK(summary.iterations.front().p_odd == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(summary.iterations.front().p_even == doctest::Approx(0.5).epsilon(1e-12));

    scheme.max_iterations = 3;
    CHECK_THROWS_AS(run_exact(scheme), Error);
}

TEST_CASE("scheme validation") {
    ProtocolScheme bad = ProtocolScheme::reset_depolarize(Statistics::Fermion, 5);
    bad.target_parity = Parity::Odd;  // the depolarizing reset pins the target
    CHECK_THROWS_AS(run_exact(bad), Error);

    ProtocolScheme no_pr = ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, Parity::Even, 5);
    no_pr.apply_pr_before_bs = false;
    CHECK_THROWS_AS(run_exact(no_pr), Error);

    ProtocolScheme stray = ProtocolScheme::reset_depolarize(Statistics::Fermion, 5);
    stray.channel_kind = ChannelKind::PhaseDamping;
    CHECK_THROWS_AS(run_exact(stray), Error);
}

TEST_CASE("closed-form probabilities") {
    // Bell singlet maximizes the bosonic even branch under phase damping.
    for (double p : {0.0, 0.3, 1.0}) {
        BranchProbabilities b =
            closed_form_probability(ChannelKind::PhaseDamping, Statistics::Boson, kInvSqrt2, kPi, p);
        CHECK(b.odd == doctest::Approx(0.5 + (1.0 - p) / 2.0).epsilon(1e-12));
        CHECK(b.odd + b.even == doctest::Approx(1.0).epsilon(1e-12));
    }
    // phi = pi/2 removes the initial-state dependence for depolarization.
    for (double a : {0.0, 0.4, 0.9}) {
        BranchProbabilities b =
            closed_form_probability(ChannelKind::Depolarizing, Statistics::Boson, a, kPi / 2, 0.6);
        CHECK(b.odd == doctest::Approx(0.5 - 0.6 / 4.0).epsilon(1e-12));
    }
    CHECK(closed_form_probability(ChannelKind::AmplitudeDamping, Statistics::Boson, kInvSqrt2, 0.0, 1.0).odd ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(closed_form_probability(ChannelKind::PhaseDamping, Statistics::Boson, 2.0, 0.0, 0.5),
                    Error);
    CHECK_THROWS_AS(closed_form_probability(ChannelKind::PhaseDamping, Statistics::Boson, 0.5, 0.0, 1.5),
                    InvalidProbability);

    BranchProbabilities dep_round = closed_form_reset_round(SchemeVariant::ResetDepolarize, Statistics::Fermion);
    CHECK(dep_round.even == doctest::Approx(0.25));
    CHECK(closed_form_reset_round(SchemeVariant::ResetAmplitudeDamp, Statistics::Boson).odd ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(closed_form_reset_round(SchemeVariant::NonReset, Statistics::Boson), Error);
}

TEST_CASE("post-BS state reproduces the displayed phase-damping matrix") {
    const double a = 0.6, phi = 0.9, p = 0.37;
    const double b = std::sqrt(1.0 - a * a);
    DensityOperator rho = post_bs_state(ChannelKind::PhaseDamping, Statistics::Boson, a, phi, p);

    Complex no_no = entry_between(rho, NamedLabel::OneMinusNO, NamedLabel::OneMinusNO);
    Complex lr_lr = entry_between(rho, NamedLabel::OneMinusLR, NamedLabel::OneMinusLR);
    Complex no_lr = entry_between(rho, NamedLabel::OneMinusNO, NamedLabel::OneMinusLR);
    CHECK(std::abs(no_no - Complex(0.5 + (1 - p) * a * b * std::cos(phi))) <= 1e-12);
    CHECK(std::abs(lr_lr - Complex(0.5 - (1 - p) * a * b * std::cos(phi))) <= 1e-12);
    CHECK(std::abs(no_lr - Complex(0.5 - a * a, -(1 - p) * a * b * std::sin(phi))) <= 1e-12);

    // Fermionic counterpart swaps the Bell component onto the triplet.
    DensityOperator rho_f = post_bs_state(ChannelKind::PhaseDamping, Statistics::Fermion, a, phi, p);
    Complex plus_plus = entry_between(rho_f, NamedLabel::OnePlusLR, NamedLabel::OnePlusLR);
    CHECK(std::abs(plus_plus - Complex(0.5 + (1 - p) * a * b * std::cos(phi))) <= 1e-12);
}

TEST_CASE("post-BS limits") {
    // Full depolarizing disturbance reproduces the reset-round split.
    DensityOperator dep = post_bs_state(ChannelKind::Depolarizing, Statistics::Fermion, 0.8, 1.2, 1.0);
    Complex noon = entry_between(dep, NamedLabel::OneMinusNO, NamedLabel::OneMinusNO);
    CHECK(std::abs(noon - Complex(0.25)) <= 1e-12);

    // Full amplitude damping: bosons bunch into |D->, fermions stay in the
    // (unentangled) ground state.
    DensityOperator ad_b = post_bs_state(ChannelKind::AmplitudeDamping, Statistics::Boson, 0.8, 1.2, 1.0);
    CHECK(fidelity_with_pure(ad_b, named_state(NamedLabel::DMinusNO, Statistics::Boson)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    DensityOperator ad_f = post_bs_state(ChannelKind::AmplitudeDamping, Statistics::Fermion, 0.8, 1.2, 1.0);
    CHECK(fidelity_with_pure(ad_f, product_state(kLDown, kRDown, Statistics::Fermion)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dominant target labels") {
    DensityOperator ad_f = post_bs_state(ChannelKind::AmplitudeDamping, Statistics::Fermion, 0.8, 1.2, 1.0);
    auto [label, f] = dominant_target(ad_f, Parity::Odd);
    CHECK(label == "ground");
    CHECK(f == doctest::Approx(1.0).epsilon(1e-12));

    DensityOperator pd_b = post_bs_state(ChannelKind::PhaseDamping, Statistics::Boson, kInvSqrt2, kPi, 0.2);
    ParityMeasurement m = parity_measure(pd_b);
    auto [odd_label, odd_f] = dominant_target(*m.odd.conditional, Parity::Odd);
    CHECK(odd_label == "1-LR");
    CHECK(odd_f == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Monte Carlo sampling") {
    ProtocolScheme scheme = ProtocolScheme::reset_depolarize(Statistics::Fermion, 8);
    RunSummary exact = run_exact(scheme);
    RunSummary mc = run_monte_carlo(scheme, 100000, 20240817);
    REQUIRE(mc.trials == 100000);
    REQUIRE(mc.empirical.size() == exact.iterations.size());
    for (std::size_t j = 0; j < mc.empirical.size(); ++j) {
        double expected = exact.iterations[j].success_this_round;
        double sigma = std::sqrt(expected * (1.0 - expected) / 100000.0);
        CHECK(std::abs(mc.empirical[j].success_freq - expected) <= 3.0 * sigma);
    }
    CHECK(mc.rng_name == "splitmix64/mt19937_64");

    // Reproducible for a fixed seed, including a single trajectory.
    CHECK(run_monte_carlo(scheme, 1, 9).to_json() == run_monte_carlo(scheme, 1, 9).to_json());
    CHECK(run_monte_carlo(scheme, 1000, 9).to_json() == run_monte_carlo(scheme, 1000, 9).to_json());

    // Full amplitude-damping disturbance: odd parity certain for fermions.
    ProtocolScheme ad = ProtocolScheme::non_reset(ChannelKind::AmplitudeDamping, Statistics::Fermion,
                                                  {kInvSqrt2, 0.0}, BathParams{1.0, 1.0, 1.0},
                                                  3 * kPi / 2);
    ad.target_parity = Parity::Odd;
    RunSummary ad_mc = run_monte_carlo(ad, 2000, 1);
    CHECK(ad_mc.empirical.front().success_freq == doctest::Approx(1.0));
}

TEST_CASE("run summary JSON shape") {
    RunSummary summary = run_exact(ProtocolScheme::reset_depolarize(Statistics::Fermion, 2));
    std::string json = summary.to_json();
    CHECK(json.find("\"variant\":\"reset-dep\"") != std::string::npos);
    CHECK(json.find("\"statistics\":\"fermion\"") != std::string::npos);
    CHECK(json.find("\"target_parity\":\"even\"") != std::string::npos);
    CHECK(json.find("\"iterations\":[{\"j\":1") != std::string::npos);
    CHECK(json.find("\"target_label\":\"1-NO\"") != std::string::npos);
    CHECK(json == run_exact(ProtocolScheme::reset_depolarize(Statistics::Fermion, 2)).to_json());

    RunSummary mc = run_monte_carlo(ProtocolScheme::reset_depolarize(Statistics::Fermion, 2), 10, 3);
    std::string mc_json = mc.to_json();
    CHECK(mc_json.find("\"mode\":\"mc\"") != std::string::npos);
    CHECK(mc_json.find("\"trials\":10") != std::string::npos);
    CHECK(mc_json.find("\"seed\":3") != std::string::npos);
    CHECK(mc_json.find("\"rng\":\"splitmix64/mt19937_64\"") != std::string::npos);
    CHECK(mc_json.find("\"empirical\":[") != std::string::npos);
}
