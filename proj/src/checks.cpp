#include "paritydistill/checks.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "paritydistill/channels.hpp"
#include "paritydistill/detector.hpp"
#include "paritydistill/elements.hpp"
#include "paritydistill/fock.hpp"
#include "paritydistill/oracle.hpp"
#include "paritydistill/po_equiv.hpp"
#include "paritydistill/protocol.hpp"
#include "paritydistill/sweep.hpp"

namespace paritydistill::checks {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr std::uint64_t kCorpusSeed = 0x9D1577AUL;  // fixed seed of the random corpora
constexpr std::uint64_t kMcSeed = 42;               // fixed seed of the Monte Carlo checks

const std::vector<Statistics> kBoth{Statistics::Boson, Statistics::Fermion};
const std::vector<ChannelKind> kKinds{ChannelKind::PhaseDamping, ChannelKind::Depolarizing,
                                      ChannelKind::AmplitudeDamping};
const std::vector<double> kAGrid{0.0, 0.3, kInvSqrt2, 0.9, 1.0};
const std::vector<double> kPhiGrid{0.0, kPi / 2, kPi, 3 * kPi / 2};
const std::vector<double> kPGrid{0.0, 0.3, 0.7, 1.0};
const std::vector<double> kPFive{0.0, 0.25, 0.5, 0.75, 1.0};

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }
    /// Pass when worst <= bound; detail records both.
    void check_le(const std::string& name, double worst, double bound) {
        std::ostringstream detail;
        detail << "worst " << format_double(worst) << ", bound " << format_double(bound);
        check(name, worst <= bound, detail.str());
    }
};

Vector named_amps(NamedLabel label, Statistics statistics) {
    return named_state(label, statistics).amplitudes();
}

/// Random density operator supported on the LR subspace.
DensityOperator random_lr_density(Statistics statistics, std::mt19937_64& rng) {
    const auto& basis = sector_basis(statistics);
    std::vector<int> lr;
    for (int i = 0; i < basis.dim(); ++i)
        if (basis.states[i].parity_class() == ParityClass::LR) lr.push_back(i);
    Matrix small = random_density(static_cast<int>(lr.size()), rng);
    Matrix full = Matrix::Zero(basis.dim(), basis.dim());
    for (std::size_t r = 0; r < lr.size(); ++r)
        for (std::size_t c = 0; c < lr.size(); ++c) full(lr[r], lr[c]) = small(r, c);
    return DensityOperator(statistics, std::move(full));
}

/// Random density operator of the anti-parallel family: populations and
/// coherence on {up-down, down-up} only.
DensityOperator random_antiparallel_density(Statistics statistics, std::mt19937_64& rng) {
    Matrix small = random_density(2, rng);
    Vector u = product_state(kLUp, kRDown, statistics).amplitudes();
    Vector v = product_state(kLDown, kRUp, statistics).amplitudes();
    Matrix full = small(0, 0) * u * u.adjoint() + small(0, 1) * u * v.adjoint() +
                  small(1, 0) * v * u.adjoint() + small(1, 1) * v * v.adjoint();
    return DensityOperator(statistics, std::move(full));
}

struct BsArrow {
    NamedLabel from;
    std::vector<std::pair<NamedLabel, double>> to;
};

std::vector<BsArrow> bs_table(Statistics statistics) {
    using L = NamedLabel;
    if (statistics == Statistics::Fermion)
        return {{L::OneMinusLR, {{L::OneMinusNO, 1.0}}},
                {L::OnePlusLR, {{L::OnePlusLR, -1.0}}},
                {L::TwoMinusLR, {{L::TwoMinusLR, -1.0}}},
                {L::TwoPlusLR, {{L::TwoPlusLR, -1.0}}}};
    return {{L::OneMinusLR, {{L::OneMinusLR, -1.0}}},
            {L::OnePlusLR, {{L::OneMinusNO, 1.0}}},
            {L::TwoMinusLR, {{L::UMinusNO, kInvSqrt2}, {L::DMinusNO, -kInvSqrt2}}},
            {L::TwoPlusLR, {{L::UMinusNO, kInvSqrt2}, {L::DMinusNO, kInvSqrt2}}}};
}

/// Worst entrywise deviation of the beam-splitter action tables, both
/// directions (the action is an involution).
double bs_table_defect(Statistics statistics) {
    const LiftedOperator bs = lift(ElementSpec::bs(), statistics);
    double worst = 0.0;
    for (const auto& arrow : bs_table(statistics)) {
        Vector from = named_amps(arrow.from, statistics);
        Vector expected = Vector::Zero(from.size());
        for (const auto& [label, coeff] : arrow.to) expected += coeff * named_amps(label, statistics);
        worst = std::max(worst, (bs.matrix * from - expected).cwiseAbs().maxCoeff());
        worst = std::max(worst, (bs.matrix * expected - from).cwiseAbs().maxCoeff());
    }
    return worst;
}

/// Expected post-BS state of the fermionic depolarizing reset: the pure
/// even NOON component at weight 1/4 plus the uniform odd triple at 3/4.
Matrix fermion_reset_dep_expected() {
    const Statistics f = Statistics::Fermion;
    Vector no = named_amps(NamedLabel::OneMinusNO, f);
    Matrix rho = 0.25 * no * no.adjoint();
    for (NamedLabel label : {NamedLabel::OnePlusLR, NamedLabel::TwoPlusLR, NamedLabel::TwoMinusLR}) {
        Vector v = named_amps(label, f);
        rho += 0.25 * v * v.adjoint();
    }
    return rho;
}

std::vector<ElementSpec> default_generator_specs() {
    return generator_specs(default_thetas());
}

double oracle_agreement_defect(Statistics statistics) {
    double worst = 0.0;
    for (const auto& spec : default_generator_specs()) {
        SingleParticleUnitary u = element_unitary(spec);
        worst = std::max(worst, max_abs_diff(lift(u, statistics).matrix, oracle::lift_oracle(u, statistics)));
    }
    std::mt19937_64 rng(kCorpusSeed);
    for (int k = 0; k < 20; ++k) {
        SingleParticleUnitary u{random_unitary(4, rng), "random"};
        worst = std::max(worst, max_abs_diff(lift(u, statistics).matrix, oracle::lift_oracle(u, statistics)));
    }
    return worst;
}

double oracle_leakage_worst(Statistics statistics) {
    double worst = 0.0;
    for (const auto& spec : default_generator_specs())
        worst = std::max(worst, oracle::symmetry_leakage(element_unitary(spec), statistics));
    std::mt19937_64 rng(kCorpusSeed);
    for (int k = 0; k < 20; ++k)
        worst = std::max(worst, oracle::symmetry_leakage({random_unitary(4, rng), "random"}, statistics));
    return worst;
}

/// Independent textbook evaluation of the disturbance probability,
/// branching on the sign of d^2 the way the formula is usually written.
double disturbance_reference(double gamma, double lambda, double t) {
    double d2 = 2.0 * gamma * lambda - lambda * lambda;
    double bracket;
    if (d2 > 0) {
        double d = std::sqrt(d2);
        bracket = std::cos(d * t / 2) + lambda / d * std::sin(d * t / 2);
    } else if (d2 < 0) {
        double d = std::sqrt(-d2);
        bracket = std::cosh(d * t / 2) + lambda / d * std::sinh(d * t / 2);
    } else {
        bracket = 1.0 + lambda * t / 2;
    }
    return 1.0 - std::exp(-lambda * t) * bracket * bracket;
}

}  // namespace

std::vector<CheckResult> fock_invariants() {
    Suite suite;
    suite.check("fock.basis_lengths", sector_basis(Statistics::Boson).dim() == 10 &&
                                          sector_basis(Statistics::Fermion).dim() == 6);
    bool deterministic = true;
    for (Statistics s : kBoth)
        deterministic = deterministic && enumerate_basis(s).states == sector_basis(s).states;
    suite.check("fock.basis_deterministic", deterministic);

    bool pauli = true;
    for (const auto& state : sector_basis(Statistics::Fermion).states)
        for (int n : state.occupancy) pauli = pauli && n <= 1;
    suite.check("fock.fermion_basis_pauli", pauli);

    double worst_norm = 0.0;
    bool support_ok = true;
    for (Statistics s : kBoth) {
        for (NamedLabel label : named_labels(s)) {
            StateVector psi = named_state(label, s);
            worst_norm = std::max(worst_norm, std::abs(psi.amplitudes().norm() - 1.0));
            support_ok = support_ok && psi.supported_in(parity_class_of(label));
        }
    }
    suite.check_le("fock.named_state_norms", worst_norm, kTol);
    suite.check("fock.named_state_parity_support", support_ok);

    double worst_gram = 0.0;
    for (Statistics s : kBoth) {
        auto labels = named_labels(s);
        const int n = static_cast<int>(labels.size());
        Matrix gram(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                gram(r, c) = overlap(named_state(labels[r], s), named_state(labels[c], s));
        worst_gram = std::max(worst_gram, max_abs_diff(gram, Matrix::Identity(n, n)));
    }
    suite.check_le("fock.named_states_orthonormal", worst_gram, kTol);

    double worst_proj = 0.0;
    for (Statistics s : kBoth) {
        Matrix lr = parity_projector(ParityClass::LR, s);
        Matrix no = parity_projector(ParityClass::NO, s);
        Matrix id = Matrix::Identity(lr.rows(), lr.cols());
        worst_proj = std::max({worst_proj, max_abs_diff(lr + no, id), max_abs_diff(lr * lr, lr),
                               max_abs_diff(no * no, no), (lr * no).cwiseAbs().maxCoeff()});
    }
    suite.check_le("fock.projector_algebra", worst_proj, kTol);

    double worst_anti = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            Vector lhs = product_state(ModeIndex::from_linear(a), ModeIndex::from_linear(b),
                                       Statistics::Fermion)
                             .amplitudes();
            Vector rhs = product_state(ModeIndex::from_linear(b), ModeIndex::from_linear(a),
                                       Statistics::Fermion)
                             .amplitudes();
            worst_anti = std::max(worst_anti, (lhs + rhs).cwiseAbs().maxCoeff());
        }
    }
    suite.check_le("fock.product_state_antisymmetry", worst_anti, kTol);

    StateVector singlet = named_state(NamedLabel::OneMinusLR, Statistics::Fermion);
    suite.check_le("fock.pure_mixture_purity",
                   std::abs(purity(mixture({1.0}, {singlet})) - 1.0), kTol);
    DensityOperator rho_dep = reset_depolarize(Statistics::Fermion);
    suite.check_le("fock.fidelity_self", std::abs(fidelity(rho_dep, rho_dep) - 1.0), kTol);
    suite.check_le("fock.fidelity_projector_quarter",
                   std::abs(fidelity(rho_dep, DensityOperator::pure(singlet)) - 0.25), kTol);
    return suite.results;
}

std::vector<CheckResult> elements_invariants() {
    Suite suite;
    double worst_unitary = 0.0;
    for (Statistics s : kBoth)
        for (const auto& spec : default_generator_specs())
            worst_unitary = std::max(worst_unitary, unitarity_defect(lift(spec, s).matrix));
    suite.check_le("elements.lifted_generators_unitary", worst_unitary, kTol);

    suite.check_le("elements.bs_table_fermion", bs_table_defect(Statistics::Fermion), kTol);
    suite.check_le("elements.bs_table_boson", bs_table_defect(Statistics::Boson), kTol);

    double worst_involution = 0.0;
    for (Statistics s : kBoth) {
        const LiftedOperator bs = lift(ElementSpec::bs(), s);
        for (int col = 0; col < bs.dim(); ++col) {
            Vector start = Vector::Zero(bs.dim());
            start(col) = 1.0;
            Vector twice = bs.matrix * (bs.matrix * start);
            if (!equal_up_to_phase(twice, start, kTol))
                worst_involution = std::max(worst_involution, 1.0);
        }
    }
    suite.check("elements.bs_involution_up_to_phase", worst_involution == 0.0);

    suite.check_le("elements.oracle_agreement_fermion", oracle_agreement_defect(Statistics::Fermion), 1e-10);
    suite.check_le("elements.oracle_agreement_boson", oracle_agreement_defect(Statistics::Boson), 1e-10);

    // Among the Bell states, exactly the singlet changes parity class under
    // the fermionic splitter and exactly the singlet preserves it under the
    // bosonic one.
    bool parity_property = true;
    for (Statistics s : kBoth) {
        const LiftedOperator bs = lift(ElementSpec::bs(), s);
        for (NamedLabel label : {NamedLabel::OneMinusLR, NamedLabel::OnePlusLR, NamedLabel::TwoMinusLR,
                                 NamedLabel::TwoPlusLR}) {
            StateVector image(s, bs.matrix * named_amps(label, s));
            bool changes = image.supported_in(ParityClass::NO);
            bool stays = image.supported_in(ParityClass::LR);
            parity_property = parity_property && (changes || stays);
            bool is_singlet = label == NamedLabel::OneMinusLR;
            if (s == Statistics::Fermion)
                parity_property = parity_property && (changes == is_singlet);
            else
                parity_property = parity_property && (stays == is_singlet);
        }
    }
    suite.check("elements.singlet_parity_property", parity_property);

    double worst_simple = 0.0;
    for (Statistics s : kBoth) {
        const int dim = sector_basis(s).dim();
        worst_simple = std::max(worst_simple,
                                max_abs_diff(lift(ElementSpec::pips(0.0, Spatial::L), s).matrix,
                                             Matrix::Identity(dim, dim)));
        Matrix pr = lift(ElementSpec::pr(Spatial::L), s).matrix;
        worst_simple = std::max(worst_simple, max_abs_diff(pr * pr, Matrix::Identity(dim, dim)));
        Matrix pbs = lift(ElementSpec::pbs(), s).matrix;
        worst_simple = std::max(worst_simple, max_abs_diff(pbs * pbs, Matrix::Identity(dim, dim)));
    }
    suite.check_le("elements.simple_element_identities", worst_simple, kTol);
    return suite.results;
}

std::vector<CheckResult> channels_invariants() {
    Suite suite;
    BathParams unit{1.0, 1.0, 1.0};
    suite.check_le("channels.spectral_density_peak",
                   std::abs(spectral_density(unit, 1.0) - 1.0 / (2 * kPi)), kTol);
    suite.check_le("channels.spectral_density_half_width",
                   std::abs(spectral_density(unit, 1.0 + 1.0) - 1.0 / (4 * kPi)), kTol);

    bool in_range = true;
    for (auto [gamma, lambda] : {std::pair{1.0, 1.0}, {1.0, 5.0}, {5.0, 1.0}}) {
        BathParams bath{gamma, lambda, 1.0};
        for (int k = 0; k <= 2000; ++k) {
            double p = disturbance_probability(bath, 20.0 * k / 2000.0);
            in_range = in_range && p >= 0.0 && p <= 1.0;
        }
        in_range = in_range && disturbance_probability(bath, 0.0) == 0.0;
    }
    suite.check("channels.disturbance_in_range", in_range);

    suite.check_le("channels.disturbance_unit_peak",
                   std::abs(disturbance_probability(unit, 3 * kPi / 2) - 1.0), kTol);
    // Non-monotone in the strong-coupling regime: full disturbance at
    // 3 pi/2 followed by backflow. The dip at 5 pi/2 is 2 e^{-5 pi/2},
    // about 7.8e-4.
    suite.check("channels.disturbance_non_monotone",
                disturbance_probability(unit, 2.5 * kPi) < 1.0 - 5e-4);

    double worst_branch = 0.0;
    for (double delta : {1e-6, 1e-9, 0.0, -1e-9, -1e-6}) {
        BathParams bath{0.5 + delta, 1.0, 1.0};
        BathParams crit{0.5, 1.0, 1.0};
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            // Agreement with the textbook per-branch formulas, and
            // one-sided limits onto the critical point.
            worst_branch = std::max(worst_branch, std::abs(disturbance_probability(bath, t) -
                                                           disturbance_reference(bath.gamma, bath.lambda, t)));
            if (std::abs(delta) <= 1e-9)
                worst_branch = std::max(worst_branch, std::abs(disturbance_probability(bath, t) -
                                                               disturbance_probability(crit, t)));
        }
    }
    suite.check_le("channels.disturbance_branch_agreement", worst_branch, 1e-9);

    std::mt19937_64 rng(kCorpusSeed);
    double worst_trace = 0.0, worst_herm = 0.0, min_eig = 0.0, worst_identity = 0.0;
    for (Statistics s : kBoth) {
        for (ChannelKind kind : kKinds) {
            for (double p : kPFive) {
                for (int k = 0; k < 50; ++k) {
                    DensityOperator rho = random_lr_density(s, rng);
                    DensityOperator out = evolve(kind, rho, p);
                    worst_trace = std::max(worst_trace, std::abs(out.matrix().trace().real() - 1.0));
                    worst_herm = std::max(worst_herm, max_abs_diff(out.matrix(), out.matrix().adjoint()));
                    min_eig = std::min(min_eig, out.min_eigenvalue());
                    if (p == 0.0)
                        worst_identity = std::max(worst_identity, max_abs_diff(out.matrix(), rho.matrix()));
                }
            }
        }
    }
    suite.check_le("channels.evolve_trace_preserving", worst_trace, kTol);
    suite.check_le("channels.evolve_hermitian", worst_herm, kTol);
    suite.check("channels.evolve_positive", min_eig >= -kTol,
                "min eigenvalue " + format_double(min_eig));
    suite.check_le("channels.evolve_p0_identity", worst_identity, kTol);

    double worst_complete = 0.0;
    for (ChannelKind kind : kKinds) {
        for (double p : kPFive) {
            KrausSet set = local_kraus(kind, p);
            Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
            for (const auto& k : set.ops) sum += k.adjoint() * k;
            worst_complete = std::max(worst_complete,
                                      (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
        }
    }
    suite.check_le("channels.kraus_completeness", worst_complete, kTol);

    double worst_pd_pair = 0.0, worst_ad_pair = 0.0;
    for (Statistics s : kBoth) {
        for (double p : kPFive) {
            for (int k = 0; k < 10; ++k) {
                DensityOperator anti = random_antiparallel_density(s, rng);
                worst_pd_pair = std::max(
                    worst_pd_pair,
                    max_abs_diff(apply_local_pair(local_kraus(ChannelKind::PhaseDamping, p), anti).matrix(),
                                 evolve(ChannelKind::PhaseDamping, anti, p).matrix()));
                DensityOperator lr = random_lr_density(s, rng);
                worst_ad_pair = std::max(
                    worst_ad_pair,
                    max_abs_diff(apply_local_pair(local_kraus(ChannelKind::AmplitudeDamping, p), lr).matrix(),
                                 evolve(ChannelKind::AmplitudeDamping, lr, p).matrix()));
            }
        }
    }
    suite.check_le("channels.pd_pair_matches_evolve_antiparallel", worst_pd_pair, kTol);
    suite.check_le("channels.ad_pair_matches_evolve_lr", worst_ad_pair, kTol);

    // The Werner map coincides with the local twirl pair exactly when the
    // single-qubit marginals are maximally mixed, and measurably departs
    // otherwise; both facts are part of the contract.
    double worst_dep_equal = 0.0;
    for (Statistics s : kBoth) {
        for (double phi : kPhiGrid) {
            for (double p : kPFive) {
                DensityOperator rho0 = DensityOperator::pure(initial_state({kInvSqrt2, phi}, s));
                worst_dep_equal = std::max(
                    worst_dep_equal,
                    max_abs_diff(apply_local_pair(local_kraus(ChannelKind::Depolarizing, p), rho0).matrix(),
                                 evolve(ChannelKind::Depolarizing, rho0, p).matrix()));
            }
        }
    }
    suite.check_le("channels.dep_twirl_matches_at_balanced_a", worst_dep_equal, kTol);
    DensityOperator skew = DensityOperator::pure(initial_state({0.9, 0.0}, Statistics::Fermion));
    double dep_gap =
        max_abs_diff(apply_local_pair(local_kraus(ChannelKind::Depolarizing, 0.5), skew).matrix(),
                     evolve(ChannelKind::Depolarizing, skew, 0.5).matrix());
    suite.check("channels.dep_twirl_gap_documented", dep_gap >= 1e-3,
                "gap " + format_double(dep_gap));

    double worst_reset = 0.0;
    for (Statistics s : kBoth) {
        DensityOperator rho = random_lr_density(s, rng);
        worst_reset = std::max(worst_reset, max_abs_diff(reset_depolarize(s).matrix(),
                                                         evolve(ChannelKind::Depolarizing, rho, 1.0).matrix()));
        worst_reset = std::max(worst_reset, max_abs_diff(reset_amplitude_damp(s).matrix(),
                                                         evolve(ChannelKind::AmplitudeDamping, rho, 1.0).matrix()));
        worst_reset = std::max(worst_reset, std::abs(purity(reset_depolarize(s)) - 0.25));
        worst_reset = std::max(
            worst_reset, std::abs(fidelity_with_pure(reset_amplitude_damp(s),
                                                     product_state(kLDown, kRDown, s)) -
                                  1.0));
    }
    suite.check_le("channels.reset_fixed_points", worst_reset, kTol);
    return suite.results;
}

std::vector<CheckResult> detector_invariants() {
    Suite suite;
    std::mt19937_64 rng(kCorpusSeed);
    double worst_sum = 0.0, worst_cond = 0.0;
    bool idempotent = true;
    for (Statistics s : kBoth) {
        for (int k = 0; k < 20; ++k) {
            DensityOperator rho(s, random_density(sector_basis(s).dim(), rng));
            ParityMeasurement m = parity_measure(rho);
            worst_sum = std::max(worst_sum, std::abs(m.odd.probability + m.even.probability - 1.0));
            for (const ParityOutcome* outcome : {&m.odd, &m.even}) {
                if (!outcome->conditional) continue;
                const DensityOperator& cond = *outcome->conditional;
                worst_cond = std::max(worst_cond, std::abs(cond.matrix().trace().real() - 1.0));
                worst_cond = std::max(worst_cond, cond.support_outside(parity_class_of(outcome->parity)));
                ParityMeasurement again = parity_measure(cond);
                idempotent = idempotent &&
                             std::abs(again.branch(outcome->parity).probability - 1.0) <= kTol;
            }
        }
    }
    suite.check_le("detector.branch_probabilities_sum", worst_sum, kTol);
    suite.check_le("detector.conditionals_valid", worst_cond, kTol);
    suite.check("detector.branchwise_idempotent", idempotent);

    DensityOperator singlet = DensityOperator::pure(named_state(NamedLabel::OneMinusLR, Statistics::Fermion));
    ParityMeasurement m = parity_measure(singlet);
    suite.check("detector.pure_lr_state_odd",
                std::abs(m.odd.probability - 1.0) <= kTol && m.even.probability <= kZeroProb &&
                    !m.even.conditional);

    auto [p_coin, cond_coin] = coincidence_postselect(singlet);
    suite.check("detector.coincidence_alias",
                std::abs(p_coin - m.odd.probability) <= kTol && cond_coin.has_value());
    DensityOperator noon = DensityOperator::pure(named_state(NamedLabel::OneMinusNO, Statistics::Fermion));
    auto [p_none, cond_none] = coincidence_postselect(noon);
    suite.check("detector.coincidence_even_state_absent", p_none <= kZeroProb && !cond_none);
    return suite.results;
}

std::vector<CheckResult> protocol_invariants() {
    Suite suite;

    double worst_grid = 0.0, worst_swap = 0.0;
    for (ChannelKind kind : kKinds) {
        for (Statistics s : kBoth) {
            for (double a : kAGrid) {
                for (double phi : kPhiGrid) {
                    for (double p : kPGrid) {
                        ParityMeasurement m = parity_measure(post_bs_state(kind, s, a, phi, p));
                        BranchProbabilities closed = closed_form_probability(kind, s, a, phi, p);
                        worst_grid = std::max({worst_grid, std::abs(m.odd.probability - closed.odd),
                                               std::abs(m.even.probability - closed.even)});
                        if (s == Statistics::Boson) {
                            ParityMeasurement swapped =
                                parity_measure(post_bs_state(kind, Statistics::Fermion, a, phi, p));
                            worst_swap = std::max({worst_swap,
                                                   std::abs(m.odd.probability - swapped.even.probability),
                                                   std::abs(m.even.probability - swapped.odd.probability)});
                        }
                    }
                }
            }
        }
    }
    suite.check_le("protocol.closed_form_grid", worst_grid, kTol);
    suite.check_le("protocol.parity_swap_symmetry", worst_swap, kTol);

    double worst_resets = 0.0;
    RunSummary dep = run_exact(ProtocolScheme::reset_depolarize(Statistics::Fermion, 30));
    for (const auto& record : dep.iterations)
        worst_resets = std::max(worst_resets, std::abs(record.cumulative_success -
                                                       (1.0 - std::pow(0.75, record.j))));
    for (Parity target : {Parity::Even, Parity::Odd}) {
        RunSummary ad = run_exact(
            ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, target, 30));
        for (const auto& record : ad.iterations)
            worst_resets = std::max(worst_resets, std::abs(record.cumulative_success -
                                                           (1.0 - std::pow(0.5, record.j))));
    }
    RunSummary dep_boson = run_exact(ProtocolScheme::reset_depolarize(Statistics::Boson, 30));
    for (const auto& record : dep_boson.iterations)
        worst_resets = std::max(worst_resets, std::abs(record.cumulative_success -
                                                       (1.0 - std::pow(0.75, record.j))));
    suite.check_le("protocol.reset_cumulative_closed_forms", worst_resets, kTol);

    // Purity of terminal distilled states wherever the protocol promises a
    // pure branch.
    double worst_purity = 0.0;
    for (Statistics s : kBoth) {
        RunSummary reset_dep = run_exact(ProtocolScheme::reset_depolarize(s, 1));
        worst_purity = std::max(worst_purity,
                                std::abs(purity(*reset_dep.iterations.front().distilled_state) - 1.0));
        for (Parity target : {Parity::Even, Parity::Odd}) {
            RunSummary reset_ad = run_exact(ProtocolScheme::reset_amplitude_damp(s, target, 1));
            worst_purity = std::max(worst_purity,
                                    std::abs(purity(*reset_ad.iterations.front().distilled_state) - 1.0));
        }
        for (double a : kAGrid) {
            for (double phi : kPhiGrid) {
                for (double p : kPGrid) {
                    // Phase damping: both branches pure whenever present.
                    ParityMeasurement m = parity_measure(post_bs_state(ChannelKind::PhaseDamping, s, a, phi, p));
                    for (const ParityOutcome* o : {&m.odd, &m.even})
                        if (o->conditional)
                            worst_purity = std::max(worst_purity, std::abs(purity(*o->conditional) - 1.0));
                    // Depolarizing / amplitude damping: the branch holding
                    // the BS-transformed singlet is pure.
                    for (ChannelKind kind : {ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
                        ParityMeasurement md = parity_measure(post_bs_state(kind, s, a, phi, p));
                        const ParityOutcome& pure_branch =
                            s == Statistics::Boson ? md.odd : md.even;
                        if (kind == ChannelKind::AmplitudeDamping && p == 1.0) continue;
                        if (pure_branch.conditional)
                            worst_purity =
                                std::max(worst_purity, std::abs(purity(*pure_branch.conditional) - 1.0));
                    }
                }
            }
        }
    }
    suite.check_le("protocol.pure_branches", worst_purity, kTol);

    double worst_dep_limit = 0.0;
    for (double a : kAGrid)
        for (double phi : kPhiGrid) {
            worst_dep_limit = std::max(
                worst_dep_limit,
                std::abs(closed_form_probability(ChannelKind::Depolarizing, Statistics::Boson, a, phi, 1.0).odd -
                         0.25));
            worst_dep_limit = std::max(
                worst_dep_limit,
                std::abs(
                    closed_form_probability(ChannelKind::Depolarizing, Statistics::Fermion, a, phi, 1.0).even -
                    0.25));
        }
    suite.check_le("protocol.dep_full_disturbance_quarter", worst_dep_limit, kTol);

    bool pd_ordering = true;
    for (double a : kAGrid)
        for (double p : kPGrid)
            pd_ordering = pd_ordering &&
                          closed_form_probability(ChannelKind::PhaseDamping, Statistics::Boson, a, kPi, p).odd >=
                              closed_form_probability(ChannelKind::PhaseDamping, Statistics::Boson, a, 0.0, p).odd -
                                  kTol;
    suite.check("protocol.pd_singlet_phase_ordering", pd_ordering);

    // Monte Carlo against binomial statistics at fixed seeds.
    auto mc_within = [&](const RunSummary& mc, const RunSummary& exact) {
        double worst_sigma = 0.0;
        for (std::size_t j = 0; j < mc.empirical.size(); ++j) {
            double expected = exact.iterations[j].cumulative_success;
            double sigma = std::sqrt(std::max(expected * (1.0 - expected), 1e-12) /
                                     static_cast<double>(*mc.trials));
            worst_sigma = std::max(worst_sigma,
                                   std::abs(mc.empirical[j].cumulative_freq - expected) / (3.0 * sigma));
        }
        return worst_sigma;
    };
    ProtocolScheme dep_scheme = ProtocolScheme::reset_depolarize(Statistics::Fermion, 10);
    RunSummary dep_exact = run_exact(dep_scheme);
    RunSummary dep_mc = run_monte_carlo(dep_scheme, 100000, kMcSeed);
    suite.check_le("protocol.mc_reset_dep_within_3sigma", mc_within(dep_mc, dep_exact), 1.0);
    ProtocolScheme ad_scheme =
        ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, Parity::Even, 10);
    RunSummary ad_exact = run_exact(ad_scheme);
    RunSummary ad_mc = run_monte_carlo(ad_scheme, 100000, kMcSeed);
    suite.check_le("protocol.mc_reset_ad_within_3sigma", mc_within(ad_mc, ad_exact), 1.0);

    RunSummary single_a = run_monte_carlo(dep_scheme, 1, 7);
    RunSummary single_b = run_monte_carlo(dep_scheme, 1, 7);
    suite.check("protocol.mc_single_trial_deterministic", single_a.to_json() == single_b.to_json());

    // Full amplitude-damping disturbance leaves fermions in the
    // (BS-invariant) ground state, so every trial lands in the odd branch.
    ProtocolScheme ad_full = ProtocolScheme::non_reset(ChannelKind::AmplitudeDamping, Statistics::Fermion,
                                                       {kInvSqrt2, 0.0}, BathParams{1.0, 1.0, 1.0},
                                                       3 * kPi / 2);
    ad_full.target_parity = Parity::Odd;
    RunSummary ad_full_mc = run_monte_carlo(ad_full, 1000, kMcSeed);
    suite.check("protocol.mc_ad_full_disturbance_odd_certain",
                ad_full_mc.empirical.front().success_freq == 1.0);
    return suite.results;
}

std::vector<CheckResult> po_equiv_invariants() {
    Suite suite;

    bool full_connectivity = true;
    for (NamedLabel start : named_labels(Statistics::Fermion)) {
        ReachResult result = reach(start, Statistics::Fermion, 4);
        for (NamedLabel other : named_labels(Statistics::Fermion))
            full_connectivity = full_connectivity && result.contains(other);
    }
    suite.check("po.fermion_full_connectivity_depth4", full_connectivity);

    ReachResult fermion = reach(NamedLabel::OneMinusLR, Statistics::Fermion, 4);
    bool replay_ok = true;
    Vector start = named_amps(NamedLabel::OneMinusLR, Statistics::Fermion);
    for (std::size_t i = 0; i < fermion.states.size(); ++i) {
        Vector v = start;
        for (const auto& spec : fermion.paths[i].elements)
            v = lift(spec, Statistics::Fermion).matrix * v;
        replay_ok = replay_ok && equal_up_to_phase(v, fermion.states[i], 1e-9);
    }
    suite.check("po.paths_replay", replay_ok);

    // Every generator pairs with an inverse inside the set (up to a global
    // phase), so reachability is symmetric.
    bool inverses = true;
    for (Statistics s : kBoth) {
        auto ops = generator_set(s, default_thetas());
        for (std::size_t g = 0; g < ops.size(); ++g) {
            bool found = false;
            for (std::size_t h = 0; h < ops.size() && !found; ++h) {
                Matrix prod = ops[h].matrix * ops[g].matrix;
                Complex phase = prod(0, 0);
                found = std::abs(std::abs(phase) - 1.0) <= 1e-9 &&
                        max_abs_diff(prod, phase * Matrix::Identity(prod.rows(), prod.cols())) <= 1e-9;
            }
            inverses = inverses && found;
        }
    }
    suite.check("po.generator_inverses_in_set", inverses);

    EdgeReport fermion_edges = verify_stated_edges(Statistics::Fermion);
    suite.check("po.fermion_stated_edges", fermion_edges.all_pass() && fermion_edges.edges.size() == 6);
    EdgeReport boson_edges = verify_stated_edges(Statistics::Boson);
    suite.check("po.boson_stated_edges", boson_edges.all_pass());
    bool local_match = true;
    for (std::size_t k = 0; k + 1 < fermion_edges.edges.size(); ++k) {
        const auto& f = fermion_edges.edges[k];
        const auto& b = boson_edges.edges[k];
        local_match = local_match && f.from == b.from && f.to == b.to && f.pass == b.pass &&
                      f.stated_device_pass == b.stated_device_pass;
    }
    suite.check("po.local_edges_statistics_independent", local_match);

    ReachResult boson = reach(NamedLabel::OneMinusLR, Statistics::Boson, 6);
    suite.check("po.boson_parity_classes_disconnected",
                !boson.contains(NamedLabel::UPlusNO), "depth-6 closure of 1-LR has " +
                                                          std::to_string(boson.states.size()) + " states");
    return suite.results;
}

std::vector<CheckResult> oracle_invariants() {
    Suite suite;
    suite.check_le("oracle.leakage_fermion", oracle_leakage_worst(Statistics::Fermion), kTol);
    suite.check_le("oracle.leakage_boson", oracle_leakage_worst(Statistics::Boson), kTol);

    double worst_roundtrip = 0.0;
    for (Statistics s : kBoth) {
        const auto& basis = sector_basis(s);
        for (int k = 0; k < basis.dim(); ++k) {
            Vector e = Vector::Zero(basis.dim());
            e(k) = 1.0;
            StateVector psi(s, e);
            StateVector back = oracle::to_occupation(oracle::from_occupation(psi), s);
            worst_roundtrip = std::max(worst_roundtrip,
                                       (back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff());
        }
    }
    suite.check_le("oracle.roundtrip_identity", worst_roundtrip, kTol);

    oracle::LabeledState combo =
        (oracle::symmetrize(kLUp, kRDown, Statistics::Fermion) -
         oracle::symmetrize(kLDown, kRUp, Statistics::Fermion)) /
        std::numbers::sqrt2;
    Vector singlet = oracle::to_occupation(combo, Statistics::Fermion).amplitudes();
    suite.check_le("oracle.singlet_construction",
                   (singlet - named_amps(NamedLabel::OneMinusLR, Statistics::Fermion)).cwiseAbs().maxCoeff(),
                   kTol);

    oracle::LabeledState doubly = oracle::symmetrize(kLUp, kLUp, Statistics::Boson);
    Vector occ = oracle::to_occupation(doubly, Statistics::Boson).amplitudes();
    Vector expected = Vector::Zero(10);
    expected(sector_basis(Statistics::Boson).index_of({2, 0, 0, 0})) = 1.0;
    suite.check_le("oracle.double_occupancy_conversion", (occ - expected).cwiseAbs().maxCoeff(), kTol);
    return suite.results;
}

std::vector<CheckResult> run_invariant_suites() {
    std::vector<CheckResult> all;
    for (auto* fn : {fock_invariants, elements_invariants, channels_invariants, detector_invariants,
                     protocol_invariants, po_equiv_invariants, oracle_invariants}) {
        auto part = fn();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Runs the CLI twice with identical flags and compares output bytes.
bool cli_byte_identical(const std::string& cli, const std::string& args, std::string* detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path out1 = dir / ("pd_det_1_" + std::to_string(::getpid()) + ".out");
    fs::path out2 = dir / ("pd_det_2_" + std::to_string(::getpid()) + ".out");
    std::string cmd1 = cli + " " + args + " > " + out1.string() + " 2>/dev/null";
    std::string cmd2 = cli + " " + args + " > " + out2.string() + " 2>/dev/null";
    if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
        *detail = "CLI invocation failed: " + args;
        return false;
    }
    std::string a = read_file(out1), b = read_file(out2);
    fs::remove(out1);
    fs::remove(out2);
    if (a.empty() || a != b) {
        *detail = "outputs differ for: " + args;
        return false;
    }
    *detail = "byte-identical: " + args;
    return true;
}

}  // namespace

std::vector<CheckResult> run_acceptance_criteria(const std::string& cli_path) {
    Suite suite;

    // 1. Beam-splitter action tables, exact signs.
    suite.check_le("acceptance.01_bs_tables",
                   std::max(bs_table_defect(Statistics::Fermion), bs_table_defect(Statistics::Boson)), kTol);

    // 2. Fermionic depolarize-reset single round.
    {
        const Statistics f = Statistics::Fermion;
        DensityOperator rho_bs =
            apply_to_density(lift(ElementSpec::bs(), f), reset_depolarize(f));
        double worst = max_abs_diff(rho_bs.matrix(), fermion_reset_dep_expected());
        ParityMeasurement m = parity_measure(rho_bs);
        worst = std::max(worst, std::abs(m.even.probability - 0.25));
        worst = std::max(worst, std::abs(m.odd.probability - 0.75));
        Vector no = named_amps(NamedLabel::OneMinusNO, f);
        worst = std::max(worst, max_abs_diff(m.even.conditional->matrix(), no * no.adjoint()));
        Matrix rho_lr = Matrix::Zero(6, 6);
        for (NamedLabel label : {NamedLabel::OnePlusLR, NamedLabel::TwoPlusLR, NamedLabel::TwoMinusLR}) {
            Vector v = named_amps(label, f);
            rho_lr += v * v.adjoint() / 3.0;
        }
        worst = std::max(worst, max_abs_diff(m.odd.conditional->matrix(), rho_lr));
        suite.check_le("acceptance.02_reset_dep_round", worst, kTol);
    }

    // 3. Iteration closed forms, exact and Monte Carlo.
    {
        double worst = 0.0;
        RunSummary dep = run_exact(ProtocolScheme::reset_depolarize(Statistics::Fermion, 30));
        for (const auto& r : dep.iterations)
            worst = std::max(worst, std::abs(r.cumulative_success - (1.0 - std::pow(0.75, r.j))));
        RunSummary ad = run_exact(
            ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, Parity::Even, 30));
        for (const auto& r : ad.iterations)
            worst = std::max(worst, std::abs(r.cumulative_success - (1.0 - std::pow(0.5, r.j))));
        suite.check_le("acceptance.03a_iteration_closed_forms", worst, kTol);

        double worst_sigma = 0.0;
        for (SchemeVariant variant : {SchemeVariant::ResetDepolarize, SchemeVariant::ResetAmplitudeDamp}) {
            ProtocolScheme scheme =
                variant == SchemeVariant::ResetDepolarize
                    ? ProtocolScheme::reset_depolarize(Statistics::Fermion, 10)
                    : ProtocolScheme::reset_amplitude_damp(Statistics::Fermion, Parity::Even, 10);
            RunSummary exact = run_exact(scheme);
            RunSummary mc = run_monte_carlo(scheme, 100000, kMcSeed);
            for (std::size_t j = 0; j < mc.empirical.size(); ++j) {
                double expected = exact.iterations[j].cumulative_success;
                double sigma = std::sqrt(std::max(expected * (1.0 - expected), 1e-12) / 100000.0);
                worst_sigma = std::max(worst_sigma,
                                       std::abs(mc.empirical[j].cumulative_freq - expected) / (3.0 * sigma));
            }
        }
        suite.check_le("acceptance.03b_monte_carlo_3sigma", worst_sigma, 1.0);
    }

    // 4. Amplitude-damping reset single round.
    {
        const Statistics f = Statistics::Fermion;
        Vector ground = product_state(kLDown, kRDown, f).amplitudes();
        Vector rotated = lift(ElementSpec::pr(Spatial::L), f).matrix * ground;
        Vector after_bs = lift(ElementSpec::bs(), f).matrix * rotated;
        Vector expected = (named_amps(NamedLabel::OneMinusNO, f) - named_amps(NamedLabel::OnePlusLR, f)) /
                          std::numbers::sqrt2;
        double worst = (after_bs - expected).cwiseAbs().maxCoeff();
        ParityMeasurement m = parity_measure(DensityOperator(f, after_bs * after_bs.adjoint()));
        worst = std::max(worst, std::abs(m.odd.probability - 0.5));
        worst = std::max(worst, std::abs(m.even.probability - 0.5));
        worst = std::max(worst, std::abs(purity(*m.odd.conditional) - 1.0));
        worst = std::max(worst, std::abs(purity(*m.even.conditional) - 1.0));
        suite.check_le("acceptance.04_reset_ad_round", worst, kTol);
    }

    // 5. Non-reset closed forms over the full grid, plus the parity swap.
    {
        double worst = 0.0, worst_swap = 0.0;
        for (ChannelKind kind : kKinds) {
            for (double a : kAGrid) {
                for (double phi : kPhiGrid) {
                    for (double p : kPGrid) {
                        ParityMeasurement boson = parity_measure(post_bs_state(kind, Statistics::Boson, a, phi, p));
                        ParityMeasurement fermion =
                            parity_measure(post_bs_state(kind, Statistics::Fermion, a, phi, p));
                        BranchProbabilities cb = closed_form_probability(kind, Statistics::Boson, a, phi, p);
                        BranchProbabilities cf = closed_form_probability(kind, Statistics::Fermion, a, phi, p);
                        worst = std::max({worst, std::abs(boson.odd.probability - cb.odd),
                                          std::abs(boson.even.probability - cb.even),
                                          std::abs(fermion.odd.probability - cf.odd),
                                          std::abs(fermion.even.probability - cf.even)});
                        worst_swap = std::max({worst_swap,
                                               std::abs(boson.odd.probability - fermion.even.probability),
                                               std::abs(boson.even.probability - fermion.odd.probability)});
                    }
                }
            }
        }
        suite.check_le("acceptance.05a_non_reset_closed_forms", worst, kTol);
        suite.check_le("acceptance.05b_parity_swap", worst_swap, kTol);
    }

    // 6. Full-disturbance limits.
    {
        double worst = 0.0;
        for (double a : kAGrid) {
            for (double phi : kPhiGrid) {
                ParityMeasurement dep_b =
                    parity_measure(post_bs_state(ChannelKind::Depolarizing, Statistics::Boson, a, phi, 1.0));
                worst = std::max(worst, std::abs(dep_b.odd.probability - 0.25));
                ParityMeasurement ad_b =
                    parity_measure(post_bs_state(ChannelKind::AmplitudeDamping, Statistics::Boson, a, phi, 1.0));
                worst = std::max(worst,
                                 std::abs(fidelity_with_pure(*ad_b.even.conditional,
                                                             named_state(NamedLabel::DMinusNO, Statistics::Boson)) -
                                          1.0));
                ParityMeasurement ad_f =
                    parity_measure(post_bs_state(ChannelKind::AmplitudeDamping, Statistics::Fermion, a, phi, 1.0));
                worst = std::max(worst, std::abs(fidelity_with_pure(
                                            *ad_f.odd.conditional,
                                            product_state(kLDown, kRDown, Statistics::Fermion)) -
                                        1.0));
            }
        }
        suite.check_le("acceptance.06_full_disturbance_limits", worst, kTol);
    }

    // 7. Disturbance probability: zero start, unit peak, branch agreement.
    {
        double worst = std::abs(disturbance_probability({1.0, 1.0, 1.0}, 0.0));
        worst = std::max(worst, std::abs(disturbance_probability({1.0, 1.0, 1.0}, 3 * kPi / 2) - 1.0));
        suite.check_le("acceptance.07a_disturbance_values", worst, kTol);
        double worst_branch = 0.0;
        for (double delta : {1e-6, 1e-9, -1e-9, -1e-6}) {
            BathParams near{0.5 + delta, 1.0, 1.0};
            BathParams crit{0.5, 1.0, 1.0};
            for (double t : {0.5, 1.0, 2.0, 5.0}) {
                worst_branch = std::max(worst_branch,
                                        std::abs(disturbance_probability(near, t) -
                                                 disturbance_reference(near.gamma, near.lambda, t)));
                if (std::abs(delta) <= 1e-9)
                    worst_branch = std::max(worst_branch, std::abs(disturbance_probability(near, t) -
                                                                   disturbance_probability(crit, t)));
            }
        }
        suite.check_le("acceptance.07b_disturbance_branch_continuity", worst_branch, 1e-9);
    }

    // 8. Oracle equivalence.
    suite.check_le("acceptance.08a_oracle_agreement",
                   std::max(oracle_agreement_defect(Statistics::Fermion),
                            oracle_agreement_defect(Statistics::Boson)),
                   1e-10);
    suite.check_le("acceptance.08b_oracle_leakage",
                   std::max(oracle_leakage_worst(Statistics::Fermion), oracle_leakage_worst(Statistics::Boson)),
                   kTol);

    // 9. Passive-optical reachability.
    {
        ReachResult fermion = reach(NamedLabel::OneMinusLR, Statistics::Fermion, 4);
        bool all_reached = true;
        for (NamedLabel label : named_labels(Statistics::Fermion))
            all_reached = all_reached && fermion.contains(label);
        suite.check("acceptance.09a_fermion_reachability_depth4", all_reached);

        EdgeReport fermion_edges = verify_stated_edges(Statistics::Fermion);
        suite.check("acceptance.09b_stated_edges_verified",
                    fermion_edges.all_pass() && fermion_edges.edges.size() == 6,
                    fermion_edges.notes.empty() ? "" : fermion_edges.notes.front());

        ReachResult boson = reach(NamedLabel::OneMinusLR, Statistics::Boson, 6);
        suite.check("acceptance.09c_boson_components_distinct", !boson.contains(NamedLabel::UPlusNO),
                    "depth-6 closure holds " + std::to_string(boson.states.size()) + " states");
    }

    // 10. Channel sanity on random LR-supported inputs.
    {
        std::mt19937_64 rng(kCorpusSeed);
        double worst_trace = 0.0, worst_herm = 0.0, min_eig = 0.0;
        for (Statistics s : kBoth) {
            for (ChannelKind kind : kKinds) {
                for (double p : kPFive) {
                    for (int k = 0; k < 50; ++k) {
                        DensityOperator out = evolve(kind, random_lr_density(s, rng), p);
                        worst_trace = std::max(worst_trace, std::abs(out.matrix().trace().real() - 1.0));
                        worst_herm = std::max(worst_herm, max_abs_diff(out.matrix(), out.matrix().adjoint()));
                        min_eig = std::min(min_eig, out.min_eigenvalue());
                    }
                }
            }
        }
        suite.check("acceptance.10_channel_sanity",
                    worst_trace <= kTol && worst_herm <= kTol && min_eig >= -kTol,
                    "trace " + format_double(worst_trace) + ", min eig " + format_double(min_eig));
    }

    // 11. Determinism of emitted artifacts.
    {
        ProtocolScheme scheme = ProtocolScheme::reset_depolarize(Statistics::Fermion, 5);
        std::string mc1 = run_monte_carlo(scheme, 5000, kMcSeed).to_json();
        std::string mc2 = run_monte_carlo(scheme, 5000, kMcSeed).to_json();
        SweepConfig config;
        config.a_steps = 3;
        config.t_steps = 5;
        config.phis = {0.0, kPi};
        std::string csv1 = sweep_to_csv(run_sweep(config));
        std::string csv2 = sweep_to_csv(run_sweep(config));
        std::string dot1 = to_json(build_po_graph(Statistics::Fermion, 3));
        std::string dot2 = to_json(build_po_graph(Statistics::Fermion, 3));
        suite.check("acceptance.11a_in_process_determinism", mc1 == mc2 && csv1 == csv2 && dot1 == dot2);

        if (!cli_path.empty()) {
            std::string detail;
            bool ok = cli_byte_identical(
                cli_path, "protocol --scheme reset-dep --statistics fermion --iterations 5 --mode mc --trials 2000 --seed 42",
                &detail);
            std::string detail2;
            ok = cli_byte_identical(cli_path,
                                    "sweep --channel pd --statistics boson --a-steps 3 --t-steps 5 --phi 0 "
                                    "--phi 3.141592653589793",
                                    &detail2) &&
                 ok;
            suite.check("acceptance.11b_cli_byte_identical", ok, detail + "; " + detail2);
        }
    }

    return suite.results;
}

std::vector<CheckResult> run_all(const std::string& cli_path) {
    std::vector<CheckResult> all = run_invariant_suites();
    auto acceptance = run_acceptance_criteria(cli_path);
    all.insert(all.end(), acceptance.begin(), acceptance.end());
    return all;
}

}  // namespace paritydistill::checks
