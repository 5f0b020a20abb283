#pragma once

#include <string>
#include <vector>

#include "paritydistill/protocol.hpp"

namespace paritydistill {

/// Parameter sweep over the non-reset pipeline: one row per (a, phi, t)
/// grid point, in nested loop order (a outer, phi middle, t inner).
struct SweepConfig {
    ChannelKind channel = ChannelKind::PhaseDamping;
    Statistics statistics = Statistics::Boson;
    double a_min = 0.0;
    double a_max = 1.0;
    int a_steps = 11;  // number of grid points, inclusive of both ends
    std::vector<double> phis{0.0};
    double t_min = 0.0;
    double t_max = 10.0;
    int t_steps = 101;
    BathParams bath{};

    void validate() const;
};

struct SweepRow {
    Statistics statistics;
    ChannelKind channel;
    double a, phi, gamma, lambda, t;
    double p_disturb;
    double p_odd, p_even;
    double fidelity_odd, fidelity_even;  // NaN when the branch is absent
    double purity_odd, purity_even;      // NaN when the branch is absent
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV with header statistics,channel,a,phi,gamma,lambda,t,p_disturb,
/// p_odd,p_even,fidelity_odd,fidelity_even,purity_odd,purity_even; numbers
/// at 15 significant digits, absent-branch fields as "nan".
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// JSON array of row objects with the same keys; absent-branch fields as
/// null.
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace paritydistill
