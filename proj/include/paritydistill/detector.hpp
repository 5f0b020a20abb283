#pragma once

#include <optional>
#include <string>
#include <utility>

#include "paritydistill/fock.hpp"

namespace paritydistill {

/// Detector outcome parity: odd = one particle per spatial mode (LR class),
/// even = both particles in one spatial mode (NO class).
enum class Parity { Odd, Even };

/// Serialized forms: "odd" | "even".
std::string to_string(Parity p);
std::optional<Parity> parse_parity(const std::string& s);

ParityClass parity_class_of(Parity p);
Parity parity_of(ParityClass cls);
Parity opposite(Parity p);

struct ParityOutcome {
    Parity parity = Parity::Odd;
    double probability = 0.0;
    /// Normalized conditional state; absent when probability < 1e-14.
    std::optional<DensityOperator> conditional;
};

struct ParityMeasurement {
    ParityOutcome odd;
    ParityOutcome even;

    const ParityOutcome& branch(Parity p) const { return p == Parity::Odd ? odd : even; }
};

/// Ideal pseudospin-insensitive, non-absorbing parity measurement:
/// p_odd = tr(Pi_LR rho) with conditional Pi_LR rho Pi_LR / p_odd, and
/// likewise for the even branch with Pi_NO.
ParityMeasurement parity_measure(const DensityOperator& rho);

/// Odd branch of parity_measure, named after the coincidence measurement
/// with two single-particle detectors that realizes the postselection.
std::pair<double, std::optional<DensityOperator>> coincidence_postselect(const DensityOperator& rho);

}  // namespace paritydistill
