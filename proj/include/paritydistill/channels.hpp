#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paritydistill/fock.hpp"

namespace paritydistill {

/// Lorentzian bath parameters. omega0 enters only the spectral density;
/// the disturbance probability depends on gamma and lambda alone.
struct BathParams {
    double gamma = 1.0;   // system-environment coupling strength
    double lambda = 1.0;  // spectral width
    double omega0 = 1.0;  // qubit transition frequency

    /// d^2 = 2*gamma*lambda - lambda^2; d is real in the strong-coupling
    /// (non-Markovian) regime and imaginary in the weak-coupling one.
    double d_squared() const { return 2.0 * gamma * lambda - lambda * lambda; }
    void validate() const;
};

enum class ChannelKind { PhaseDamping, Depolarizing, AmplitudeDamping };

/// Serialized forms: "pd" | "dep" | "ad".
std::string to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(const std::string& s);

/// Lorentzian spectral density J(omega) = (gamma/2pi) lambda^2 /
/// ((omega-omega0)^2 + lambda^2).
double spectral_density(const BathParams& bath, double omega);

/// Time-dependent disturbance probability
///   p(t) = 1 - e^{-lambda t} [cos(d t/2) + (lambda/d) sin(d t/2)]^2,
/// d = sqrt(2*gamma*lambda - lambda^2). Implemented through entire
/// functions of d^2 t^2/4, so the real, hyperbolic (2*gamma < lambda) and
/// critical (2*gamma = lambda) branches join smoothly. Values are clamped
/// to [0, 1] only when within 1e-12 of a boundary; larger excursions
/// throw InvalidProbability. Throws NegativeTime for t < 0.
double disturbance_probability(const BathParams& bath, double t);

/// Single-qubit Kraus operators on the (up, down) pseudospin basis, with
/// down the ground state. The parameter p is the combined two-qubit
/// disturbance probability; each qubit applies the square-root share so
/// that acting on both spatial modes reproduces the two-qubit closed
/// forms (exactly for phase and amplitude damping on their stated input
/// families; for depolarizing only when the single-qubit marginals are
/// maximally mixed).
struct KrausSet {
    ChannelKind kind = ChannelKind::PhaseDamping;
    double p = 0.0;
    std::vector<Eigen::Matrix2cd> ops;
};

KrausSet local_kraus(ChannelKind kind, double p);

/// Two-qubit channel map at disturbance probability p. The input must be
/// supported in the LR parity class (one particle per spatial mode), so
/// each mode carries a well-defined pseudospin qubit.
///
///   PhaseDamping:     each qubit's coherences scale by sqrt(1-p);
///                     coherences between anti-parallel pseudospin states
///                     scale by (1-p), diagonals are fixed.
///   Depolarizing:     (1-p) rho + (p/4) Pi_LR (the Werner map). This is a
///                     global map; no product of standard local
///                     depolarizing channels reproduces it for inputs
///                     whose marginals are not maximally mixed.
///   AmplitudeDamping: (1-p) rho + p |Ldown,Rdown><Ldown,Rdown| on inputs
///                     that are diagonal-plus-coherence in the
///                     anti-parallel subspace plus ground population; the
///                     local Kraus-pair composition in general.
DensityOperator evolve(ChannelKind kind, const DensityOperator& rho0, double p);

/// Operator-sum application sum_{i,j} (K_i^L (x) K_j^R) rho (...)†, where
/// the L/R factors act on the pseudospin of the occupied modes. Input must
/// be LR-supported.
DensityOperator apply_local_pair(const KrausSet& kraus, const DensityOperator& rho);

/// t -> infinity fixed point of the depolarizing reset: Pi_LR / 4.
DensityOperator reset_depolarize(Statistics statistics);

/// t -> infinity fixed point of the amplitude-damping reset: the pure
/// two-particle ground state |Ldown,Rdown>.
DensityOperator reset_amplitude_damp(Statistics statistics);

}  // namespace paritydistill
