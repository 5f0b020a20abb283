#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paritydistill/fock.hpp"

namespace paritydistill {

enum class ElementKind { BS, PIPS, PDPS, PR, PBS };

/// Descriptor of one passive-optical element.
///
/// Conventions (single-particle action on the four modes):
///   BS            50:50, pseudospin blind: |L> -> (|L>+|R>)/sqrt(2),
///                 |R> -> (|L>-|R>)/sqrt(2).
///   PIPS(theta,X) phase e^{i theta} on both pseudospin components of
///                 spatial mode X.
///   PDPS(theta,X,s) phase e^{i theta} on the single component (X, s).
///   PR(X)         swaps up <-> down on spatial mode X.
///   PBS           transmits up, swaps (L,down) <-> (R,down).
struct ElementSpec {
    ElementKind kind = ElementKind::BS;
    std::optional<double> theta;              // PIPS / PDPS, reduced to [0, 2pi)
    std::optional<Spatial> spatial_target;    // PIPS / PDPS / PR
    std::optional<Pseudospin> pseudospin_target;  // PDPS

    static ElementSpec bs();
    static ElementSpec pips(double theta, Spatial target);
    static ElementSpec pdps(double theta, Spatial target, Pseudospin spin);
    static ElementSpec pr(Spatial target);
    static ElementSpec pbs();

    /// Throws MissingParameter when a field required by the kind is absent.
    void validate() const;
};

/// Serialized forms: "BS", "PIPS(pi,L)", "PDPS(pi/2,R,up)", "PR(L)", "PBS".
std::string to_string(const ElementSpec& spec);

/// 4x4 unitary on the single-particle modes, in canonical mode order.
struct SingleParticleUnitary {
    Eigen::Matrix4cd matrix;
    std::string name;
};

SingleParticleUnitary element_unitary(const ElementSpec& spec);

/// Unitary induced on the two-particle sector by a single-particle unitary.
struct LiftedOperator {
    Statistics statistics = Statistics::Boson;
    Matrix matrix;
    std::string source;  // element string or "composite"

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Lift a single-particle unitary to the two-particle sector: each basis
/// occupancy is written as an ordered product of creation operators,
/// c†_i -> sum_j U_ji c†_j is substituted, and the expansion is
/// normal-ordered with sign tracking for fermions, then collected onto
/// normalized occupation states. Throws NotUnitary when the input fails
/// the 1e-12 unitarity check.
LiftedOperator lift(const SingleParticleUnitary& u, Statistics statistics);
LiftedOperator lift(const ElementSpec& spec, Statistics statistics);

StateVector apply_to_state(const LiftedOperator& op, const StateVector& psi);
DensityOperator apply_to_density(const LiftedOperator& op, const DensityOperator& rho);

/// Composition in application order: the first element acts first.
LiftedOperator compose(std::span<const LiftedOperator> ops);

}  // namespace paritydistill
