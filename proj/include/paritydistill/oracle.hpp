#pragma once

#include "paritydistill/elements.hpp"
#include "paritydistill/fock.hpp"

// Independent first-quantized cross-check: labeled two-particle states on
// the 16-dimensional space |m1> (x) |m2> with explicit
// (anti)symmetrization. Deliberately shares no code with the
// second-quantized lift, so agreement between the two is a meaningful
// check. Not optimized.
namespace paritydistill::oracle {

/// Amplitudes over ordered mode pairs, index 4*m1 + m2.
using LabeledState = Eigen::Vector<Complex, 16>;

/// (|a>|b> + |b>|a>)/norm for bosons, (|a>|b> - |b>|a>)/sqrt(2) for
/// fermions; |a>|a> for bosons with a == b. Throws PauliViolation for
/// fermions with a == b.
LabeledState symmetrize(ModeIndex a, ModeIndex b, Statistics statistics);

/// Isometry from the sector basis into the (anti)symmetric subspace:
/// column k is the labeled form of occupation basis state k.
Eigen::MatrixXcd sector_isometry(Statistics statistics);

/// Basis change into the occupation basis. Throws WrongSymmetrySector when
/// the input is not a swap eigenvector with the right sign (1e-10).
StateVector to_occupation(const LabeledState& labeled, Statistics statistics);
LabeledState from_occupation(const StateVector& psi);

/// Sector operator built as Iso† (U (x) U) Iso; equals elements::lift
/// within 1e-10.
Matrix lift_oracle(const SingleParticleUnitary& u, Statistics statistics);

/// Max abs entry of the (U (x) U)-image of the sector leaking out of the
/// (anti)symmetric subspace; zero in exact arithmetic.
double symmetry_leakage(const SingleParticleUnitary& u, Statistics statistics);

}  // namespace paritydistill::oracle
