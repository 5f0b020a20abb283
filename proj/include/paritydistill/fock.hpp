#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "paritydistill/errors.hpp"
#include "paritydistill/numeric.hpp"

namespace paritydistill {

enum class Statistics { Boson, Fermion };

std::string to_string(Statistics s);
std::optional<Statistics> parse_statistics(const std::string& s);

enum class Spatial { L, R };
enum class Pseudospin { Up, Down };

/// One of the four single-particle modes. Canonical linear order:
/// L-up = 0, L-down = 1, R-up = 2, R-down = 3; this order fixes every
/// sign convention in the library.
struct ModeIndex {
    Spatial spatial;
    Pseudospin pseudospin;

    constexpr int linear() const {
        return 2 * static_cast<int>(spatial) + static_cast<int>(pseudospin);
    }
    static ModeIndex from_linear(int i);
    bool operator==(const ModeIndex&) const = default;
};

inline constexpr ModeIndex kLUp{Spatial::L, Pseudospin::Up};
inline constexpr ModeIndex kLDown{Spatial::L, Pseudospin::Down};
inline constexpr ModeIndex kRUp{Spatial::R, Pseudospin::Up};
inline constexpr ModeIndex kRDown{Spatial::R, Pseudospin::Down};

std::string to_string(const ModeIndex& m);

/// Parity classes of the two-particle sector: LR holds one particle per
/// spatial mode (odd detector outcome), NO holds both particles in a single
/// spatial mode (even detector outcome).
enum class ParityClass { LR, NO };

using Occupancy = std::array<int, 4>;

/// Occupation-number state of the two-particle sector.
struct OccupationState {
    Occupancy occupancy{};
    Statistics statistics = Statistics::Boson;

    int total() const { return occupancy[0] + occupancy[1] + occupancy[2] + occupancy[3]; }
    int left_count() const { return occupancy[0] + occupancy[1]; }
    ParityClass parity_class() const { return left_count() == 1 ? ParityClass::LR : ParityClass::NO; }
    /// The two occupied modes in increasing canonical order (equal for
    /// bosonic double occupancy).
    std::array<int, 2> occupied_modes() const;
    bool operator==(const OccupationState&) const = default;
};

/// Ordered basis of the two-particle sector: 10 states for bosons, 6 for
/// fermions, occupancy vectors sorted lexicographically descending.
struct SectorBasis {
    Statistics statistics = Statistics::Boson;
    std::vector<OccupationState> states;

    int dim() const { return static_cast<int>(states.size()); }
    /// Index of an occupancy vector, or -1 when absent.
    int index_of(const Occupancy& occ) const;
};

/// Canonical basis for the given statistics (cached; deterministic).
const SectorBasis& sector_basis(Statistics statistics);

SectorBasis enumerate_basis(Statistics statistics);

/// Unit-norm amplitude vector over the canonical sector basis.
class StateVector {
  public:
    StateVector(Statistics statistics, Vector amplitudes);

    Statistics statistics() const { return statistics_; }
    const SectorBasis& basis() const { return sector_basis(statistics_); }
    const Vector& amplitudes() const { return amplitudes_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }

    /// True when all amplitude weight lies in the given parity class
    /// (within tol).
    bool supported_in(ParityClass cls, double tol = kTol) const;

  private:
    Statistics statistics_;
    Vector amplitudes_;
};

/// Hermitian, trace-one operator over the canonical sector basis.
/// Hermiticity and trace are enforced at construction; positivity is
/// checked separately via min_eigenvalue so that property tests can
/// observe it.
class DensityOperator {
  public:
    DensityOperator(Statistics statistics, Matrix matrix);

    static DensityOperator pure(const StateVector& psi);

    Statistics statistics() const { return statistics_; }
    const SectorBasis& basis() const { return sector_basis(statistics_); }
    const Matrix& matrix() const { return matrix_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }

    double min_eigenvalue() const;
    /// Max abs entry outside the LR-supported block.
    double support_outside(ParityClass cls) const;

  private:
    Statistics statistics_;
    Matrix matrix_;
};

/// The ten named maximally entangled states: Bell states (LR) and NOON
/// states (NO). U/D labels exist only for bosons.
enum class NamedLabel {
    OneMinusLR,
    OnePlusLR,
    TwoMinusLR,
    TwoPlusLR,
    OneMinusNO,
    OnePlusNO,
    UMinusNO,
    UPlusNO,
    DMinusNO,
    DPlusNO,
};

/// Serialized forms: "1-LR", "1+LR", "2-LR", "2+LR", "1-NO", "1+NO",
/// "U-NO", "U+NO", "D-NO", "D+NO".
std::string to_string(NamedLabel label);
std::optional<NamedLabel> parse_named_label(const std::string& s);

ParityClass parity_class_of(NamedLabel label);
bool valid_for(NamedLabel label, Statistics statistics);

/// All labels valid for the statistics, in enum order (10 or 6).
std::vector<NamedLabel> named_labels(Statistics statistics);

/// Normalized two-particle state with one particle in each listed mode.
/// The no-label ket |a,b> is identified with c†_a c†_b |vac>; for fermions
/// swapping the arguments flips the sign. Throws PauliViolation for
/// fermions with a == b.
StateVector product_state(ModeIndex a, ModeIndex b, Statistics statistics);

/// The named maximally entangled state. Throws InvalidForStatistics when a
/// U/D NOON label is requested for fermions.
StateVector named_state(NamedLabel label, Statistics statistics);

/// Projector onto the parity-class subspace (diagonal 0/1 matrix in the
/// occupation basis; not trace-one).
Matrix parity_projector(ParityClass cls, Statistics statistics);

/// Convex combination of pure states. Weights must sum to 1 within kTol.
DensityOperator mixture(const std::vector<double>& weights, const std::vector<StateVector>& states);

double purity(const DensityOperator& rho);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, reducing to
/// |<psi|phi>|^2 on pure inputs.
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// Fidelity of a density operator with a pure state: <psi|rho|psi>.
double fidelity_with_pure(const DensityOperator& rho, const StateVector& psi);

Complex overlap(const StateVector& psi, const StateVector& phi);

}  // namespace paritydistill
