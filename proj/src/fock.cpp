#include "paritydistill/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace paritydistill {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

}  // namespace

std::string to_string(Statistics s) {
    return s == Statistics::Boson ? "boson" : "fermion";
}

std::optional<Statistics> parse_statistics(const std::string& s) {
    if (s == "boson") return Statistics::Boson;
    if (s == "fermion") return Statistics::Fermion;
    return std::nullopt;
}

ModeIndex ModeIndex::from_linear(int i) {
    return {i < 2 ? Spatial::L : Spatial::R, (i % 2 == 0) ? Pseudospin::Up : Pseudospin::Down};
}

std::string to_string(const ModeIndex& m) {
    std::string s(1, m.spatial == Spatial::L ? 'L' : 'R');
    s += (m.pseudospin == Pseudospin::Up) ? "up" : "down";
    return s;
}

std::array<int, 2> OccupationState::occupied_modes() const {
    std::array<int, 2> modes{-1, -1};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < occupancy[i]; ++c) modes[k++] = i;
    return modes;
}

int SectorBasis::index_of(const Occupancy& occ) const {
    for (int i = 0; i < dim(); ++i)
        if (states[i].occupancy == occ) return i;
    return -1;
}

SectorBasis enumerate_basis(Statistics statistics) {
    SectorBasis basis;
    basis.statistics = statistics;
    const int cap = statistics == Statistics::Fermion ? 1 : 2;
    for (int n0 = cap; n0 >= 0; --n0)
        for (int n1 = cap; n1 >= 0; --n1)
            for (int n2 = cap; n2 >= 0; --n2)
                for (int n3 = cap; n3 >= 0; --n3)
                    if (n0 + n1 + n2 + n3 == 2)
                        basis.states.push_back({{n0, n1, n2, n3}, statistics});
    // Loop order above already yields lexicographically descending
    // occupancies; keep the sort as the documented contract.
    std::sort(basis.states.begin(), basis.states.end(),
              [](const OccupationState& a, const OccupationState& b) { return a.occupancy > b.occupancy; });
    return basis;
}

const SectorBasis& sector_basis(Statistics statistics) {
    static const SectorBasis boson = enumerate_basis(Statistics::Boson);
    static const SectorBasis fermion = enumerate_basis(Statistics::Fermion);
    return statistics == Statistics::Boson ? boson : fermion;
}

StateVector::StateVector(Statistics statistics, Vector amplitudes)
    : statistics_(statistics), amplitudes_(std::move(amplitudes)) {
    const int dim = sector_basis(statistics_).dim();
    if (amplitudes_.size() != dim) throw DimensionMismatch("state vector length does not match the sector");
    if (std::abs(amplitudes_.norm() - 1.0) > kTol) throw Error("state vector is not normalized");
}

bool StateVector::supported_in(ParityClass cls, double tol) const {
    const auto& basis = this->basis();
    for (int i = 0; i < dim(); ++i)
        if (basis.states[i].parity_class() != cls && std::abs(amplitudes_(i)) > tol) return false;
    return true;
}

DensityOperator::DensityOperator(Statistics statistics, Matrix matrix)
    : statistics_(statistics), matrix_(std::move(matrix)) {
    const int dim = sector_basis(statistics_).dim();
    if (matrix_.rows() != dim || matrix_.cols() != dim)
        throw DimensionMismatch("density matrix shape does not match the sector");
    if (max_abs_diff(matrix_, matrix_.adjoint()) > kTol) throw Error("density matrix is not Hermitian");
    if (std::abs(matrix_.trace().real() - 1.0) > kTol || std::abs(matrix_.trace().imag()) > kTol)
        throw Error("density matrix trace is not 1");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
    return DensityOperator(psi.statistics(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityOperator::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityOperator::support_outside(ParityClass cls) const {
    const auto& basis = this->basis();
    double worst = 0.0;
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c)
            if (basis.states[r].parity_class() != cls || basis.states[c].parity_class() != cls)
                worst = std::max(worst, std::abs(matrix_(r, c)));
    return worst;
}

std::string to_string(NamedLabel label) {
    switch (label) {
        case NamedLabel::OneMinusLR: return "1-LR";
        case NamedLabel::OnePlusLR: return "1+LR";
        case NamedLabel::TwoMinusLR: return "2-LR";
        case NamedLabel::TwoPlusLR: return "2+LR";
        case NamedLabel::OneMinusNO: return "1-NO";
        case NamedLabel::OnePlusNO: return "1+NO";
        case NamedLabel::UMinusNO: return "U-NO";
        case NamedLabel::UPlusNO: return "U+NO";
        case NamedLabel::DMinusNO: return "D-NO";
        case NamedLabel::DPlusNO: return "D+NO";
    }
    return "?";
}

std::optional<NamedLabel> parse_named_label(const std::string& s) {
    for (int i = 0; i < 10; ++i) {
        auto label = static_cast<NamedLabel>(i);
        if (to_string(label) == s) return label;
    }
    return std::nullopt;
}

ParityClass parity_class_of(NamedLabel label) {
    switch (label) {
        case NamedLabel::OneMinusLR:
        case NamedLabel::OnePlusLR:
        case NamedLabel::TwoMinusLR:
        case NamedLabel::TwoPlusLR: return ParityClass::LR;
        default: return ParityClass::NO;
    }
}

bool valid_for(NamedLabel label, Statistics statistics) {
    if (statistics == Statistics::Boson) return true;
    switch (label) {
        case NamedLabel::UMinusNO:
        case NamedLabel::UPlusNO:
        case NamedLabel::DMinusNO:
        case NamedLabel::DPlusNO: return false;
        default: return true;
    }
}

std::vector<NamedLabel> named_labels(Statistics statistics) {
    std::vector<NamedLabel> labels;
    for (int i = 0; i < 10; ++i) {
        auto label = static_cast<NamedLabel>(i);
        if (valid_for(label, statistics)) labels.push_back(label);
    }
    return labels;
}

StateVector product_state(ModeIndex a, ModeIndex b, Statistics statistics) {
    if (statistics == Statistics::Fermion && a == b)
        throw PauliViolation("two fermions cannot share mode " + to_string(a));
    Occupancy occ{0, 0, 0, 0};
    ++occ[a.linear()];
    ++occ[b.linear()];
    const auto& basis = sector_basis(statistics);
    Vector amps = Vector::Zero(basis.dim());
    // |a,b> = c†_a c†_b |vac>; the basis ket applies creation operators in
    // increasing mode order, so descending argument order flips the
    // fermionic sign. Bosonic double occupancy normalizes away the sqrt(2).
    double sign = (statistics == Statistics::Fermion && a.linear() > b.linear()) ? -1.0 : 1.0;
    amps(basis.index_of(occ)) = sign;
    return StateVector(statistics, std::move(amps));
}

StateVector named_state(NamedLabel label, Statistics statistics) {
    if (!valid_for(label, statistics))
        throw InvalidForStatistics(to_string(label) + " does not exist for fermions");
    auto superpose = [&](ModeIndex a1, ModeIndex b1, ModeIndex a2, ModeIndex b2, double sign) {
        Vector amps = kInvSqrt2 * (product_state(a1, b1, statistics).amplitudes() +
                                   sign * product_state(a2, b2, statistics).amplitudes());
        return StateVector(statistics, std::move(amps));
    };
    switch (label) {
        case NamedLabel::OneMinusLR: return superpose(kLUp, kRDown, kLDown, kRUp, -1.0);
        case NamedLabel::OnePlusLR: return superpose(kLUp, kRDown, kLDown, kRUp, +1.0);
        case NamedLabel::TwoMinusLR: return superpose(kLUp, kRUp, kLDown, kRDown, -1.0);
        case NamedLabel::TwoPlusLR: return superpose(kLUp, kRUp, kLDown, kRDown, +1.0);
        case NamedLabel::OneMinusNO: return superpose(kLUp, kLDown, kRUp, kRDown, -1.0);
        case NamedLabel::OnePlusNO: return superpose(kLUp, kLDown, kRUp, kRDown, +1.0);
        // The 1/2 coefficients on the unnormalized double-occupancy kets
        // reduce to 1/sqrt(2) on the normalized Fock states.
        case NamedLabel::UMinusNO: return superpose(kLUp, kLUp, kRUp, kRUp, -1.0);
        case NamedLabel::UPlusNO: return superpose(kLUp, kLUp, kRUp, kRUp, +1.0);
        case NamedLabel::DMinusNO: return superpose(kLDown, kLDown, kRDown, kRDown, -1.0);
        case NamedLabel::DPlusNO: return superpose(kLDown, kLDown, kRDown, kRDown, +1.0);
    }
    throw Error("unreachable");
}

Matrix parity_projector(ParityClass cls, Statistics statistics) {
    const auto& basis = sector_basis(statistics);
    Matrix proj = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
        if (basis.states[i].parity_class() == cls) proj(i, i) = 1.0;
    return proj;
}

DensityOperator mixture(const std::vector<double>& weights, const std::vector<StateVector>& states) {
    if (weights.size() != states.size() || states.empty())
        throw DimensionMismatch("mixture needs one weight per state");
    double total = 0.0;
    for (double w : weights) total += w;
    if (std::abs(total - 1.0) > kTol) throw InvalidProbability("mixture weights must sum to 1");
    const Statistics statistics = states.front().statistics();
    Matrix rho = Matrix::Zero(states.front().dim(), states.front().dim());
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].statistics() != statistics) throw DimensionMismatch("mixture states on different sectors");
        rho += weights[k] * states[k].amplitudes() * states[k].amplitudes().adjoint();
    }
    return DensityOperator(statistics, std::move(rho));
}

double purity(const DensityOperator& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

namespace {

Matrix psd_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.statistics() != sigma.statistics()) throw DimensionMismatch("fidelity operands on different sectors");
    Matrix root = psd_sqrt(rho.matrix());
    Matrix inner = root * sigma.matrix() * root;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
    double sum = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    double f = sum * sum;
    if (f > 1.0 && f < 1.0 + kTol) f = 1.0;  // rounding headroom only
    return f;
}

double fidelity_with_pure(const DensityOperator& rho, const StateVector& psi) {
    if (rho.statistics() != psi.statistics()) throw DimensionMismatch("fidelity operands on different sectors");
    return (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0).real();
}

Complex overlap(const StateVector& psi, const StateVector& phi) {
    if (psi.statistics() != phi.statistics()) throw DimensionMismatch("overlap operands on different sectors");
    return psi.amplitudes().dot(phi.amplitudes());
}

}  // namespace paritydistill
