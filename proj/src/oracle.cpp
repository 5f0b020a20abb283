#include "paritydistill/oracle.hpp"

#include <cmath>
#include <numbers>

namespace paritydistill::oracle {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

int pair_index(int m1, int m2) {
    return 4 * m1 + m2;
}

/// Particle-swap operator on the labeled space: |m1>|m2> -> |m2>|m1>.
Eigen::MatrixXcd swap_operator() {
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(16, 16);
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2) swap(pair_index(m2, m1), pair_index(m1, m2)) = 1.0;
    return swap;
}

Eigen::MatrixXcd kron4(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
    Eigen::MatrixXcd out(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return out;
}

}  // namespace

LabeledState symmetrize(ModeIndex a, ModeIndex b, Statistics statistics) {
    const int ia = a.linear(), ib = b.linear();
    LabeledState state = LabeledState::Zero();
    if (ia == ib) {
        if (statistics == Statistics::Fermion)
            throw PauliViolation("two fermions cannot share mode " + to_string(a));
        state(pair_index(ia, ia)) = 1.0;
        return state;
    }
    double sign = statistics == Statistics::Fermion ? -1.0 : 1.0;
    state(pair_index(ia, ib)) = kInvSqrt2;
    state(pair_index(ib, ia)) = sign * kInvSqrt2;
    return state;
}

Eigen::MatrixXcd sector_isometry(Statistics statistics) {
    const auto& basis = sector_basis(statistics);
    Eigen::MatrixXcd iso(16, basis.dim());
    for (int k = 0; k < basis.dim(); ++k) {
        auto [i1, i2] = basis.states[k].occupied_modes();
        iso.col(k) = symmetrize(ModeIndex::from_linear(i1), ModeIndex::from_linear(i2), statistics);
    }
    return iso;
}

StateVector to_occupation(const LabeledState& labeled, Statistics statistics) {
    const double expected = statistics == Statistics::Fermion ? -1.0 : 1.0;
    LabeledState swapped = swap_operator() * labeled;
    if ((swapped - expected * labeled).cwiseAbs().maxCoeff() > 1e-10)
        throw WrongSymmetrySector("labeled state is not in the requested symmetry sector");
    return StateVector(statistics, sector_isometry(statistics).adjoint() * labeled);
}

LabeledState from_occupation(const StateVector& psi) {
    return sector_isometry(psi.statistics()) * psi.amplitudes();
}

Matrix lift_oracle(const SingleParticleUnitary& u, Statistics statistics) {
    if (unitarity_defect(Matrix(u.matrix)) > kTol)
        throw NotUnitary("single-particle matrix fails the unitarity check: " + u.name);
    Eigen::MatrixXcd iso = sector_isometry(statistics);
    return iso.adjoint() * kron4(u.matrix, u.matrix) * iso;
}

double symmetry_leakage(const SingleParticleUnitary& u, Statistics statistics) {
    Eigen::MatrixXcd iso = sector_isometry(statistics);
    Eigen::MatrixXcd image = kron4(u.matrix, u.matrix) * iso;
    // Component of the image orthogonal to the sector subspace.
    Eigen::MatrixXcd residual = image - iso * (iso.adjoint() * image);
    return residual.cwiseAbs().maxCoeff();
}

}  // namespace paritydistill::oracle
