#include "paritydistill/elements.hpp"

#include <cmath>
#include <numbers>

namespace paritydistill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;

std::string theta_string(double theta) {
    // Render the common multiples of pi symbolically; they are the only
    // angles the stated equivalences use.
    const struct {
        double value;
        const char* text;
    } table[] = {{0.0, "0"}, {kPi / 2, "pi/2"}, {kPi, "pi"}, {3 * kPi / 2, "3pi/2"}};
    for (const auto& entry : table)
        if (std::abs(theta - entry.value) < 1e-12) return entry.text;
    return format_double(theta);
}

}  // namespace

ElementSpec ElementSpec::bs() {
    return {ElementKind::BS, std::nullopt, std::nullopt, std::nullopt};
}

ElementSpec ElementSpec::pips(double theta, Spatial target) {
    return {ElementKind::PIPS, reduce_angle(theta), target, std::nullopt};
}

ElementSpec ElementSpec::pdps(double theta, Spatial target, Pseudospin spin) {
    return {ElementKind::PDPS, reduce_angle(theta), target, spin};
}

ElementSpec ElementSpec::pr(Spatial target) {
    return {ElementKind::PR, std::nullopt, target, std::nullopt};
}

ElementSpec ElementSpec::pbs() {
    return {ElementKind::PBS, std::nullopt, std::nullopt, std::nullopt};
}

void ElementSpec::validate() const {
    const bool needs_theta = kind == ElementKind::PIPS || kind == ElementKind::PDPS;
    const bool needs_spatial = needs_theta || kind == ElementKind::PR;
    if (needs_theta && !theta) throw MissingParameter("phase shifter requires theta");
    if (needs_spatial && !spatial_target) throw MissingParameter("element requires a spatial target");
    if (kind == ElementKind::PDPS && !pseudospin_target)
        throw MissingParameter("PDPS requires a pseudospin target");
}

std::string to_string(const ElementSpec& spec) {
    auto mode = [&] { return *spec.spatial_target == Spatial::L ? "L" : "R"; };
    switch (spec.kind) {
        case ElementKind::BS: return "BS";
        case ElementKind::PBS: return "PBS";
        case ElementKind::PR: return std::string("PR(") + mode() + ")";
        case ElementKind::PIPS: return "PIPS(" + theta_string(*spec.theta) + "," + mode() + ")";
        case ElementKind::PDPS:
            return "PDPS(" + theta_string(*spec.theta) + "," + mode() + "," +
                   (*spec.pseudospin_target == Pseudospin::Up ? "up" : "down") + ")";
    }
    return "?";
}

SingleParticleUnitary element_unitary(const ElementSpec& spec) {
    spec.validate();
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    switch (spec.kind) {
        case ElementKind::BS: {
            // Hadamard on the spatial factor, identity on pseudospin:
            // |L> -> (|L>+|R>)/sqrt(2), |R> -> (|L>-|R>)/sqrt(2).
            u.setZero();
            for (int spin = 0; spin < 2; ++spin) {
                int l = spin, r = 2 + spin;
                u(l, l) = kInvSqrt2;
                u(r, l) = kInvSqrt2;
                u(l, r) = kInvSqrt2;
                u(r, r) = -kInvSqrt2;
            }
            break;
        }
        case ElementKind::PIPS: {
            Complex phase = std::polar(1.0, *spec.theta);
            int base = *spec.spatial_target == Spatial::L ? 0 : 2;
            u(base, base) = phase;
            u(base + 1, base + 1) = phase;
            break;
        }
        case ElementKind::PDPS: {
            ModeIndex target{*spec.spatial_target, *spec.pseudospin_target};
            u(target.linear(), target.linear()) = std::polar(1.0, *spec.theta);
            break;
        }
        case ElementKind::PR: {
            int base = *spec.spatial_target == Spatial::L ? 0 : 2;
            u(base, base) = 0.0;
            u(base + 1, base + 1) = 0.0;
            u(base, base + 1) = 1.0;
            u(base + 1, base) = 1.0;
            break;
        }
        case ElementKind::PBS: {
            // Transmit up, swap the down components of L and R.
            u(1, 1) = 0.0;
            u(3, 3) = 0.0;
            u(1, 3) = 1.0;
            u(3, 1) = 1.0;
            break;
        }
    }
    return {u, to_string(spec)};
}

LiftedOperator lift(const SingleParticleUnitary& u, Statistics statistics) {
    if (unitarity_defect(u.matrix) > kTol)
        throw NotUnitary("single-particle matrix fails the unitarity check: " + u.name);
    const auto& basis = sector_basis(statistics);
    const bool fermion = statistics == Statistics::Fermion;
    Matrix lifted = Matrix::Zero(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        auto [i1, i2] = basis.states[col].occupied_modes();
        // |n> = N c†_{i1} c†_{i2} |vac> with N = 1/sqrt(2) on double
        // occupancy; substitute c†_i -> sum_j U_ji c†_j and collect.
        const double n_col = (i1 == i2) ? kInvSqrt2 : 1.0;
        for (int j1 = 0; j1 < 4; ++j1) {
            for (int j2 = 0; j2 < 4; ++j2) {
                Complex amp = n_col * u.matrix(j1, i1) * u.matrix(j2, i2);
                if (amp == Complex{}) continue;
                if (j1 == j2) {
                    if (fermion) continue;  // c†c† vanishes
                    Occupancy occ{0, 0, 0, 0};
                    occ[j1] = 2;
                    lifted(basis.index_of(occ), col) += amp * std::numbers::sqrt2;
                } else {
                    Occupancy occ{0, 0, 0, 0};
                    ++occ[j1];
                    ++occ[j2];
                    double sign = (fermion && j1 > j2) ? -1.0 : 1.0;
                    lifted(basis.index_of(occ), col) += sign * amp;
                }
            }
        }
    }
    return {statistics, std::move(lifted), u.name};
}

LiftedOperator lift(const ElementSpec& spec, Statistics statistics) {
    return lift(element_unitary(spec), statistics);
}

StateVector apply_to_state(const LiftedOperator& op, const StateVector& psi) {
    if (op.statistics != psi.statistics()) throw DimensionMismatch("operator and state on different sectors");
    return StateVector(psi.statistics(), op.matrix * psi.amplitudes());
}

DensityOperator apply_to_density(const LiftedOperator& op, const DensityOperator& rho) {
    if (op.statistics != rho.statistics()) throw DimensionMismatch("operator and state on different sectors");
    return DensityOperator(rho.statistics(), op.matrix * rho.matrix() * op.matrix.adjoint());
}

LiftedOperator compose(std::span<const LiftedOperator> ops) {
    if (ops.empty()) throw DimensionMismatch("compose needs at least one operator");
    Matrix product = ops.front().matrix;
    for (std::size_t k = 1; k < ops.size(); ++k) {
        if (ops[k].statistics != ops.front().statistics)
            throw DimensionMismatch("composed operators on different sectors");
        product = ops[k].matrix * product;
    }
    return {ops.front().statistics, std::move(product), "composite"};
}

}  // namespace paritydistill
