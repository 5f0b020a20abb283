#include "paritydistill/channels.hpp"

#include <cmath>
#include <numbers>

namespace paritydistill {

namespace {

constexpr double kPi = std::numbers::pi;

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability("probability outside [0, 1]");
}

// cos(sqrt(z)) continued to negative z (= cosh of the real width).
double cos_sqrt(double z) {
    if (std::abs(z) < 1e-8) return 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0;
    return z > 0 ? std::cos(std::sqrt(z)) : std::cosh(std::sqrt(-z));
}

// sin(sqrt(z))/sqrt(z) continued to negative z.
double sinc_sqrt(double z) {
    if (std::abs(z) < 1e-8) return 1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0;
    if (z > 0) {
        double s = std::sqrt(z);
        return std::sin(s) / s;
    }
    double s = std::sqrt(-z);
    return std::sinh(s) / s;
}

/// LR-class basis indices ordered as pseudospin pairs (up,up), (up,down),
/// (down,up), (down,down), exposing the qubit-pair structure of the
/// one-particle-per-mode subspace. In the canonical basis every such state
/// has a + sign for both statistics, so the map carries no sign twist.
std::array<int, 4> lr_qubit_indices(Statistics statistics) {
    const auto& basis = sector_basis(statistics);
    auto at = [&](int l, int r) {
        Occupancy occ{0, 0, 0, 0};
        ++occ[l];
        ++occ[r];
        return basis.index_of(occ);
    };
    return {at(0, 2), at(0, 3), at(1, 2), at(1, 3)};
}

void require_lr_support(const DensityOperator& rho, const char* what) {
    if (rho.support_outside(ParityClass::LR) > kTol)
        throw SupportOutsideLR(std::string(what) + " requires one particle per spatial mode");
}

Matrix embed_lr_block(const Eigen::Matrix4cd& block, Statistics statistics) {
    const auto idx = lr_qubit_indices(statistics);
    Matrix full = Matrix::Zero(sector_basis(statistics).dim(), sector_basis(statistics).dim());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) full(idx[r], idx[c]) = block(r, c);
    return full;
}

Eigen::Matrix4cd extract_lr_block(const DensityOperator& rho) {
    const auto idx = lr_qubit_indices(rho.statistics());
    Eigen::Matrix4cd block;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) block(r, c) = rho.matrix()(idx[r], idx[c]);
    return block;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

DensityOperator ground_state_density(Statistics statistics) {
    return DensityOperator::pure(product_state(kLDown, kRDown, statistics));
}

/// True when rho is diagonal-plus-coherence in the anti-parallel subspace
/// plus ground population: the family on which the amplitude-damping
/// closed form (1-p) rho + p |g><g| equals the local Kraus composition.
bool in_ad_closed_form_family(const Eigen::Matrix4cd& block) {
    // Qubit-pair order (uu, ud, du, dd): no (uu) involvement, no
    // coherences between dd and the anti-parallel states.
    for (int k = 0; k < 4; ++k)
        if (std::abs(block(0, k)) > kTol || std::abs(block(k, 0)) > kTol) return false;
    return std::abs(block(3, 1)) <= kTol && std::abs(block(3, 2)) <= kTol &&
           std::abs(block(1, 3)) <= kTol && std::abs(block(2, 3)) <= kTol;
}

}  // namespace

void BathParams::validate() const {
    if (!(gamma > 0.0) || !(lambda > 0.0)) throw Error("bath requires gamma > 0 and lambda > 0");
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseDamping: return "pd";
        case ChannelKind::Depolarizing: return "dep";
        case ChannelKind::AmplitudeDamping: return "ad";
    }
    return "?";
}

std::optional<ChannelKind> parse_channel_kind(const std::string& s) {
    if (s == "pd") return ChannelKind::PhaseDamping;
    if (s == "dep") return ChannelKind::Depolarizing;
    if (s == "ad") return ChannelKind::AmplitudeDamping;
    return std::nullopt;
}

double spectral_density(const BathParams& bath, double omega) {
    bath.validate();
    double detune = omega - bath.omega0;
    return bath.gamma / (2.0 * kPi) * bath.lambda * bath.lambda /
           (detune * detune + bath.lambda * bath.lambda);
}

double disturbance_probability(const BathParams& bath, double t) {
    bath.validate();
    if (t < 0.0) throw NegativeTime("disturbance probability needs t >= 0");
    // bracket = cos(d t/2) + (lambda/d) sin(d t/2), written through entire
    // functions of z = (d t/2)^2 so all regimes share one expression.
    double z = bath.d_squared() * t * t / 4.0;
    double envelope;
    if (z < -122500.0) {
        // Hyperbolic branch with |d| t/2 > 350: cosh would overflow even
        // though the envelope decays (|d| < lambda there). Work in logs;
        // the dropped e^{-|d| t} correction is far below tolerance.
        double s = std::sqrt(-z);
        double log_bracket = s - std::numbers::ln2 + std::log1p(bath.lambda * t / (2.0 * s));
        envelope = std::exp(2.0 * log_bracket - bath.lambda * t);
    } else {
        double bracket = cos_sqrt(z) + bath.lambda * t / 2.0 * sinc_sqrt(z);
        envelope = std::exp(-bath.lambda * t) * bracket * bracket;
    }
    double p = 1.0 - envelope;
    if (p < 0.0) {
        if (p < -kTol) throw InvalidProbability("disturbance probability left [0, 1]");
        p = 0.0;
    } else if (p > 1.0) {
        if (p > 1.0 + kTol) throw InvalidProbability("disturbance probability left [0, 1]");
        p = 1.0;
    }
    return p;
}

KrausSet local_kraus(ChannelKind kind, double p) {
    check_probability(p);
    KrausSet set{kind, p, {}};
    using M2 = Eigen::Matrix2cd;
    switch (kind) {
        case ChannelKind::PhaseDamping: {
            M2 k0 = M2::Zero(), k1 = M2::Zero();
            k0(0, 0) = 1.0;
            k0(1, 1) = std::sqrt(1.0 - p);
            k1(1, 1) = std::sqrt(p);
            set.ops = {k0, k1};
            break;
        }
        case ChannelKind::AmplitudeDamping: {
            M2 k0 = M2::Zero(), k1 = M2::Zero();
            k0(0, 0) = std::sqrt(1.0 - p);
            k0(1, 1) = 1.0;
            k1(1, 0) = std::sqrt(p);  // lowering: up -> down
            set.ops = {k0, k1};
            break;
        }
        case ChannelKind::Depolarizing: {
            // Per-qubit twirl weight w chosen so that acting on both
            // qubits retains weight (1-w)^2 = 1-p on the input.
            double w = 1.0 - std::sqrt(1.0 - p);
            M2 id = M2::Identity();
            M2 x = M2::Zero(), y = M2::Zero(), z = M2::Zero();
            x(0, 1) = x(1, 0) = 1.0;
            y(0, 1) = Complex(0.0, -1.0);
            y(1, 0) = Complex(0.0, 1.0);
            z(0, 0) = 1.0;
            z(1, 1) = -1.0;
            set.ops = {std::sqrt(1.0 - 3.0 * w / 4.0) * id, std::sqrt(w / 4.0) * x,
                       std::sqrt(w / 4.0) * y, std::sqrt(w / 4.0) * z};
            break;
        }
    }
    return set;
}

DensityOperator evolve(ChannelKind kind, const DensityOperator& rho0, double p) {
    check_probability(p);
    require_lr_support(rho0, "evolve");
    const Statistics statistics = rho0.statistics();
    switch (kind) {
        case ChannelKind::PhaseDamping: {
            // Each qubit scales its pseudospin coherences by sqrt(1-p);
            // anti-parallel coherences pick up (1-p) total.
            const double s = std::sqrt(1.0 - p);
            Eigen::Matrix4cd block = extract_lr_block(rho0);
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    int differing = ((r >> 1) != (c >> 1)) + ((r & 1) != (c & 1));
                    block(r, c) *= std::pow(s, differing);
                }
            }
            return DensityOperator(statistics, embed_lr_block(block, statistics));
        }
        case ChannelKind::Depolarizing: {
            Matrix out = (1.0 - p) * rho0.matrix() + p / 4.0 * parity_projector(ParityClass::LR, statistics);
            return DensityOperator(statistics, std::move(out));
        }
        case ChannelKind::AmplitudeDamping: {
            Eigen::Matrix4cd block = extract_lr_block(rho0);
            if (!in_ad_closed_form_family(block))
                return apply_local_pair(local_kraus(kind, p), rho0);
            Matrix out = (1.0 - p) * rho0.matrix() + p * ground_state_density(statistics).matrix();
            return DensityOperator(statistics, std::move(out));
        }
    }
    throw Error("unreachable");
}

DensityOperator apply_local_pair(const KrausSet& kraus, const DensityOperator& rho) {
    require_lr_support(rho, "apply_local_pair");
    Eigen::Matrix4cd block = extract_lr_block(rho);
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (const auto& ki : kraus.ops) {
        for (const auto& kj : kraus.ops) {
            Eigen::Matrix4cd pair = kron2(ki, kj);
            out += pair * block * pair.adjoint();
        }
    }
    return DensityOperator(rho.statistics(), embed_lr_block(out, rho.statistics()));
}

DensityOperator reset_depolarize(Statistics statistics) {
    return DensityOperator(statistics, parity_projector(ParityClass::LR, statistics) / 4.0);
}

DensityOperator reset_amplitude_damp(Statistics statistics) {
    return ground_state_density(statistics);
}

}  // namespace paritydistill
