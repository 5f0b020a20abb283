#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paritydistill/elements.hpp"
#include "paritydistill/oracle.hpp"

using namespace paritydistill;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;

Vector named_amps(NamedLabel label, Statistics s) {
    return named_state(label, s).amplitudes();
}
}  // namespace

TEST_CASE("single-particle beam splitter matrix") {
    Eigen::Matrix4cd bs = element_unitary(ElementSpec::bs()).matrix;
    Eigen::Matrix4cd expected;
    expected << 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 0, 1, 0, -1;
    expected *= kInvSqrt2;
    CHECK((bs - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("element conventions") {
    CHECK((element_unitary(ElementSpec::pips(0.0, Spatial::L)).matrix - Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);

    Eigen::Matrix4cd pr = element_unitary(ElementSpec::pr(Spatial::L)).matrix;
    CHECK((pr * pr - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(pr(1, 0) - 1.0) <= 1e-12);  // L-up -> L-down
    CHECK(std::abs(pr(2, 2) - 1.0) <= 1e-12);  // R untouched

    Eigen::Matrix4cd pdps = element_unitary(ElementSpec::pdps(kPi / 2, Spatial::R, Pseudospin::Up)).matrix;
    CHECK(std::abs(pdps(2, 2) - Complex(0.0, 1.0)) <= 1e-12);
    CHECK(std::abs(pdps(3, 3) - 1.0) <= 1e-12);

    Eigen::Matrix4cd pbs = element_unitary(ElementSpec::pbs()).matrix;
    CHECK(std::abs(pbs(0, 0) - 1.0) <= 1e-12);  // up transmitted
    CHECK(std::abs(pbs(3, 1) - 1.0) <= 1e-12);  // down swapped

    CHECK_THROWS_AS(element_unitary({ElementKind::PIPS, std::nullopt, Spatial::L, std::nullopt}),
                    MissingParameter);
    CHECK_THROWS_AS(element_unitary({ElementKind::PR, std::nullopt, std::nullopt, std::nullopt}),
                    MissingParameter);
}

TEST_CASE("element spec serialization") {
    CHECK(to_string(ElementSpec::bs()) == "BS");
    CHECK(to_string(ElementSpec::pbs()) == "PBS");
    CHECK(to_string(ElementSpec::pr(Spatial::L)) == "PR(L)");
    CHECK(to_string(ElementSpec::pips(kPi, Spatial::L)) == "PIPS(pi,L)");
    CHECK(to_string(ElementSpec::pdps(kPi / 2, Spatial::R, Pseudospin::Up)) == "PDPS(pi/2,R,up)");
    CHECK(to_string(ElementSpec::pips(3 * kPi / 2, Spatial::R)) == "PIPS(3pi/2,R)");
}

TEST_CASE("fermionic beam splitter table") {
    const Statistics f = Statistics::Fermion;
    const Matrix bs = lift(ElementSpec::bs(), f).matrix;

    CHECK((bs * named_amps(NamedLabel::OneMinusLR, f) - named_amps(NamedLabel::OneMinusNO, f)).norm() <=
          1e-12);
    CHECK((bs * named_amps(NamedLabel::OnePlusLR, f) + named_amps(NamedLabel::OnePlusLR, f)).norm() <=
          1e-12);
    CHECK((bs * named_amps(NamedLabel::TwoMinusLR, f) + named_amps(NamedLabel::TwoMinusLR, f)).norm() <=
          1e-12);
    CHECK((bs * named_amps(NamedLabel::TwoPlusLR, f) + named_amps(NamedLabel::TwoPlusLR, f)).norm() <=
          1e-12);
    // The arrows are bidirectional.
    CHECK((bs * named_amps(NamedLabel::OneMinusNO, f) - named_amps(NamedLabel::OneMinusLR, f)).norm() <=
          1e-12);
}

TEST_CASE("bosonic beam splitter table") {
    const Statistics b = Statistics::Boson;
    const Matrix bs = lift(ElementSpec::bs(), b).matrix;

    CHECK((bs * named_amps(NamedLabel::OneMinusLR, b) + named_amps(NamedLabel::OneMinusLR, b)).norm() <=
          1e-12);
    CHECK((bs * named_amps(NamedLabel::OnePlusLR, b) - named_amps(NamedLabel::OneMinusNO, b)).norm() <=
          1e-12);
    Vector u_minus = named_amps(NamedLabel::UMinusNO, b);
    Vector d_minus = named_amps(NamedLabel::DMinusNO, b);
    CHECK((bs * named_amps(NamedLabel::TwoMinusLR, b) - (u_minus - d_minus) / std::numbers::sqrt2).norm() <=
          1e-12);
    CHECK((bs * named_amps(NamedLabel::TwoPlusLR, b) - (u_minus + d_minus) / std::numbers::sqrt2).norm() <=
          1e-12);
}

TEST_CASE("bosonic bunching and fermionic antibunching of the ground state") {
    // |Ldown,Rdown> bunches into |D-> for bosons and is invariant (up to
    // sign) for fermions.
    Vector ground_b = product_state(kLDown, kRDown, Statistics::Boson).amplitudes();
    Matrix bs_b = lift(ElementSpec::bs(), Statistics::Boson).matrix;
    CHECK((bs_b * ground_b - named_amps(NamedLabel::DMinusNO, Statistics::Boson)).norm() <= 1e-12);

    Vector ground_f = product_state(kLDown, kRDown, Statistics::Fermion).amplitudes();
    Matrix bs_f = lift(ElementSpec::bs(), Statistics::Fermion).matrix;
    CHECK((bs_f * ground_f + ground_f).norm() <= 1e-12);
}

TEST_CASE("lift rejects non-unitary input") {
    SingleParticleUnitary bad{Eigen::Matrix4cd::Identity() * 2.0, "scaled"};
    CHECK_THROWS_AS(lift(bad, Statistics::Fermion), NotUnitary);
}

TEST_CASE("lift of the identity is the identity") {
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        LiftedOperator id = lift(SingleParticleUnitary{Eigen::Matrix4cd::Identity(), "id"}, s);
        CHECK((id.matrix - Matrix::Identity(id.dim(), id.dim())).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("lifted operators are unitary and number preserving") {
    std::mt19937_64 rng(7);
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        for (int k = 0; k < 10; ++k) {
            SingleParticleUnitary u{random_unitary(4, rng), "random"};
            CHECK(unitarity_defect(lift(u, s).matrix) <= 1e-12);
        }
    }
}

TEST_CASE("apply and compose") {
    const Statistics f = Statistics::Fermion;
    StateVector noon = named_state(NamedLabel::OneMinusNO, f);
    LiftedOperator bs = lift(ElementSpec::bs(), f);
    StateVector back = apply_to_state(bs, noon);
    CHECK((back.amplitudes() - named_amps(NamedLabel::OneMinusLR, f)).norm() <= 1e-12);

    DensityOperator rho = DensityOperator::pure(noon);
    DensityOperator evolved = apply_to_density(bs, rho);
    CHECK(std::abs(evolved.matrix().trace().real() - 1.0) <= 1e-12);

    LiftedOperator pr = lift(ElementSpec::pr(Spatial::L), f);
    std::vector<LiftedOperator> twice{pr, pr};
    LiftedOperator composed = compose(twice);
    CHECK((composed.matrix - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(composed.source == "composite");

    LiftedOperator boson_bs = lift(ElementSpec::bs(), Statistics::Boson);
    CHECK_THROWS_AS(apply_to_state(boson_bs, noon), DimensionMismatch);
}

TEST_CASE("lift agrees with the first-quantized oracle") {
    std::mt19937_64 rng(11);
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        for (int k = 0; k < 20; ++k) {
            SingleParticleUnitary u{random_unitary(4, rng), "random"};
            CHECK(max_abs_diff(lift(u, s).matrix, oracle::lift_oracle(u, s)) <= 1e-10);
        }
    }
}
