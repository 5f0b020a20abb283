#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paritydistill/fock.hpp"

using namespace paritydistill;

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;

double amp_at(const StateVector& psi, const Occupancy& occ) {
    int idx = psi.basis().index_of(occ);
    REQUIRE(idx >= 0);
    return psi.amplitudes()(idx).real();
}
}  // namespace

TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(Statistics::Boson).dim() == 10);
    CHECK(enumerate_basis(Statistics::Fermion).dim() == 6);

    // Deterministic and canonical: lexicographically descending.
    auto boson = enumerate_basis(Statistics::Boson);
    CHECK(boson.states.front().occupancy == Occupancy{2, 0, 0, 0});
    CHECK(boson.states.back().occupancy == Occupancy{0, 0, 0, 2});
    for (int i = 0; i + 1 < boson.dim(); ++i)
        CHECK(boson.states[i].occupancy > boson.states[i + 1].occupancy);

    for (const auto& state : enumerate_basis(Statistics::Fermion).states) {
        CHECK(state.total() == 2);
        for (int n : state.occupancy) CHECK(n <= 1);
    }
}

TEST_CASE("mode order is L-up, L-down, R-up, R-down") {
    CHECK(kLUp.linear() == 0);
    CHECK(kLDown.linear() == 1);
    CHECK(kRUp.linear() == 2);
    CHECK(kRDown.linear() == 3);
    for (int i = 0; i < 4; ++i) CHECK(ModeIndex::from_linear(i).linear() == i);
}

TEST_CASE("product states and fermionic signs") {
    StateVector boson = product_state(kLUp, kRDown, Statistics::Boson);
    CHECK(amp_at(boson, {1, 0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(product_state(kLUp, kLUp, Statistics::Fermion), PauliViolation);

    // Swapping fermion arguments flips the global sign componentwise.
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            auto ab = product_state(ModeIndex::from_linear(a), ModeIndex::from_linear(b), Statistics::Fermion);
            auto ba = product_state(ModeIndex::from_linear(b), ModeIndex::from_linear(a), Statistics::Fermion);
            CHECK((ab.amplitudes() + ba.amplitudes()).norm() == doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    // |Ldown,Rdown> = (|2+> - |2->)/sqrt(2).
    StateVector ground = product_state(kLDown, kRDown, Statistics::Fermion);
    Vector expected = (named_state(NamedLabel::TwoPlusLR, Statistics::Fermion).amplitudes() -
                       named_state(NamedLabel::TwoMinusLR, Statistics::Fermion).amplitudes()) /
                      std::numbers::sqrt2;
    CHECK((ground.amplitudes() - expected).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("named states realize the defining superpositions") {
    StateVector singlet = named_state(NamedLabel::OneMinusLR, Statistics::Fermion);
    CHECK(amp_at(singlet, {1, 0, 0, 1}) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(amp_at(singlet, {0, 1, 1, 0}) == doctest::Approx(-kInvSqrt2).epsilon(1e-12));

    CHECK_THROWS_AS(named_state(NamedLabel::UPlusNO, Statistics::Fermion), InvalidForStatistics);

    StateVector u_plus = named_state(NamedLabel::UPlusNO, Statistics::Boson);
    CHECK(amp_at(u_plus, {2, 0, 0, 0}) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(amp_at(u_plus, {0, 0, 2, 0}) == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        for (NamedLabel label : named_labels(s)) {
            StateVector psi = named_state(label, s);
            CHECK(std::abs(psi.amplitudes().norm() - 1.0) <= 1e-12);
            CHECK(psi.supported_in(parity_class_of(label)));
        }
    }
}

TEST_CASE("named states are orthonormal") {
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        auto labels = named_labels(s);
        for (std::size_t r = 0; r < labels.size(); ++r) {
            for (std::size_t c = 0; c < labels.size(); ++c) {
                Complex ip = overlap(named_state(labels[r], s), named_state(labels[c], s));
                CHECK(std::abs(ip - (r == c ? 1.0 : 0.0)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("parity projectors") {
    Matrix lr = parity_projector(ParityClass::LR, Statistics::Fermion);
    Matrix no = parity_projector(ParityClass::NO, Statistics::Fermion);
    CHECK(lr.trace().real() == doctest::Approx(4.0));  // rank 4
    CHECK(no.trace().real() == doctest::Approx(2.0));  // rank 2 = 6 - 4
    CHECK((lr + no - Matrix::Identity(6, 6)).norm() <= 1e-12);
    CHECK((lr * no).norm() <= 1e-12);
    CHECK((lr * lr - lr).norm() <= 1e-12);
}

TEST_CASE("mixture, purity, fidelity") {
    StateVector singlet = named_state(NamedLabel::OneMinusLR, Statistics::Fermion);
    DensityOperator pure = mixture({1.0}, {singlet});
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));

    DensityOperator mixed(Statistics::Fermion, parity_projector(ParityClass::LR, Statistics::Fermion) / 4.0);
    CHECK(fidelity(mixed, mixed) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(mixed, pure) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fidelity(pure, mixed) == doctest::Approx(0.25).epsilon(1e-12));

    // Pure inputs reduce to the squared overlap.
    StateVector plus = named_state(NamedLabel::OnePlusLR, Statistics::Fermion);
    StateVector mix_state(Statistics::Fermion,
                          (singlet.amplitudes() + plus.amplitudes()) / std::numbers::sqrt2);
    DensityOperator other = DensityOperator::pure(mix_state);
    CHECK(fidelity(pure, other) == doctest::Approx(std::norm(overlap(singlet, mix_state))).epsilon(1e-12));

    CHECK_THROWS_AS(mixture({0.7, 0.7}, {singlet, plus}), InvalidProbability);
}

TEST_CASE("label serialization round trip") {
    for (int i = 0; i < 10; ++i) {
        auto label = static_cast<NamedLabel>(i);
        auto parsed = parse_named_label(to_string(label));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == label);
    }
    CHECK(to_string(NamedLabel::OneMinusLR) == "1-LR");
    CHECK(to_string(NamedLabel::UPlusNO) == "U+NO");
    CHECK(!parse_named_label("3-LR").has_value());
}

TEST_CASE("density operator validation") {
    CHECK_THROWS_AS(DensityOperator(Statistics::Fermion, Matrix::Identity(6, 6)), Error);  // trace 6
    Matrix bad = Matrix::Zero(6, 6);
    bad(0, 1) = 1.0;
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(DensityOperator(Statistics::Fermion, bad), Error);  // not Hermitian
    CHECK_THROWS_AS(StateVector(Statistics::Fermion, Vector::Zero(6)), Error);  // not normalized
    CHECK_THROWS_AS(StateVector(Statistics::Fermion, Vector::Zero(10)), DimensionMismatch);
}
