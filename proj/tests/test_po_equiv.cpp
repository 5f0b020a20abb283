#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paritydistill/po_equiv.hpp"

using namespace paritydistill;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("canonical states are phase blind") {
    Vector v = named_state(NamedLabel::OneMinusLR, Statistics::Fermion).amplitudes();
    Vector rotated = std::polar(1.0, 1.23456) * v;
    CHECK(CanonicalState::from(v) == CanonicalState::from(rotated));
    Vector other = named_state(NamedLabel::OnePlusLR, Statistics::Fermion).amplitudes();
    CHECK(!(CanonicalState::from(v) == CanonicalState::from(other)));
}

TEST_CASE("default generator set") {
    auto specs = generator_specs(default_thetas());
    bool has_pi_pips = false, has_half_pi_pips = false, has_pdps = false;
    for (const auto& spec : specs) {
        if (to_string(spec) == "PIPS(pi,L)") has_pi_pips = true;
        if (to_string(spec) == "PIPS(pi/2,L)") has_half_pi_pips = true;
        if (to_string(spec) == "PDPS(pi,L,up)") has_pdps = true;
    }
    CHECK(has_pi_pips);
    CHECK(has_half_pi_pips);
    CHECK(has_pdps);

    for (Statistics s : {Statistics::Boson, Statistics::Fermion})
        for (const auto& op : generator_set(s, default_thetas()))
            CHECK(unitarity_defect(op.matrix) <= 1e-12);

    CHECK_THROWS_AS(generator_specs({}), Error);
}

TEST_CASE("single-element reachability") {
    ReachResult result = reach(NamedLabel::OneMinusLR, Statistics::Fermion, 1);
    CHECK(result.contains(NamedLabel::OneMinusNO));  // via BS
    CHECK(result.contains(NamedLabel::TwoMinusLR));  // via PR
    CHECK(result.contains(NamedLabel::OnePlusLR));   // via the pi phase (pseudospin resolved)

    // The PR link is local, so it holds for either statistics.
    ReachResult boson = reach(NamedLabel::OneMinusLR, Statistics::Boson, 1);
    CHECK(boson.contains(NamedLabel::TwoMinusLR));
}

TEST_CASE("fermionic full connectivity within depth 4") {
    for (NamedLabel start : named_labels(Statistics::Fermion)) {
        ReachResult result = reach(start, Statistics::Fermion, 4);
        for (NamedLabel other : named_labels(Statistics::Fermion)) CHECK(result.contains(other));
    }
}

TEST_CASE("paths replay") {
    ReachResult result = reach(NamedLabel::OneMinusLR, Statistics::Fermion, 3);
    Vector start = named_state(NamedLabel::OneMinusLR, Statistics::Fermion).amplitudes();
    for (std::size_t i = 0; i < result.states.size(); ++i) {
        Vector v = start;
        for (const auto& spec : result.paths[i].elements)
            v = lift(spec, Statistics::Fermion).matrix * v;
        CHECK(equal_up_to_phase(v, result.states[i], 1e-9));
        CHECK(result.paths[i].elements.size() <= 3);
    }
}

TEST_CASE("stated edges, fermion") {
    EdgeReport report = verify_stated_edges(Statistics::Fermion);
    REQUIRE(report.edges.size() == 6);
    CHECK(report.all_pass());

    // The two pi-phase Bell links need the pseudospin-resolved shifter;
    // the blind one only contributes a global phase there.
    CHECK(!report.edges[0].stated_device_pass);
    CHECK(report.edges[0].pass);
    CHECK(to_string(report.edges[0].realized_device) == "PDPS(pi,L,up)");
    CHECK(!report.edges[1].stated_device_pass);

    // The NOON pair link works with the blind shifter: both particles sit
    // in one mode, so the relative phase doubles.
    CHECK(report.edges[2].stated_device_pass);
    CHECK(std::abs(report.edges[2].realized_phase - Complex(-1.0, 0.0)) <= 1e-9);

    // PR links and the BS link hold as stated.
    CHECK(report.edges[3].stated_device_pass);
    CHECK(report.edges[4].stated_device_pass);
    CHECK(report.edges[5].stated_device_pass);
    CHECK(std::abs(report.edges[5].realized_phase - Complex(1.0, 0.0)) <= 1e-9);

    CHECK(!report.notes.empty());
}

TEST_CASE("stated edges, boson") {
    EdgeReport boson = verify_stated_edges(Statistics::Boson);
    EdgeReport fermion = verify_stated_edges(Statistics::Fermion);
    CHECK(boson.all_pass());
    // Local edges are statistics independent.
    for (std::size_t k = 0; k + 1 < boson.edges.size(); ++k) {
        CHECK(boson.edges[k].from == fermion.edges[k].from);
        CHECK(boson.edges[k].stated_device_pass == fermion.edges[k].stated_device_pass);
        CHECK(std::abs(boson.edges[k].realized_phase - fermion.edges[k].realized_phase) <= 1e-9);
    }
    // The bosonic BS edge connects the triplet to the NOON singlet.
    CHECK(boson.edges.back().from == "1+LR");
    CHECK(boson.edges.back().to == "1-NO");
    CHECK(boson.edges.back().stated_device_pass);
}

TEST_CASE("bosonic parity classes stay separated at shallow depth") {
    ReachResult result = reach(NamedLabel::OneMinusLR, Statistics::Boson, 3);
    CHECK(!result.contains(NamedLabel::UPlusNO));
    CHECK(!result.contains(NamedLabel::DPlusNO));
}

TEST_CASE("po graph structure") {
    PoGraph graph = build_po_graph(Statistics::Fermion, 3);
    REQUIRE(!graph.nodes.empty());
    // All six named labels live in one component.
    int component = graph.label_components.at("1-LR");
    for (NamedLabel label : named_labels(Statistics::Fermion))
        CHECK(graph.label_components.at(to_string(label)) == component);

    std::string dot = to_dot(graph);
    CHECK(dot.find("graph po_fermion") != std::string::npos);
    CHECK(dot.find("n0 [label=\"1-LR\"]") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);

    std::string json = to_json(graph);
    CHECK(json.find("\"label_components\"") != std::string::npos);
    CHECK(json == to_json(build_po_graph(Statistics::Fermion, 3)));

    PoGraph boson = build_po_graph(Statistics::Boson, 2);
    CHECK(boson.label_components.at("1-LR") != boson.label_components.at("U+NO"));
}
