#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paritydistill/elements.hpp"

namespace paritydistill {

/// Phase-normalized, grid-quantized fingerprint of a sector state: the
/// first amplitude with magnitude > 1e-9 is rotated real-positive, then
/// every component is rounded to a 1e-9 grid. Two states map to the same
/// fingerprint iff they differ only by a global phase (within tolerance).
struct CanonicalState {
    std::vector<std::pair<std::int64_t, std::int64_t>> quantized;

    static CanonicalState from(const Vector& amplitudes);
    bool operator==(const CanonicalState&) const = default;
    bool operator<(const CanonicalState& other) const { return quantized < other.quantized; }
};

/// A replayable certificate: applying `elements` in order to the start
/// state reproduces the end state up to a global phase within 1e-9.
struct PoPath {
    std::string start_label;
    std::string end_label;  // named label, or "s<i>" for anonymous states
    std::vector<ElementSpec> elements;
};

/// Default phase-shifter angles {pi, pi/2, 3pi/2}; including 2pi - theta
/// makes every generator's inverse available, so reachability is symmetric.
std::vector<double> default_thetas();

/// Lifted generators: BS, PR(L), PR(R), PBS, and PIPS/PDPS at each theta
/// and each target. Order is fixed and deterministic.
std::vector<ElementSpec> generator_specs(const std::vector<double>& thetas);
std::vector<LiftedOperator> generator_set(Statistics statistics, const std::vector<double>& thetas);

/// Breadth-first closure of the generator set from a named start state,
/// up to max_depth elements, modulo global phase. States and shortest
/// paths are listed in discovery order.
struct ReachResult {
    Statistics statistics = Statistics::Fermion;
    NamedLabel start = NamedLabel::OneMinusLR;
    std::vector<Vector> states;  // representative amplitudes
    std::vector<PoPath> paths;   // parallel to states
    std::vector<std::optional<NamedLabel>> labels;  // named match when fidelity > 1 - 1e-9

    std::optional<int> find(const StateVector& psi) const;
    bool contains(NamedLabel label) const;
};

ReachResult reach(NamedLabel start, Statistics statistics, int max_depth);

/// One text-stated equivalence edge, checked with the literally stated
/// device and, where that device acts only as a global phase, with the
/// polarization-resolved phase shifter of the same angle on the same
/// spatial mode.
struct EdgeCheck {
    std::string from;
    std::string to;
    ElementSpec stated_device;
    bool stated_device_pass = false;  // reaches the target up to global phase
    ElementSpec realized_device;      // device that realizes the edge
    bool pass = false;                // edge realized by realized_device
    Complex realized_phase{0.0, 0.0}; // global phase realized_device produces
};

struct EdgeReport {
    Statistics statistics = Statistics::Fermion;
    std::vector<EdgeCheck> edges;
    std::vector<std::string> notes;

    bool all_pass() const;
};

/// Checks each stated equivalence edge: pi phase shift linking 1-LR to
/// 1+LR and 2-LR to 2+LR, pi/2 phase shift linking 1-NO to 1+NO, PR
/// linking 1-LR to 2-LR and 1+LR to 2+LR, and the BS edge (1-LR to 1-NO
/// for fermions, 1+LR to 1-NO for bosons).
EdgeReport verify_stated_edges(Statistics statistics);

/// Union of BFS closures from every named state, with nodes labeled by
/// named states where they match, undirected edges labeled by elements,
/// and connected components.
struct PoGraph {
    Statistics statistics = Statistics::Fermion;
    int depth = 0;
    struct Node {
        int id = 0;
        std::optional<NamedLabel> label;
    };
    struct Edge {
        int source = 0;
        int target = 0;
        std::string element;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> components;            // node ids per component
    std::map<std::string, int> label_components;         // named label -> component index
};

PoGraph build_po_graph(Statistics statistics, int depth);

std::string to_dot(const PoGraph& graph);
std::string to_json(const PoGraph& graph);

}  // namespace paritydistill
