#include "paritydistill/po_equiv.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace paritydistill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhaseTol = 1e-9;

}  // namespace

CanonicalState CanonicalState::from(const Vector& amplitudes) {
    // Rotate the first significant amplitude real-positive, then quantize
    // to a 1e-9 grid; the grid is far coarser than the accumulated error
    // at the probed depths.
    Vector v = amplitudes;
    for (int i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > kPhaseTol) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    CanonicalState state;
    state.quantized.reserve(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i)
        state.quantized.emplace_back(std::llround(v(i).real() * 1e9), std::llround(v(i).imag() * 1e9));
    return state;
}

std::vector<double> default_thetas() {
    return {kPi, kPi / 2.0, 3.0 * kPi / 2.0};
}

std::vector<ElementSpec> generator_specs(const std::vector<double>& thetas) {
    if (thetas.empty()) throw Error("generator set needs at least one phase angle");
    std::vector<ElementSpec> specs{ElementSpec::bs(), ElementSpec::pr(Spatial::L),
                                   ElementSpec::pr(Spatial::R), ElementSpec::pbs()};
    for (double theta : thetas)
        for (Spatial mode : {Spatial::L, Spatial::R}) specs.push_back(ElementSpec::pips(theta, mode));
    for (double theta : thetas)
        for (Spatial mode : {Spatial::L, Spatial::R})
            for (Pseudospin spin : {Pseudospin::Up, Pseudospin::Down})
                specs.push_back(ElementSpec::pdps(theta, mode, spin));
    return specs;
}

std::vector<LiftedOperator> generator_set(Statistics statistics, const std::vector<double>& thetas) {
    std::vector<LiftedOperator> ops;
    for (const ElementSpec& spec : generator_specs(thetas)) ops.push_back(lift(spec, statistics));
    return ops;
}

std::optional<int> ReachResult::find(const StateVector& psi) const {
    CanonicalState key = CanonicalState::from(psi.amplitudes());
    for (std::size_t i = 0; i < states.size(); ++i)
        if (CanonicalState::from(states[i]) == key) return static_cast<int>(i);
    return std::nullopt;
}

bool ReachResult::contains(NamedLabel label) const {
    return find(named_state(label, statistics)).has_value();
}

namespace {

std::optional<NamedLabel> nearest_named(const Vector& v, Statistics statistics) {
    for (NamedLabel label : named_labels(statistics)) {
        Complex ip = named_state(label, statistics).amplitudes().dot(v);
        if (std::norm(ip) > 1.0 - kPhaseTol) return label;
    }
    return std::nullopt;
}

}  // namespace

ReachResult reach(NamedLabel start, Statistics statistics, int max_depth) {
    if (max_depth < 1) throw Error("max_depth must be positive");
    const auto specs = generator_specs(default_thetas());
    const auto ops = generator_set(statistics, default_thetas());
    const std::string start_label = to_string(start);

    ReachResult result;
    result.statistics = statistics;
    result.start = start;

    std::map<CanonicalState, int> visited;
    std::vector<int> depth;
    auto add_state = [&](const Vector& v, PoPath path) {
        CanonicalState key = CanonicalState::from(v);
        auto [it, inserted] = visited.emplace(key, static_cast<int>(result.states.size()));
        if (!inserted) return -1;
        result.states.push_back(v);
        result.paths.push_back(std::move(path));
        result.labels.push_back(nearest_named(v, statistics));
        return it->second;
    };

    add_state(named_state(start, statistics).amplitudes(), {start_label, start_label, {}});
    depth.push_back(0);
    for (std::size_t head = 0; head < result.states.size(); ++head) {
        if (depth[head] == max_depth) continue;
        for (std::size_t g = 0; g < ops.size(); ++g) {
            Vector next = ops[g].matrix * result.states[head];
            PoPath path = result.paths[head];
            path.elements.push_back(specs[g]);
            int idx = add_state(next, std::move(path));
            if (idx >= 0) depth.push_back(depth[head] + 1);
        }
    }
    for (std::size_t i = 0; i < result.states.size(); ++i)
        result.paths[i].end_label =
            result.labels[i] ? to_string(*result.labels[i]) : "s" + std::to_string(i);
    return result;
}

namespace {

struct EdgeTarget {
    NamedLabel from;
    NamedLabel to;
    ElementSpec stated;
};

EdgeCheck check_edge(const EdgeTarget& edge, Statistics statistics) {
    EdgeCheck check;
    check.from = to_string(edge.from);
    check.to = to_string(edge.to);
    check.stated_device = edge.stated;
    check.realized_device = edge.stated;

    const Vector from = named_state(edge.from, statistics).amplitudes();
    const Vector to = named_state(edge.to, statistics).amplitudes();
    auto try_device = [&](const ElementSpec& spec, Complex* phase) {
        Vector image = lift(spec, statistics).matrix * from;
        return equal_up_to_phase(image, to, kPhaseTol, phase);
    };

    Complex phase;
    check.stated_device_pass = try_device(edge.stated, &phase);
    if (check.stated_device_pass) {
        check.pass = true;
        check.realized_phase = phase;
        return check;
    }
    if (edge.stated.kind == ElementKind::PIPS) {
        // A pseudospin-blind phase on one spatial mode is a global phase on
        // any state with a fixed particle count there; the pseudospin-
        // resolved shifter at the same angle realizes the link.
        ElementSpec pdps = ElementSpec::pdps(*edge.stated.theta, *edge.stated.spatial_target, Pseudospin::Up);
        if (try_device(pdps, &phase)) {
            check.realized_device = pdps;
            check.realized_phase = phase;
            check.pass = true;
        }
    }
    return check;
}

}  // namespace

bool EdgeReport::all_pass() const {
    for (const auto& edge : edges)
        if (!edge.pass) return false;
    return true;
}

EdgeReport verify_stated_edges(Statistics statistics) {
    using L = NamedLabel;
    EdgeReport report;
    report.statistics = statistics;

    std::vector<EdgeTarget> targets{
        {L::OneMinusLR, L::OnePlusLR, ElementSpec::pips(kPi, Spatial::L)},
        {L::TwoMinusLR, L::TwoPlusLR, ElementSpec::pips(kPi, Spatial::L)},
        {L::OneMinusNO, L::OnePlusNO, ElementSpec::pips(kPi / 2.0, Spatial::L)},
        {L::OneMinusLR, L::TwoMinusLR, ElementSpec::pr(Spatial::L)},
        {L::OnePlusLR, L::TwoPlusLR, ElementSpec::pr(Spatial::L)},
    };
    if (statistics == Statistics::Fermion)
        targets.push_back({L::OneMinusLR, L::OneMinusNO, ElementSpec::bs()});
    else
        targets.push_back({L::OnePlusLR, L::OneMinusNO, ElementSpec::bs()});

    for (const auto& target : targets) report.edges.push_back(check_edge(target, statistics));

    for (const auto& edge : report.edges) {
        if (!edge.stated_device_pass && edge.pass)
            report.notes.push_back("edge " + edge.from + " <-> " + edge.to + ": " +
                                   to_string(edge.stated_device) +
                                   " acts as a global phase on one-particle-per-mode states; realized by " +
                                   to_string(edge.realized_device));
    }
    if (statistics == Statistics::Fermion)
        report.notes.push_back(
            "all six fermionic maximally entangled labels are mutually reachable through these edges; "
            "any partition of them into two non-communicating sets is inconsistent with this report");
    return report;
}

PoGraph build_po_graph(Statistics statistics, int depth) {
    if (depth < 1) throw Error("depth must be positive");
    const auto specs = generator_specs(default_thetas());
    const auto ops = generator_set(statistics, default_thetas());

    PoGraph graph;
    graph.statistics = statistics;
    graph.depth = depth;

    std::map<CanonicalState, int> visited;
    std::vector<Vector> states;
    std::vector<int> node_depth;
    std::map<std::pair<int, int>, std::string> edge_map;

    auto add_node = [&](const Vector& v) {
        CanonicalState key = CanonicalState::from(v);
        auto [it, inserted] = visited.emplace(key, static_cast<int>(states.size()));
        if (inserted) {
            states.push_back(v);
            graph.nodes.push_back({it->second, nearest_named(v, statistics)});
        }
        return std::pair{it->second, inserted};
    };

    for (NamedLabel seed : named_labels(statistics)) {
        auto [root, fresh] = add_node(named_state(seed, statistics).amplitudes());
        if (!fresh) continue;  // already inside an earlier closure
        node_depth.resize(states.size(), 0);
        node_depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int head = queue.front();
            queue.pop_front();
            if (node_depth[head] >= depth) continue;
            for (std::size_t g = 0; g < ops.size(); ++g) {
                Vector next = ops[g].matrix * states[head];
                auto [idx, inserted] = add_node(next);
                if (inserted) {
                    node_depth.resize(states.size(), 0);
                    node_depth[idx] = node_depth[head] + 1;
                    queue.push_back(idx);
                }
                if (idx != head) {
                    auto key = std::minmax(head, idx);
                    edge_map.emplace(std::pair{key.first, key.second}, to_string(specs[g]));
                }
            }
        }
    }

    for (const auto& [pair, element] : edge_map) graph.edges.push_back({pair.first, pair.second, element});

    // Connected components via union-find, reported in order of their
    // smallest node id.
    std::vector<int> parent(states.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find_root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& edge : graph.edges) {
        int a = find_root(edge.source), b = find_root(edge.target);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> by_root;
    for (std::size_t i = 0; i < parent.size(); ++i)
        by_root[find_root(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, members] : by_root) graph.components.push_back(std::move(members));
    for (const auto& node : graph.nodes) {
        if (!node.label) continue;
        for (std::size_t c = 0; c < graph.components.size(); ++c)
            for (int member : graph.components[c])
                if (member == node.id) graph.label_components[to_string(*node.label)] = static_cast<int>(c);
    }
    return graph;
}

std::string to_dot(const PoGraph& graph) {
    std::ostringstream out;
    out << "graph po_" << to_string(graph.statistics) << " {\n";
    out << "  node [shape=ellipse];\n";
    for (const auto& node : graph.nodes) {
        out << "  n" << node.id << " [label=\""
            << (node.label ? to_string(*node.label) : "s" + std::to_string(node.id)) << "\"];\n";
    }
    for (const auto& edge : graph.edges)
        out << "  n" << edge.source << " -- n" << edge.target << " [label=\"" << edge.element << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const PoGraph& graph) {
    std::ostringstream out;
    out << "{\"statistics\":\"" << to_string(graph.statistics) << "\",\"depth\":" << graph.depth
        << ",\"nodes\":[";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        if (i) out << ",";
        out << "{\"id\":" << graph.nodes[i].id;
        if (graph.nodes[i].label) out << ",\"label\":\"" << to_string(*graph.nodes[i].label) << "\"";
        out << "}";
    }
    out << "],\"edges\":[";
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        if (i) out << ",";
        out << "{\"source\":" << graph.edges[i].source << ",\"target\":" << graph.edges[i].target
            << ",\"element\":\"" << graph.edges[i].element << "\"}";
    }
    out << "],\"components\":[";
    for (std::size_t c = 0; c < graph.components.size(); ++c) {
        if (c) out << ",";
        out << "[";
        for (std::size_t k = 0; k < graph.components[c].size(); ++k) {
            if (k) out << ",";
            out << graph.components[c][k];
        }
        out << "]";
    }
    out << "],\"label_components\":{";
    bool first = true;
    for (const auto& [label, component] : graph.label_components) {
        if (!first) out << ",";
        first = false;
        out << "\"" << label << "\":" << component;
    }
    out << "}}";
    return out.str();
}

}  // namespace paritydistill
