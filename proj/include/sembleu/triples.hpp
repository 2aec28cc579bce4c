// Bag-of-triples view of a graph: one instance triple per variable, one
// relation or attribute triple per edge, one top triple for the root.
// Inverse relations are reverted first, the same way normalize_inverse
// does it, so triple matching and n-gram matching see identical edge
// directions.
#pragma once

#include <string>
#include <vector>

#include "sembleu/graph.hpp"

namespace sembleu {

enum class TripleKind { Instance, Relation, Attribute, Top };

struct Triple {
    TripleKind kind;
    std::string label;  // relation/attribute name; empty for instance and top
    NodeId node_a = 0;  // variable (instance/attribute), source (relation), root (top)
    NodeId node_b = 0;  // target variable (relation only)
    std::string text;   // concept (instance/top) or constant (attribute)
};

inline std::vector<Triple> graph_to_triples(const Graph& g, const InverseOptions& opts = {}) {
    std::vector<Triple> out;
    if (g.empty()) return out;
    out.reserve(g.nodes.size() + g.edges.size() + 1);

    for (NodeId id = 0; id < g.nodes.size(); ++id)
        if (g.nodes[id].is_variable)
            out.push_back({TripleKind::Instance, "", id, 0, g.nodes[id].label});

    for (const Edge& edge : g.edges) {
        NodeId src = edge.source;
        NodeId tgt = edge.target;
        std::string label = edge.label;
        if (opts.is_inverse(label)) {
            std::swap(src, tgt);
            label.erase(label.size() - 3);
        }
        if (g.nodes[src].is_variable && g.nodes[tgt].is_variable) {
            out.push_back({TripleKind::Relation, std::move(label), src, tgt, ""});
        } else {
            // exactly one endpoint can be a constant; it becomes the
            // attribute value, the variable endpoint the owner
            NodeId var = g.nodes[src].is_variable ? src : tgt;
            NodeId constant = g.nodes[src].is_variable ? tgt : src;
            out.push_back({TripleKind::Attribute, std::move(label), var, 0,
                           g.nodes[constant].label});
        }
    }

    out.push_back({TripleKind::Top, "", g.root, 0, g.nodes[g.root].label});
    return out;
}

}  // namespace sembleu
