// Rooted, labeled, directed graph model for AMR-style semantic graphs.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sembleu {

using NodeId = std::uint32_t;

struct Node {
    std::string label;   // concept for variable nodes, surface form for constants
    std::string var;     // variable name, empty for constant nodes
    bool is_variable = true;
};

struct Edge {
    NodeId source = 0;
    NodeId target = 0;
    std::string label;   // relation name, no leading colon
};

// Nodes are addressed by index; the root must be one of them. Node labels
// may repeat, node ids may not (guaranteed by construction).
struct Graph {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    NodeId root = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    bool empty() const { return nodes.empty(); }
};

// |G| = |G.nodes| + |G.edges|, the size used by the brevity penalty.
inline std::size_t graph_size(const Graph& g) {
    return g.nodes.size() + g.edges.size();
}

// Roles that end in "-of" lexically but are not inversions and must be
// kept as-is when reverting inverse relations.
struct InverseOptions {
    std::unordered_set<std::string> exceptions = default_exceptions();

    static std::unordered_set<std::string> default_exceptions() {
        return {"consist-of", "prep-out-of", "prep-on-behalf-of"};
    }

    bool is_inverse(const std::string& label) const {
        return label.size() > 3 && label.ends_with("-of") &&
               exceptions.find(label) == exceptions.end();
    }
};

// Revert every inverse relation: an edge (s -X-of-> t) becomes (t -X-> s).
// Node set and edge count are unchanged; the stored root designation is
// kept even if the result is no longer reachable from it.
inline Graph normalize_inverse(const Graph& g, const InverseOptions& opts = {}) {
    Graph out = g;
    for (Edge& e : out.edges) {
        if (opts.is_inverse(e.label)) {
            std::swap(e.source, e.target);
            e.label.erase(e.label.size() - 3);
        }
    }
    return out;
}

}  // namespace sembleu
