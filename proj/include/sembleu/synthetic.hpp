// Random AMR-like graphs for tests and benchmarks, plus corruption
// operators that degrade a graph in controlled, seed-reproducible ways.
// Generated graphs are rooted DAGs: a random tree over the variable nodes,
// optional re-entrant edges from lower to higher indices, and constant
// leaves. Labels are lowercase so a serialize/parse round trip is an
// identity on label multisets.
#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "sembleu/graph.hpp"
#include "sembleu/random.hpp"

namespace sembleu {

struct SyntheticConfig {
    std::size_t min_nodes = 8;   // variable nodes; constants come on top
    std::size_t max_nodes = 20;
    double reentrancy_prob = 0.10;
    double constant_prob = 0.20;
    double inverse_prob = 0.08;
};

namespace detail {

inline const std::vector<std::string>& concept_vocab() {
    static const std::vector<std::string> v = {
        "want-01", "go-02",       "say-01",   "make-01",  "ask-01",  "leave-11",
        "see-01",  "know-01",     "boy",      "girl",     "woman",   "man",
        "dog",     "city",        "country",  "pie",      "book",    "house",
        "possible-01", "cause-01", "help-01", "give-01",  "take-01", "run-02",
        "read-01", "write-01",    "eat-01",   "find-01",  "tell-01", "person",
        "thing",   "event",       "day",      "year",     "name",    "team",
        "war",     "peace",       "water",    "big",      "small",   "new",
        "old",     "fast",        "happy",    "red",      "green",   "music"};
    return v;
}

inline const std::vector<std::string>& role_vocab() {
    static const std::vector<std::string> v = {
        "arg0", "arg1", "arg2",   "arg3",       "arg4",   "mod",
        "time", "location", "manner", "poss",   "domain", "purpose",
        "degree", "topic", "instrument", "op1", "op2",    "op3"};
    return v;
}

inline const std::vector<std::string>& constant_name_vocab() {
    static const std::vector<std::string> v = {"boston", "london", "mary", "john"};
    return v;
}

inline bool has_edge(const Graph& g, NodeId source, const std::string& label,
                     NodeId target) {
    for (const Edge& e : g.edges)
        if (e.source == source && e.target == target && e.label == label) return true;
    return false;
}

}  // namespace detail

inline Graph random_graph(Rng& rng, const SyntheticConfig& cfg = {}) {
    if (cfg.min_nodes < 1 || cfg.max_nodes < cfg.min_nodes)
        throw std::invalid_argument("node count range is empty");
    const auto& concepts = detail::concept_vocab();
    const auto& roles = detail::role_vocab();

    std::size_t n = cfg.min_nodes + rng.below(cfg.max_nodes - cfg.min_nodes + 1);
    Graph g;
    g.root = 0;
    for (std::size_t i = 0; i < n; ++i)
        g.nodes.push_back({concepts[rng.below(concepts.size())], "", true});

    // spanning tree: parent index always below the child, so the graph is a
    // DAG rooted at node 0
    for (std::size_t i = 1; i < n; ++i) {
        NodeId parent = static_cast<NodeId>(rng.below(i));
        std::string role = roles[rng.below(roles.size())];
        if (rng.chance(cfg.inverse_prob)) role += "-of";
        g.edges.push_back({parent, static_cast<NodeId>(i), role});
    }

    for (std::size_t v = 2; v < n; ++v) {
        if (!rng.chance(cfg.reentrancy_prob)) continue;
        NodeId u = static_cast<NodeId>(rng.below(v));
        std::string role = roles[rng.below(roles.size())];
        if (!detail::has_edge(g, u, role, static_cast<NodeId>(v)))
            g.edges.push_back({u, static_cast<NodeId>(v), role});
    }

    // constant leaves count toward max_nodes, so stop once the budget is full
    for (std::size_t v = 0; v < n && g.nodes.size() < cfg.max_nodes; ++v) {
        if (!rng.chance(cfg.constant_prob)) continue;
        NodeId owner = static_cast<NodeId>(v);
        NodeId leaf = static_cast<NodeId>(g.nodes.size());
        switch (rng.below(3)) {
            case 0:
                g.nodes.push_back({std::to_string(1 + rng.below(99)), "", false});
                g.edges.push_back({owner, leaf, "quant"});
                break;
            case 1:
                g.nodes.push_back({"-", "", false});
                g.edges.push_back({owner, leaf, "polarity"});
                break;
            default: {
                const auto& names = detail::constant_name_vocab();
                g.nodes.push_back({names[rng.below(names.size())], "", false});
                g.edges.push_back({owner, leaf, "wiki"});
                break;
            }
        }
    }
    return g;
}

// graph i is drawn from its own stream, so corpora are stable under count
// changes and parallel generation
inline std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed,
                                        const SyntheticConfig& cfg = {}) {
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(mix64(seed, i));
        out.push_back(random_graph(rng, cfg));
    }
    return out;
}

namespace detail {

inline Graph prune_unreachable(const Graph& g) {
    std::vector<char> reached(g.nodes.size(), 0);
    std::queue<NodeId> frontier;
    reached[g.root] = 1;
    frontier.push(g.root);
    while (!frontier.empty()) {
        NodeId u = frontier.front();
        frontier.pop();
        for (const Edge& e : g.edges) {
            if (e.source != u || reached[e.target]) continue;
            reached[e.target] = 1;
            frontier.push(e.target);
        }
    }
    std::vector<NodeId> remap(g.nodes.size(), 0);
    Graph out;
    for (NodeId id = 0; id < g.nodes.size(); ++id) {
        if (!reached[id]) continue;
        remap[id] = static_cast<NodeId>(out.nodes.size());
        out.nodes.push_back(g.nodes[id]);
    }
    for (const Edge& e : g.edges)
        if (reached[e.source] && reached[e.target])
            out.edges.push_back({remap[e.source], remap[e.target], e.label});
    out.root = remap[g.root];
    return out;
}

}  // namespace detail

// Deletes up to k edges one at a time, pruning whatever the deletion cut
// off before picking the next edge. Deleting with the same seed and a
// larger k reproduces the smaller run's steps first, so corruption levels
// nest: everything level k removes, level k+1 removes too.
inline Graph delete_edges(const Graph& g, std::size_t k, Rng& rng) {
    Graph out = g;
    for (std::size_t step = 0; step < k && !out.edges.empty(); ++step) {
        std::size_t idx = static_cast<std::size_t>(rng.below(out.edges.size()));
        out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(idx));
        out = detail::prune_unreachable(out);
    }
    return out;
}

// reassigns the concept of up to k distinct variable nodes
inline Graph relabel_nodes(const Graph& g, std::size_t k, Rng& rng) {
    Graph out = g;
    const auto& concepts = detail::concept_vocab();
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < out.nodes.size(); ++i)
        if (out.nodes[i].is_variable) vars.push_back(i);
    for (std::size_t step = 0; step < k && !vars.empty(); ++step) {
        std::size_t pick = static_cast<std::size_t>(rng.below(vars.size()));
        std::size_t node = vars[pick];
        vars[pick] = vars.back();
        vars.pop_back();
        std::string fresh;
        do {
            fresh = concepts[rng.below(concepts.size())];
        } while (fresh == out.nodes[node].label);
        out.nodes[node].label = fresh;
    }
    return out;
}

// reassigns the role of up to k distinct edges
inline Graph relabel_edges(const Graph& g, std::size_t k, Rng& rng) {
    Graph out = g;
    const auto& roles = detail::role_vocab();
    std::vector<std::size_t> ids(out.edges.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    for (std::size_t step = 0; step < k && !ids.empty(); ++step) {
        std::size_t pick = static_cast<std::size_t>(rng.below(ids.size()));
        std::size_t edge = ids[pick];
        ids[pick] = ids.back();
        ids.pop_back();
        std::string fresh;
        do {
            fresh = roles[rng.below(roles.size())];
        } while (fresh == out.edges[edge].label);
        out.edges[edge].label = fresh;
    }
    return out;
}

}  // namespace sembleu
