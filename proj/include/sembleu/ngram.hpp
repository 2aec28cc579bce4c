// Path n-gram extraction. An order-k gram is a directed walk of k nodes
// and k-1 edges; its order counts nodes only, so "ask-01 :ARG0 girl" is a
// bigram. Extraction enumerates every starting node breadth-first from the
// root (unreachable nodes afterwards, in declaration order) and collects
// every walk of up to max_order nodes. Walks may revisit nodes, which keeps
// the definition meaningful on cyclic graphs; the length cap guarantees
// termination.
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sembleu/graph.hpp"

namespace sembleu {

// separator that cannot occur in labels: unit separator U+001F
inline constexpr char kNGramSep = '\x1f';

struct NGram {
    std::vector<std::string> node_labels;
    std::vector<std::string> edge_labels;  // size = node_labels.size() - 1

    std::size_t order() const { return node_labels.size(); }
};

// Deterministic injective encoding: node and edge labels joined
// alternately with the separator.
inline std::string ngram_key(const NGram& ng) {
    std::string key;
    for (std::size_t i = 0; i < ng.node_labels.size(); ++i) {
        if (i) {
            key += kNGramSep;
            key += ng.edge_labels[i - 1];
            key += kNGramSep;
        }
        key += ng.node_labels[i];
    }
    return key;
}

class NGramMultiset {
  public:
    explicit NGramMultiset(std::size_t max_order = 0) : by_order_(max_order) {}

    std::size_t max_order() const { return by_order_.size(); }

    void add(std::size_t order, const std::string& key, std::uint64_t count = 1) {
        by_order_.at(order - 1)[key] += count;
    }

    // total number of order-k grams, multiplicity included
    std::uint64_t total(std::size_t order) const {
        if (order == 0 || order > by_order_.size()) return 0;
        std::uint64_t sum = 0;
        for (const auto& [key, count] : by_order_[order - 1]) sum += count;
        return sum;
    }

    std::uint64_t count(std::size_t order, const std::string& key) const {
        if (order == 0 || order > by_order_.size()) return 0;
        auto it = by_order_[order - 1].find(key);
        return it == by_order_[order - 1].end() ? 0 : it->second;
    }

    const std::unordered_map<std::string, std::uint64_t>& order_counts(std::size_t order) const {
        return by_order_.at(order - 1);
    }

  private:
    std::vector<std::unordered_map<std::string, std::uint64_t>> by_order_;
};

inline std::map<std::size_t, std::uint64_t> ngram_counts_by_order(const NGramMultiset& ms) {
    std::map<std::size_t, std::uint64_t> totals;
    for (std::size_t k = 1; k <= ms.max_order(); ++k) totals[k] = ms.total(k);
    return totals;
}

namespace detail {

// starting nodes: breadth-first from the root, then whatever is
// unreachable, in declaration order
inline std::vector<NodeId> start_order(const Graph& g,
                                       const std::vector<std::vector<std::size_t>>& out_edges) {
    std::vector<NodeId> order;
    order.reserve(g.nodes.size());
    if (g.empty()) return order;
    std::vector<bool> seen(g.nodes.size(), false);
    std::deque<NodeId> queue{g.root};
    seen[g.root] = true;
    while (!queue.empty()) {
        NodeId id = queue.front();
        queue.pop_front();
        order.push_back(id);
        for (std::size_t e : out_edges[id]) {
            NodeId next = g.edges[e].target;
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    for (NodeId id = 0; id < g.nodes.size(); ++id)
        if (!seen[id]) order.push_back(id);
    return order;
}

}  // namespace detail

// The graph is expected to be inverse-normalized already; extraction just
// follows stored edge directions.
inline NGramMultiset extract_ngrams(const Graph& g, std::size_t max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    NGramMultiset ms(max_order);
    if (g.empty()) return ms;

    std::vector<std::vector<std::size_t>> out_edges(g.nodes.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out_edges[g.edges[e].source].push_back(e);

    std::string key;
    auto walk = [&](auto&& self, NodeId id, std::size_t depth) -> void {
        std::size_t mark = key.size();
        key += g.nodes[id].label;
        ms.add(depth, key);
        if (depth < max_order) {
            for (std::size_t e : out_edges[id]) {
                std::size_t edge_mark = key.size();
                key += kNGramSep;
                key += g.edges[e].label;
                key += kNGramSep;
                self(self, g.edges[e].target, depth + 1);
                key.resize(edge_mark);
            }
        }
        key.resize(mark);
    };

    for (NodeId start : detail::start_order(g, out_edges)) walk(walk, start, 1);
    return ms;
}

}  // namespace sembleu
