// Smatch: triple-overlap F1 between two graphs under an injective mapping
// of candidate variables to reference variables, searched by greedy
// hill-climbing with random restarts.
//
// Matching is multiset-aware: each reference triple can absorb at most as
// many candidate triples as its own multiplicity. The top triple matches
// when the roots map to each other and, in the default Concept mode, the
// root concepts agree as well; RootOnly drops the concept requirement.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sembleu/graph.hpp"
#include "sembleu/random.hpp"
#include "sembleu/triples.hpp"

namespace sembleu {

enum class TopMode { Concept, RootOnly };

struct SmatchOptions {
    int restarts = 4;
    std::uint64_t seed = 0;
    TopMode top = TopMode::Concept;
    InverseOptions inverse;

    void validate() const {
        if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    }
};

struct SmatchResult {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t matched_triples = 0;
    std::uint64_t candidate_triples = 0;
    std::uint64_t reference_triples = 0;
    // mapping[i] is the reference var index candidate var i maps to, -1 if
    // unmapped; candidate_vars/reference_vars hold the node ids behind the
    // indices
    std::vector<std::int32_t> mapping;
    std::vector<NodeId> candidate_vars;
    std::vector<NodeId> reference_vars;
    int restarts_used = 0;
    std::vector<double> restart_f1;
};

// Precomputed matching state for one candidate/reference pair. Building it
// once and reusing it across restarts or repeated runs keeps the search
// loop free of parsing and triple extraction.
class SmatchProblem {
  public:
    SmatchProblem(const Graph& cand, const Graph& ref, const SmatchOptions& opts) {
        build_vars(cand, cand_vars_, cand_concepts_, cand_index_);
        build_vars(ref, ref_vars_, ref_concepts_, ref_index_);
        build_cand_triples(cand, opts);
        build_ref_counts(ref, opts);
        images_.assign(cand_vars_.size(), -1);
        adjacency_.assign(cand_vars_.size(), {});
        for (std::size_t t = 0; t < triples_.size(); ++t) {
            if (triples_[t].slot_a >= 0) adjacency_[triples_[t].slot_a].push_back(t);
            if (triples_[t].slot_b >= 0 && triples_[t].slot_b != triples_[t].slot_a)
                adjacency_[triples_[t].slot_b].push_back(t);
        }
    }

    int candidate_var_count() const { return static_cast<int>(cand_vars_.size()); }
    int reference_var_count() const { return static_cast<int>(ref_vars_.size()); }
    std::uint64_t candidate_triple_count() const { return triples_.size(); }
    std::uint64_t reference_triple_count() const { return ref_triple_count_; }
    const std::vector<NodeId>& candidate_vars() const { return cand_vars_; }
    const std::vector<NodeId>& reference_vars() const { return ref_vars_; }
    const std::string& candidate_concept(int i) const { return cand_concepts_[i]; }
    const std::string& reference_concept(int j) const { return ref_concepts_[j]; }
    const std::vector<int>& images() const { return images_; }
    int matched() const { return matched_; }

    // replaces the whole mapping and recounts from scratch
    void reset(const std::vector<int>& images) {
        images_ = images;
        counts_.clear();
        matched_ = 0;
        for (auto& t : triples_) {
            t.key = ground_key(t);
            add_key(t.key);
        }
    }

    // points one candidate var at a new image and updates the match count
    void set_image(int var, int image) {
        for (std::size_t t : adjacency_[var]) remove_key(triples_[t].key);
        images_[var] = image;
        for (std::size_t t : adjacency_[var]) {
            triples_[t].key = ground_key(triples_[t]);
            add_key(triples_[t].key);
        }
    }

    int remap_gain(int var, int image) {
        int old = images_[var];
        int before = matched_;
        set_image(var, image);
        int gain = matched_ - before;
        set_image(var, old);
        return gain;
    }

    int swap_gain(int v1, int v2) {
        int j1 = images_[v1];
        int j2 = images_[v2];
        int before = matched_;
        set_image(v1, j2);
        set_image(v2, j1);
        int gain = matched_ - before;
        set_image(v2, j2);
        set_image(v1, j1);
        return gain;
    }

  private:
    struct GroundTriple {
        std::string prefix;
        int slot_a = -1;  // candidate var index, -1 when the slot is absent
        int slot_b = -1;
        std::string key;
    };

    static void build_vars(const Graph& g, std::vector<NodeId>& vars,
                           std::vector<std::string>& concepts,
                           std::unordered_map<NodeId, int>& index) {
        for (NodeId id = 0; id < g.nodes.size(); ++id) {
            if (!g.nodes[id].is_variable) continue;
            index[id] = static_cast<int>(vars.size());
            vars.push_back(id);
            concepts.push_back(g.nodes[id].label);
        }
    }

    static std::string triple_prefix(const Triple& t, const SmatchOptions& opts) {
        switch (t.kind) {
            case TripleKind::Instance:
                return std::string("i\x1e") + t.text;
            case TripleKind::Relation:
                return std::string("r\x1e") + t.label;
            case TripleKind::Attribute:
                return std::string("a\x1e") + t.label + '\x1e' + t.text;
            case TripleKind::Top:
                return opts.top == TopMode::Concept ? std::string("t\x1e") + t.text
                                                    : std::string("t");
        }
        return {};
    }

    void build_cand_triples(const Graph& cand, const SmatchOptions& opts) {
        for (const Triple& t : graph_to_triples(cand, opts.inverse)) {
            GroundTriple gt;
            gt.prefix = triple_prefix(t, opts);
            gt.slot_a = cand_index_.at(t.node_a);
            if (t.kind == TripleKind::Relation) gt.slot_b = cand_index_.at(t.node_b);
            triples_.push_back(std::move(gt));
        }
    }

    void build_ref_counts(const Graph& ref, const SmatchOptions& opts) {
        std::vector<Triple> triples = graph_to_triples(ref, opts.inverse);
        ref_triple_count_ = triples.size();
        for (const Triple& t : triples) {
            std::string key = triple_prefix(t, opts);
            append_ref_slot(key, ref_index_.at(t.node_a));
            if (t.kind == TripleKind::Relation)
                append_ref_slot(key, ref_index_.at(t.node_b));
            ++ref_counts_[key];
        }
    }

    static void append_ref_slot(std::string& key, int index) {
        key += '\x1e';
        key += std::to_string(index);
    }

    void append_image_slot(std::string& key, int var) const {
        key += '\x1e';
        int image = images_[var];
        if (image >= 0) {
            key += std::to_string(image);
        } else {
            // unmapped vars ground to keys no reference triple can carry
            key += 'u';
            key += std::to_string(var);
        }
    }

    std::string ground_key(const GroundTriple& t) const {
        std::string key = t.prefix;
        if (t.slot_a >= 0) append_image_slot(key, t.slot_a);
        if (t.slot_b >= 0) append_image_slot(key, t.slot_b);
        return key;
    }

    int ref_count(const std::string& key) const {
        auto it = ref_counts_.find(key);
        return it == ref_counts_.end() ? 0 : it->second;
    }

    void add_key(const std::string& key) {
        int after = ++counts_[key];
        if (after <= ref_count(key)) ++matched_;
    }

    void remove_key(const std::string& key) {
        auto it = counts_.find(key);
        if (it->second-- <= ref_count(key)) --matched_;
    }

    std::vector<NodeId> cand_vars_, ref_vars_;
    std::vector<std::string> cand_concepts_, ref_concepts_;
    std::unordered_map<NodeId, int> cand_index_, ref_index_;
    std::vector<GroundTriple> triples_;
    std::unordered_map<std::string, int> ref_counts_;
    std::uint64_t ref_triple_count_ = 0;

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<int> images_;
    std::unordered_map<std::string, int> counts_;
    int matched_ = 0;
};

namespace detail {

// concept-greedy start: each candidate var takes the lowest free reference
// var with the same concept; leftovers get a random injective completion
inline std::vector<int> smatch_smart_init(const SmatchProblem& prob, Rng& rng) {
    int m = prob.candidate_var_count();
    int p = prob.reference_var_count();
    std::vector<int> images(m, -1);
    std::vector<char> used(p, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p; ++j) {
            if (!used[j] && prob.reference_concept(j) == prob.candidate_concept(i)) {
                images[i] = j;
                used[j] = 1;
                break;
            }
        }
    }
    std::vector<int> free_refs;
    for (int j = 0; j < p; ++j)
        if (!used[j]) free_refs.push_back(j);
    for (int i = 0; i < m && !free_refs.empty(); ++i) {
        if (images[i] != -1) continue;
        std::size_t pick = static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(free_refs.size())));
        images[i] = free_refs[pick];
        free_refs.erase(free_refs.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return images;
}

inline std::vector<int> smatch_random_init(const SmatchProblem& prob, Rng& rng) {
    int m = prob.candidate_var_count();
    int p = prob.reference_var_count();
    std::vector<int> images(m, -1);
    std::vector<int> free_refs(p);
    for (int j = 0; j < p; ++j) free_refs[j] = j;
    for (int i = 0; i < m && !free_refs.empty(); ++i) {
        std::size_t pick = static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(free_refs.size())));
        images[i] = free_refs[pick];
        free_refs.erase(free_refs.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return images;
}

// best-improvement local search over remap-to-free and swap moves; returns
// the matched-triple count of the local optimum
inline int smatch_hill_climb(SmatchProblem& prob, std::vector<int>& images) {
    int m = prob.candidate_var_count();
    int p = prob.reference_var_count();
    prob.reset(images);
    std::vector<char> used(p, 0);
    for (int img : images)
        if (img >= 0) used[img] = 1;

    for (;;) {
        int best_gain = 0;
        int best_var = -1, best_image = -1;          // remap
        int best_v1 = -1, best_v2 = -1;              // swap
        for (int v = 0; v < m; ++v) {
            for (int j = 0; j < p; ++j) {
                if (used[j] || images[v] == j) continue;
                int gain = prob.remap_gain(v, j);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_var = v;
                    best_image = j;
                    best_v1 = -1;
                }
            }
        }
        for (int v1 = 0; v1 + 1 < m; ++v1) {
            for (int v2 = v1 + 1; v2 < m; ++v2) {
                if (images[v1] == images[v2]) continue;  // both unmapped
                int gain = prob.swap_gain(v1, v2);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v1 = v1;
                    best_v2 = v2;
                    best_var = -1;
                }
            }
        }
        if (best_gain <= 0) break;
        if (best_var >= 0) {
            if (images[best_var] >= 0) used[images[best_var]] = 0;
            used[best_image] = 1;
            prob.set_image(best_var, best_image);
            images[best_var] = best_image;
        } else {
            int j1 = images[best_v1], j2 = images[best_v2];
            prob.set_image(best_v1, j2);
            prob.set_image(best_v2, j1);
            images[best_v1] = j2;
            images[best_v2] = j1;
        }
    }
    return prob.matched();
}

inline SmatchResult smatch_result_from(const SmatchProblem& prob, std::uint64_t matched,
                                       std::vector<int> images) {
    SmatchResult r;
    r.matched_triples = matched;
    r.candidate_triples = prob.candidate_triple_count();
    r.reference_triples = prob.reference_triple_count();
    r.precision = r.candidate_triples
                      ? static_cast<double>(matched) / static_cast<double>(r.candidate_triples)
                      : 0.0;
    r.recall = r.reference_triples
                   ? static_cast<double>(matched) / static_cast<double>(r.reference_triples)
                   : 0.0;
    r.f1 = (r.precision + r.recall) > 0.0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    r.mapping.assign(images.begin(), images.end());
    r.candidate_vars = prob.candidate_vars();
    r.reference_vars = prob.reference_vars();
    return r;
}

}  // namespace detail

// matched-triple count under a fixed injective mapping given as
// (candidate node id, reference node id) pairs
inline std::uint64_t match_count(const Graph& cand, const Graph& ref,
                                 const std::vector<std::pair<NodeId, NodeId>>& mapping,
                                 const SmatchOptions& opts = {}) {
    SmatchProblem prob(cand, ref, opts);
    auto index_of = [](const std::vector<NodeId>& vars, NodeId id) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == id) return static_cast<int>(i);
        throw std::invalid_argument("mapping names a node that is not a variable");
    };
    std::vector<int> images(static_cast<std::size_t>(prob.candidate_var_count()), -1);
    std::vector<char> used(static_cast<std::size_t>(prob.reference_var_count()), 0);
    for (const auto& [c, r] : mapping) {
        int i = index_of(prob.candidate_vars(), c);
        int j = index_of(prob.reference_vars(), r);
        if (images[static_cast<std::size_t>(i)] != -1 || used[static_cast<std::size_t>(j)])
            throw std::invalid_argument("mapping is not injective");
        images[static_cast<std::size_t>(i)] = j;
        used[static_cast<std::size_t>(j)] = 1;
    }
    prob.reset(images);
    return static_cast<std::uint64_t>(prob.matched());
}

// runs the restart loop on a prebuilt problem; restart t draws from seed+t,
// restart 0 starts from the concept-greedy mapping, later ones from random
// injective mappings; ties keep the earliest restart
inline SmatchResult smatch_solve(SmatchProblem& prob, const SmatchOptions& opts) {
    opts.validate();
    int best_matched = -1;
    std::vector<int> best_images;
    std::vector<double> restart_f1;
    for (int t = 0; t < opts.restarts; ++t) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(t));
        std::vector<int> images = t == 0 ? detail::smatch_smart_init(prob, rng)
                                         : detail::smatch_random_init(prob, rng);
        int matched = detail::smatch_hill_climb(prob, images);
        double denom = static_cast<double>(prob.candidate_triple_count()) +
                       static_cast<double>(prob.reference_triple_count());
        restart_f1.push_back(denom > 0.0 ? 2.0 * matched / denom : 0.0);
        if (matched > best_matched) {
            best_matched = matched;
            best_images = images;
        }
    }
    SmatchResult r = detail::smatch_result_from(
        prob, static_cast<std::uint64_t>(best_matched), std::move(best_images));
    r.restarts_used = opts.restarts;
    r.restart_f1 = std::move(restart_f1);
    return r;
}

inline SmatchResult smatch_score(const Graph& cand, const Graph& ref,
                                 const SmatchOptions& opts = {}) {
    SmatchProblem prob(cand, ref, opts);
    return smatch_solve(prob, opts);
}

// exhaustive search over injective mappings of the side with fewer
// variables; intended for small graphs only
inline SmatchResult smatch_oracle(const Graph& cand, const Graph& ref,
                                  const SmatchOptions& opts = {}) {
    SmatchProblem prob(cand, ref, opts);
    int m = prob.candidate_var_count();
    int p = prob.reference_var_count();
    if (std::min(m, p) > 8)
        throw std::invalid_argument("oracle search is limited to 8 variables per side");

    bool enumerate_cand = m <= p;
    int small = enumerate_cand ? m : p;
    int large = enumerate_cand ? p : m;

    int best_matched = -1;
    std::vector<int> best_images;
    std::vector<int> assign(small, -1);
    std::vector<char> taken(large, 0);
    std::vector<int> cand_images(m, -1);

    auto evaluate = [&]() {
        if (enumerate_cand) {
            cand_images = assign;
        } else {
            std::fill(cand_images.begin(), cand_images.end(), -1);
            for (int j = 0; j < p; ++j)
                if (assign[j] >= 0) cand_images[assign[j]] = j;
        }
        prob.reset(cand_images);
        if (prob.matched() > best_matched) {
            best_matched = prob.matched();
            best_images = cand_images;
        }
    };

    auto recurse = [&](auto&& self, int i) -> void {
        if (i == small) {
            evaluate();
            return;
        }
        for (int j = 0; j < large; ++j) {
            if (taken[j]) continue;
            taken[j] = 1;
            assign[i] = j;
            self(self, i + 1);
            assign[i] = -1;
            taken[j] = 0;
        }
    };
    recurse(recurse, 0);

    return detail::smatch_result_from(prob, static_cast<std::uint64_t>(best_matched),
                                      std::move(best_images));
}

// micro-averaged corpus score: matched and total triples are summed over
// pairs before computing P/R/F1; pair i is solved with seed mix64(seed, i)
inline SmatchResult smatch_corpus(const std::vector<std::pair<Graph, Graph>>& pairs,
                                  const SmatchOptions& opts = {}) {
    opts.validate();
    if (pairs.empty()) throw std::invalid_argument("corpus scoring needs at least one pair");
    SmatchResult total;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        SmatchOptions pair_opts = opts;
        pair_opts.seed = mix64(opts.seed, static_cast<std::uint64_t>(i));
        SmatchResult r = smatch_score(pairs[i].first, pairs[i].second, pair_opts);
        total.matched_triples += r.matched_triples;
        total.candidate_triples += r.candidate_triples;
        total.reference_triples += r.reference_triples;
    }
    total.precision = total.candidate_triples
                          ? static_cast<double>(total.matched_triples) /
                                static_cast<double>(total.candidate_triples)
                          : 0.0;
    total.recall = total.reference_triples
                       ? static_cast<double>(total.matched_triples) /
                             static_cast<double>(total.reference_triples)
                       : 0.0;
    total.f1 = (total.precision + total.recall) > 0.0
                   ? 2.0 * total.precision * total.recall / (total.precision + total.recall)
                   : 0.0;
    return total;
}

}  // namespace sembleu
