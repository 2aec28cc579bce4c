// SemBleu scoring: clipped per-order n-gram precisions combined as a
// weighted geometric mean and multiplied by a brevity penalty over graph
// sizes (|G| = nodes + edges). Sentence scoring smooths zero numerators
// with the NIST geometric 1/2^k rule; corpus scoring aggregates raw counts
// over all pairs first and applies the combination once.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sembleu/graph.hpp"
#include "sembleu/ngram.hpp"

namespace sembleu {

enum class Smoothing { None, NistGeometric };

struct SembleuConfig {
    std::size_t max_order = 3;
    // empty means uniform 1/max_order; otherwise must have max_order
    // entries summing to 1
    std::vector<double> weights;
    // unset resolves to NistGeometric in sentence mode, None in corpus mode
    std::optional<Smoothing> smoothing;
    InverseOptions inverse;

    std::vector<double> resolved_weights() const {
        if (weights.empty())
            return std::vector<double>(max_order, 1.0 / static_cast<double>(max_order));
        return weights;
    }

    void validate() const {
        if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
        if (weights.empty()) return;
        if (weights.size() != max_order)
            throw std::invalid_argument("weights must have one entry per order");
        double sum = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw std::invalid_argument("weights must be non-negative");
            sum += w;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("weights must sum to 1");
    }
};

struct OrderPrecision {
    std::size_t order = 0;
    std::uint64_t matched = 0;
    std::uint64_t total = 0;
    double p = 0.0;  // precision entering the geometric mean, smoothing applied
};

struct SembleuScore {
    double value = 0.0;
    std::vector<OrderPrecision> precisions;
    double brevity_penalty = 1.0;
    std::size_t candidate_size = 0;
    std::size_t reference_size = 0;
};

// Sufficient statistics of one candidate/reference pair; adding them is
// how corpus scores and bootstrap resamples aggregate.
struct SembleuCounts {
    std::vector<std::uint64_t> matched;    // per order, clipped
    std::vector<std::uint64_t> cand_total;
    std::vector<std::uint64_t> ref_total;
    std::uint64_t candidate_size = 0;
    std::uint64_t reference_size = 0;

    explicit SembleuCounts(std::size_t max_order = 0)
        : matched(max_order, 0), cand_total(max_order, 0), ref_total(max_order, 0) {}

    SembleuCounts& operator+=(const SembleuCounts& other) {
        for (std::size_t k = 0; k < matched.size(); ++k) {
            matched[k] += other.matched[k];
            cand_total[k] += other.cand_total[k];
            ref_total[k] += other.ref_total[k];
        }
        candidate_size += other.candidate_size;
        reference_size += other.reference_size;
        return *this;
    }
};

// matched = sum over order-k keys of min(candidate count, reference count);
// total = candidate's order-k total
inline std::pair<std::uint64_t, std::uint64_t> clipped_matches(const NGramMultiset& cand,
                                                               const NGramMultiset& ref,
                                                               std::size_t order) {
    std::uint64_t matched = 0;
    std::uint64_t total = 0;
    if (order == 0 || order > cand.max_order()) return {0, 0};
    for (const auto& [key, count] : cand.order_counts(order)) {
        total += count;
        matched += std::min(count, ref.count(order, key));
    }
    return {matched, total};
}

inline double brevity_penalty(std::size_t candidate_size, std::size_t reference_size) {
    if (candidate_size >= reference_size) return 1.0;
    if (candidate_size == 0) return 0.0;
    return std::exp(1.0 - static_cast<double>(reference_size) /
                              static_cast<double>(candidate_size));
}

inline SembleuCounts sembleu_pair_counts(const Graph& cand, const Graph& ref,
                                         const SembleuConfig& cfg) {
    cfg.validate();
    Graph c = normalize_inverse(cand, cfg.inverse);
    Graph z = normalize_inverse(ref, cfg.inverse);
    NGramMultiset cms = extract_ngrams(c, cfg.max_order);
    NGramMultiset zms = extract_ngrams(z, cfg.max_order);
    SembleuCounts counts(cfg.max_order);
    for (std::size_t k = 1; k <= cfg.max_order; ++k) {
        auto [matched, total] = clipped_matches(cms, zms, k);
        counts.matched[k - 1] = matched;
        counts.cand_total[k - 1] = total;
        counts.ref_total[k - 1] = zms.total(k);
    }
    counts.candidate_size = graph_size(c);
    counts.reference_size = graph_size(z);
    return counts;
}

// Combination per aggregated counts. With NIST geometric smoothing a
// running zero counter replaces the i-th zero numerator by 1/2^i; an order
// the candidate cannot populate counts as p=1 only when the reference has
// no such grams either, otherwise it is treated as one more zero-match
// order.
inline SembleuScore sembleu_combine(const SembleuCounts& counts, const SembleuConfig& cfg,
                                    Smoothing smoothing) {
    cfg.validate();
    const std::vector<double> weights = cfg.resolved_weights();
    SembleuScore score;
    score.candidate_size = static_cast<std::size_t>(counts.candidate_size);
    score.reference_size = static_cast<std::size_t>(counts.reference_size);
    score.brevity_penalty =
        brevity_penalty(counts.candidate_size, counts.reference_size);

    double smooth_numerator = 1.0;
    bool any_zero = false;
    double log_sum = 0.0;
    for (std::size_t k = 1; k <= cfg.max_order; ++k) {
        OrderPrecision op;
        op.order = k;
        op.matched = counts.matched[k - 1];
        op.total = counts.cand_total[k - 1];
        double p;
        bool zero_match = op.total > 0 ? op.matched == 0 : counts.ref_total[k - 1] > 0;
        if (!zero_match) {
            p = op.total > 0
                    ? static_cast<double>(op.matched) / static_cast<double>(op.total)
                    : 1.0;
        } else if (smoothing == Smoothing::NistGeometric) {
            smooth_numerator *= 0.5;
            p = smooth_numerator / static_cast<double>(std::max<std::uint64_t>(op.total, 1));
        } else {
            p = 0.0;
            any_zero = true;
        }
        op.p = p;
        if (p > 0.0) log_sum += weights[k - 1] * std::log(p);
        score.precisions.push_back(op);
    }

    score.value = any_zero ? 0.0 : score.brevity_penalty * std::exp(log_sum);
    return score;
}

inline SembleuScore sembleu_sentence(const Graph& cand, const Graph& ref,
                                     const SembleuConfig& cfg = {}) {
    return sembleu_combine(sembleu_pair_counts(cand, ref, cfg), cfg,
                           cfg.smoothing.value_or(Smoothing::NistGeometric));
}

inline SembleuScore sembleu_corpus(const std::vector<std::pair<Graph, Graph>>& pairs,
                                   const SembleuConfig& cfg = {}) {
    if (pairs.empty()) throw std::invalid_argument("corpus scoring needs at least one pair");
    cfg.validate();
    SembleuCounts sum(cfg.max_order);
    for (const auto& [cand, ref] : pairs) sum += sembleu_pair_counts(cand, ref, cfg);
    return sembleu_combine(sum, cfg, cfg.smoothing.value_or(Smoothing::None));
}

// percent with a fixed number of significant digits, e.g. 0.2667 -> "27"
inline std::string format_percent(double value, int significant_digits = 2) {
    double p = value * 100.0;
    char buf[64];
    if (p == 0.0) return "0";
    int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(p))));
    int decimals = significant_digits - 1 - magnitude;
    if (decimals < 0) {
        double scale = std::pow(10.0, -decimals);
        p = std::round(p / scale) * scale;
        decimals = 0;
    }
    std::snprintf(buf, sizeof buf, "%.*f", decimals, p);
    return buf;
}

}  // namespace sembleu
