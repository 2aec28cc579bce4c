// Corpus-level tooling: judgment files, restart-variance studies, bootstrap
// and sentence-level agreement with human preferences, n-gram growth
// analysis, system ranking, and runtime benchmarking.
//
// Randomness is split per task from the master seed (resample s uses
// mix64(seed, s), sentence-level Smatch runs use per-(system, sentence)
// seeds), so results never depend on thread count or evaluation order.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "sembleu/graph.hpp"
#include "sembleu/metric.hpp"
#include "sembleu/ngram.hpp"
#include "sembleu/random.hpp"
#include "sembleu/smatch.hpp"

namespace sembleu {

enum class Preference { A, B, Tie };

struct JudgmentRecord {
    std::int64_t sentence_id = 0;
    std::string system_a;
    std::string system_b;
    Preference preference = Preference::Tie;
};

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

inline void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

inline const char* kJudgmentsHeader = "sentence_id\tsystem_a\tsystem_b\tpreference";

inline std::vector<JudgmentRecord> parse_judgments(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("judgments file is empty");
    detail::strip_cr(line);
    if (line != kJudgmentsHeader)
        throw std::invalid_argument(std::string("judgments header must be `") +
                                 kJudgmentsHeader + "`");
    std::vector<JudgmentRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        detail::strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> fields = detail::split_tabs(line);
        const std::string where = "judgments line " + std::to_string(lineno) + ": ";
        if (fields.size() != 4)
            throw std::invalid_argument(where + "expected 4 tab-separated fields");
        JudgmentRecord r;
        try {
            std::size_t used = 0;
            r.sentence_id = std::stoll(fields[0], &used);
            if (used != fields[0].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument(where + "sentence_id is not an integer");
        }
        if (r.sentence_id < 0)
            throw std::invalid_argument(where + "sentence_id must be non-negative");
        r.system_a = fields[1];
        r.system_b = fields[2];
        if (r.system_a == r.system_b)
            throw std::invalid_argument(where + "system_a and system_b must differ");
        if (fields[3] == "a")
            r.preference = Preference::A;
        else if (fields[3] == "b")
            r.preference = Preference::B;
        else if (fields[3] == "tie")
            r.preference = Preference::Tie;
        else
            throw std::invalid_argument(where + "preference must be one of a, b, tie");
        records.push_back(std::move(r));
    }
    return records;
}

inline std::vector<JudgmentRecord> parse_judgments(const std::string& text) {
    std::istringstream in(text);
    return parse_judgments(in);
}

// block i of the candidate file pairs with block i of the reference file
inline std::vector<std::pair<Graph, Graph>> make_pairs(const std::vector<Graph>& cands,
                                                       const std::vector<Graph>& refs) {
    if (cands.size() != refs.size())
        throw std::invalid_argument("candidate and reference corpora have different "
                                    "block counts (" +
                                    std::to_string(cands.size()) + " vs " +
                                    std::to_string(refs.size()) + ")");
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.reserve(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) pairs.push_back({cands[i], refs[i]});
    return pairs;
}

struct VarianceRow {
    int restarts = 0;
    double mean_f1 = 0.0;
    double min_f1 = 0.0;
    double max_f1 = 0.0;
    double spread = 0.0;
    double seconds = 0.0;
};

// corpus Smatch is recomputed `runs` times per restart count with run seeds
// mix64(seed, run); wall-clock per restart count covers all of its runs
inline std::vector<VarianceRow> restart_variance(
    const std::vector<std::pair<Graph, Graph>>& pairs, const std::vector<int>& r_values,
    int runs, std::uint64_t seed, const SmatchOptions& base = {}) {
    if (pairs.empty()) throw std::invalid_argument("variance study needs a nonempty corpus");
    if (runs < 2) throw std::invalid_argument("variance study needs at least 2 runs");
    if (r_values.empty()) throw std::invalid_argument("no restart counts given");
    for (int r : r_values)
        if (r < 1) throw std::invalid_argument("restart counts must be >= 1");

    std::vector<VarianceRow> rows;
    for (int r : r_values) {
        VarianceRow row;
        row.restarts = r;
        double sum = 0.0;
        auto start = std::chrono::steady_clock::now();
        for (int run = 0; run < runs; ++run) {
            SmatchOptions opts = base;
            opts.restarts = r;
            opts.seed = mix64(seed, static_cast<std::uint64_t>(run));
            double f1 = smatch_corpus(pairs, opts).f1;
            sum += f1;
            if (run == 0 || f1 < row.min_f1) row.min_f1 = f1;
            if (run == 0 || f1 > row.max_f1) row.max_f1 = f1;
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        row.mean_f1 = sum / runs;
        row.spread = row.max_f1 - row.min_f1;
        rows.push_back(row);
    }
    return rows;
}

enum class MetricKind { Sembleu, Smatch };

struct MetricConfig {
    MetricKind kind = MetricKind::Sembleu;
    SembleuConfig sembleu;
    SmatchOptions smatch;
};

struct PairAccuracy {
    std::string system_a;
    std::string system_b;
    double accuracy = 0.0;
};

struct SentenceAgreement {
    std::uint64_t consistent = 0;
    std::uint64_t total = 0;
    double accuracy = 0.0;
};

namespace detail {

struct AgreementData {
    std::vector<std::int64_t> pool;     // sorted unique judged sentence ids
    std::vector<std::string> systems;   // sorted distinct judged system names
    // per pool index: (a_index, b_index, preference)
    std::vector<std::vector<std::tuple<int, int, Preference>>> by_sentence;
    std::vector<std::pair<int, int>> pairs;  // normalized, sorted
};

inline AgreementData build_agreement_data(
    const std::vector<JudgmentRecord>& judgments,
    const std::map<std::string, std::vector<Graph>>& outputs,
    const std::vector<Graph>& references) {
    for (const auto& [name, graphs] : outputs)
        if (graphs.size() != references.size())
            throw std::invalid_argument("system `" + name + "` has " +
                                     std::to_string(graphs.size()) +
                                     " blocks, references have " +
                                     std::to_string(references.size()));
    AgreementData data;
    for (const JudgmentRecord& j : judgments) {
        if (j.sentence_id >= static_cast<std::int64_t>(references.size()))
            throw std::invalid_argument("judgment references unknown sentence id " +
                                     std::to_string(j.sentence_id));
        for (const std::string* name : {&j.system_a, &j.system_b}) {
            if (!outputs.count(*name))
                throw std::invalid_argument("judgment references unknown system `" + *name +
                                         "`");
            data.systems.push_back(*name);
        }
        data.pool.push_back(j.sentence_id);
    }
    std::sort(data.pool.begin(), data.pool.end());
    data.pool.erase(std::unique(data.pool.begin(), data.pool.end()), data.pool.end());
    std::sort(data.systems.begin(), data.systems.end());
    data.systems.erase(std::unique(data.systems.begin(), data.systems.end()),
                       data.systems.end());

    auto sys_index = [&](const std::string& name) {
        return static_cast<int>(std::lower_bound(data.systems.begin(), data.systems.end(),
                                                 name) -
                                data.systems.begin());
    };
    auto pool_index = [&](std::int64_t id) {
        return static_cast<std::size_t>(
            std::lower_bound(data.pool.begin(), data.pool.end(), id) - data.pool.begin());
    };

    data.by_sentence.resize(data.pool.size());
    std::vector<std::pair<int, int>> pairs;
    for (const JudgmentRecord& j : judgments) {
        int a = sys_index(j.system_a);
        int b = sys_index(j.system_b);
        data.by_sentence[pool_index(j.sentence_id)].push_back({a, b, j.preference});
        pairs.push_back(std::minmax(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    data.pairs = std::move(pairs);
    return data;
}

struct SentenceStat {
    SembleuCounts sembleu;
    std::uint64_t matched = 0;
    std::uint64_t cand_triples = 0;
    std::uint64_t ref_triples = 0;
};

inline std::uint64_t smatch_sentence_seed(const SmatchOptions& opts, int sys_index,
                                          std::int64_t sentence_id) {
    return mix64(mix64(opts.seed, static_cast<std::uint64_t>(sys_index)),
                 static_cast<std::uint64_t>(sentence_id));
}

// per (system, pool sentence) sufficient statistics for the chosen metric;
// Smatch seeds are fixed per (system, sentence), so resampling never
// re-runs the search
inline std::vector<std::vector<SentenceStat>> precompute_stats(
    const AgreementData& data, const std::map<std::string, std::vector<Graph>>& outputs,
    const std::vector<Graph>& references, const MetricConfig& metric) {
    std::vector<std::vector<SentenceStat>> stats(data.systems.size());
    for (std::size_t s = 0; s < data.systems.size(); ++s) {
        const std::vector<Graph>& graphs = outputs.at(data.systems[s]);
        stats[s].resize(data.pool.size());
        for (std::size_t p = 0; p < data.pool.size(); ++p) {
            std::int64_t sid = data.pool[p];
            const Graph& cand = graphs[static_cast<std::size_t>(sid)];
            const Graph& ref = references[static_cast<std::size_t>(sid)];
            if (metric.kind == MetricKind::Sembleu) {
                stats[s][p].sembleu = sembleu_pair_counts(cand, ref, metric.sembleu);
            } else {
                SmatchOptions opts = metric.smatch;
                opts.seed = smatch_sentence_seed(metric.smatch, static_cast<int>(s), sid);
                SmatchResult r = smatch_score(cand, ref, opts);
                stats[s][p].matched = r.matched_triples;
                stats[s][p].cand_triples = r.candidate_triples;
                stats[s][p].ref_triples = r.reference_triples;
            }
        }
    }
    return stats;
}

inline void add_scaled(SembleuCounts& acc, const SembleuCounts& s, std::uint64_t m) {
    for (std::size_t k = 0; k < acc.matched.size(); ++k) {
        acc.matched[k] += s.matched[k] * m;
        acc.cand_total[k] += s.cand_total[k] * m;
        acc.ref_total[k] += s.ref_total[k] * m;
    }
    acc.candidate_size += s.candidate_size * m;
    acc.reference_size += s.reference_size * m;
}

template <typename T>
inline int sign_of(T v) {
    return v > T(0) ? 1 : (v < T(0) ? -1 : 0);
}

}  // namespace detail

// Bootstrap agreement (corpus level): draw `samples` resamples of
// `sample_size` judged sentence ids with replacement; a resample agrees for
// a system pair when the human score difference and the corpus metric
// score difference have the same sign (ties only match ties). Resample s
// draws from mix64(seed, s) regardless of which thread runs it.
inline std::vector<PairAccuracy> corpus_agreement_bootstrap(
    const std::vector<JudgmentRecord>& judgments,
    const std::map<std::string, std::vector<Graph>>& outputs,
    const std::vector<Graph>& references, const MetricConfig& metric, int samples,
    int sample_size, std::uint64_t seed, int threads = 1) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (sample_size < 1) throw std::invalid_argument("sample_size must be >= 1");
    detail::AgreementData data = detail::build_agreement_data(judgments, outputs, references);
    if (data.pairs.empty()) return {};
    std::vector<std::vector<detail::SentenceStat>> stats =
        detail::precompute_stats(data, outputs, references, metric);

    const std::size_t pair_count = data.pairs.size();
    const std::size_t sys_count = data.systems.size();
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, samples);

    std::vector<std::vector<std::uint64_t>> agree_per_thread(
        static_cast<std::size_t>(threads), std::vector<std::uint64_t>(pair_count, 0));

    auto worker = [&](int thread_index, int begin, int end) {
        std::vector<std::uint64_t>& agree = agree_per_thread[static_cast<std::size_t>(thread_index)];
        std::vector<std::uint32_t> mult(data.pool.size());
        std::vector<std::int64_t> human(sys_count);
        std::vector<double> score(sys_count);
        for (int s = begin; s < end; ++s) {
            Rng rng(mix64(seed, static_cast<std::uint64_t>(s)));
            std::fill(mult.begin(), mult.end(), 0u);
            for (int d = 0; d < sample_size; ++d)
                ++mult[static_cast<std::size_t>(rng.below(data.pool.size()))];

            std::fill(human.begin(), human.end(), 0);
            if (metric.kind == MetricKind::Sembleu) {
                std::vector<SembleuCounts> acc(sys_count,
                                               SembleuCounts(metric.sembleu.max_order));
                for (std::size_t p = 0; p < data.pool.size(); ++p) {
                    if (!mult[p]) continue;
                    for (const auto& [a, b, pref] : data.by_sentence[p]) {
                        if (pref == Preference::A) human[a] += mult[p];
                        if (pref == Preference::B) human[b] += mult[p];
                    }
                    for (std::size_t y = 0; y < sys_count; ++y)
                        detail::add_scaled(acc[y], stats[y][p].sembleu, mult[p]);
                }
                for (std::size_t y = 0; y < sys_count; ++y)
                    score[y] = sembleu_combine(acc[y], metric.sembleu,
                                               metric.sembleu.smoothing.value_or(
                                                   Smoothing::None))
                                   .value;
            } else {
                std::vector<std::uint64_t> matched(sys_count, 0), ctrip(sys_count, 0),
                    rtrip(sys_count, 0);
                for (std::size_t p = 0; p < data.pool.size(); ++p) {
                    if (!mult[p]) continue;
                    for (const auto& [a, b, pref] : data.by_sentence[p]) {
                        if (pref == Preference::A) human[a] += mult[p];
                        if (pref == Preference::B) human[b] += mult[p];
                    }
                    for (std::size_t y = 0; y < sys_count; ++y) {
                        matched[y] += stats[y][p].matched * mult[p];
                        ctrip[y] += stats[y][p].cand_triples * mult[p];
                        rtrip[y] += stats[y][p].ref_triples * mult[p];
                    }
                }
                for (std::size_t y = 0; y < sys_count; ++y) {
                    double prec = ctrip[y] ? static_cast<double>(matched[y]) / ctrip[y] : 0.0;
                    double rec = rtrip[y] ? static_cast<double>(matched[y]) / rtrip[y] : 0.0;
                    score[y] = (prec + rec) > 0.0 ? 2.0 * prec * rec / (prec + rec) : 0.0;
                }
            }

            for (std::size_t q = 0; q < pair_count; ++q) {
                auto [a, b] = data.pairs[q];
                int dh = detail::sign_of(human[a] - human[b]);
                int dm = detail::sign_of(score[a] - score[b]);
                if (dh == dm) ++agree[q];
            }
        }
    };

    if (threads == 1) {
        worker(0, 0, samples);
    } else {
        std::vector<std::thread> crew;
        int chunk = (samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int begin = t * chunk;
            int end = std::min(samples, begin + chunk);
            if (begin >= end) break;
            crew.emplace_back(worker, t, begin, end);
        }
        for (auto& th : crew) th.join();
    }

    std::vector<PairAccuracy> out;
    for (std::size_t q = 0; q < pair_count; ++q) {
        std::uint64_t agreed = 0;
        for (const auto& per : agree_per_thread) agreed += per[q];
        out.push_back({data.systems[static_cast<std::size_t>(data.pairs[q].first)],
                       data.systems[static_cast<std::size_t>(data.pairs[q].second)],
                       static_cast<double>(agreed) / samples});
    }
    return out;
}

// Sentence-level agreement: score both sides of every judgment in sentence
// mode and check the order against the human preference; ties only match
// ties (equal scores).
inline SentenceAgreement sentence_agreement(
    const std::vector<JudgmentRecord>& judgments,
    const std::map<std::string, std::vector<Graph>>& outputs,
    const std::vector<Graph>& references, const MetricConfig& metric) {
    detail::AgreementData data = detail::build_agreement_data(judgments, outputs, references);
    auto sys_index = [&](const std::string& name) {
        return static_cast<int>(std::lower_bound(data.systems.begin(), data.systems.end(),
                                                 name) -
                                data.systems.begin());
    };
    auto sentence_score = [&](const std::string& system, std::int64_t sid) {
        const Graph& cand = outputs.at(system)[static_cast<std::size_t>(sid)];
        const Graph& ref = references[static_cast<std::size_t>(sid)];
        if (metric.kind == MetricKind::Sembleu)
            return sembleu_sentence(cand, ref, metric.sembleu).value;
        SmatchOptions opts = metric.smatch;
        opts.seed = detail::smatch_sentence_seed(metric.smatch, sys_index(system), sid);
        return smatch_score(cand, ref, opts).f1;
    };

    SentenceAgreement result;
    for (const JudgmentRecord& j : judgments) {
        double sa = sentence_score(j.system_a, j.sentence_id);
        double sb = sentence_score(j.system_b, j.sentence_id);
        bool consistent = false;
        switch (j.preference) {
            case Preference::A: consistent = sa > sb; break;
            case Preference::B: consistent = sb > sa; break;
            case Preference::Tie: consistent = sa == sb; break;
        }
        if (consistent) ++result.consistent;
        ++result.total;
    }
    result.accuracy =
        result.total ? static_cast<double>(result.consistent) / result.total : 0.0;
    return result;
}

struct GrowthRecord {
    std::size_t nodes = 0;
    std::vector<std::uint64_t> totals;  // per order 1..max_order
};

struct GrowthFit {
    std::size_t order = 0;
    double slope = 0.0;
    double intercept = 0.0;
};

struct GrowthReport {
    std::size_t max_order = 0;
    std::vector<GrowthRecord> records;
    std::vector<GrowthFit> fits;
};

inline GrowthReport ngram_growth(const std::vector<Graph>& graphs, std::size_t max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    GrowthReport report;
    report.max_order = max_order;
    for (const Graph& g : graphs) {
        Graph norm = normalize_inverse(g);
        NGramMultiset ms = extract_ngrams(norm, max_order);
        GrowthRecord rec;
        rec.nodes = norm.nodes.size();
        for (std::size_t k = 1; k <= max_order; ++k) rec.totals.push_back(ms.total(k));
        report.records.push_back(std::move(rec));
    }
    for (std::size_t k = 1; k <= max_order; ++k) {
        GrowthFit fit;
        fit.order = k;
        std::size_t n = report.records.size();
        if (n >= 1) {
            double sx = 0.0, sy = 0.0;
            for (const auto& rec : report.records) {
                sx += static_cast<double>(rec.nodes);
                sy += static_cast<double>(rec.totals[k - 1]);
            }
            double mx = sx / static_cast<double>(n);
            double my = sy / static_cast<double>(n);
            double sxx = 0.0, sxy = 0.0;
            for (const auto& rec : report.records) {
                double dx = static_cast<double>(rec.nodes) - mx;
                double dy = static_cast<double>(rec.totals[k - 1]) - my;
                sxx += dx * dx;
                sxy += dx * dy;
            }
            fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
            fit.intercept = my - fit.slope * mx;
        }
        report.fits.push_back(fit);
    }
    return report;
}

inline void write_growth_csv(std::ostream& os, const GrowthReport& report) {
    os << "nodes,order,count\n";
    for (const auto& rec : report.records)
        for (std::size_t k = 1; k <= report.max_order; ++k)
            os << rec.nodes << ',' << k << ',' << rec.totals[k - 1] << '\n';
}

struct RankedScore {
    std::string system;
    double score = 0.0;
    int rank = 0;
};

struct RankDisagreement {
    std::string system_a;
    std::string system_b;
    double sembleu_delta = 0.0;
    double smatch_delta = 0.0;
};

struct RankTie {
    std::string metric;
    std::string system_a;
    std::string system_b;
};

struct RankReport {
    std::vector<RankedScore> sembleu;  // sorted by score descending
    std::vector<RankedScore> smatch;
    std::vector<RankDisagreement> disagreements;
    std::vector<RankTie> ties;
};

namespace detail {

inline std::vector<RankedScore> ranked(const std::map<std::string, double>& scores) {
    std::vector<RankedScore> out;
    for (const auto& [name, score] : scores) out.push_back({name, score, 0});
    std::stable_sort(out.begin(), out.end(), [](const RankedScore& x, const RankedScore& y) {
        if (x.score != y.score) return x.score > y.score;
        return x.system < y.system;
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        int better = 0;
        for (const auto& other : out)
            if (other.score > out[i].score) ++better;
        out[i].rank = better + 1;
    }
    return out;
}

}  // namespace detail

// Corpus scores per system under both metrics, ranked; flags exact-score
// ties within a metric and ordering disagreements between the metrics.
// Systems are processed in name order, so input order never matters.
inline RankReport rank_systems(const std::map<std::string, std::vector<Graph>>& outputs,
                               const std::vector<Graph>& references,
                               const SembleuConfig& sembleu_cfg = {},
                               const SmatchOptions& smatch_opts = {}) {
    if (outputs.size() < 2)
        throw std::invalid_argument("ranking needs at least two systems");
    std::map<std::string, double> sembleu_scores, smatch_scores;
    for (const auto& [name, graphs] : outputs) {
        std::vector<std::pair<Graph, Graph>> pairs = make_pairs(graphs, references);
        sembleu_scores[name] = sembleu_corpus(pairs, sembleu_cfg).value;
        smatch_scores[name] = smatch_corpus(pairs, smatch_opts).f1;
    }

    RankReport report;
    report.sembleu = detail::ranked(sembleu_scores);
    report.smatch = detail::ranked(smatch_scores);

    for (const auto& list : {std::make_pair(std::string("sembleu"), &report.sembleu),
                             std::make_pair(std::string("smatch"), &report.smatch)}) {
        const auto& rows = *list.second;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i].score == rows[i + 1].score)
                report.ties.push_back({list.first, rows[i].system, rows[i + 1].system});
    }

    std::vector<std::string> names;
    for (const auto& [name, _] : outputs) names.push_back(name);
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            double ds = sembleu_scores[names[i]] - sembleu_scores[names[j]];
            double dm = smatch_scores[names[i]] - smatch_scores[names[j]];
            if (detail::sign_of(ds) != detail::sign_of(dm))
                report.disagreements.push_back({names[i], names[j], ds, dm});
        }
    }
    return report;
}

struct BenchReport {
    std::size_t pairs = 0;
    double sembleu_seconds = 0.0;
    double sembleu_value = 0.0;
    double smatch_seconds = 0.0;
    double smatch_f1 = 0.0;
    double ratio = 0.0;  // sembleu_seconds / smatch_seconds
};

inline BenchReport benchmark(const std::vector<std::pair<Graph, Graph>>& pairs,
                             const SembleuConfig& sembleu_cfg = {},
                             const SmatchOptions& smatch_opts = {}) {
    BenchReport report;
    report.pairs = pairs.size();
    auto t0 = std::chrono::steady_clock::now();
    report.sembleu_value = sembleu_corpus(pairs, sembleu_cfg).value;
    auto t1 = std::chrono::steady_clock::now();
    report.smatch_f1 = smatch_corpus(pairs, smatch_opts).f1;
    auto t2 = std::chrono::steady_clock::now();
    report.sembleu_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.smatch_seconds = std::chrono::duration<double>(t2 - t1).count();
    report.ratio = report.smatch_seconds > 0.0
                       ? report.sembleu_seconds / report.smatch_seconds
                       : 0.0;
    return report;
}

}  // namespace sembleu
