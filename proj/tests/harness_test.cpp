#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "sembleu/harness.hpp"
#include "sembleu/penman.hpp"
#include "sembleu/synthetic.hpp"

using namespace sembleu;

namespace {

const char* kAsk = "(a / ask-01 :ARG0 (g / girl) :ARG1 (l / leave-11 :ARG0 (b / boy)))";
const char* kMake = "(m / make-01 :ARG0 (w / woman) :ARG1 (p / pie :quant 2))";

std::string tsv(std::initializer_list<const char*> rows) {
    std::string out = kJudgmentsHeader;
    out += '\n';
    for (const char* row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

// a corpus where one system is the reference and the other is damaged
struct TwoSystems {
    std::vector<Graph> references;
    std::map<std::string, std::vector<Graph>> outputs;
    std::vector<JudgmentRecord> judgments;
};

TwoSystems perfect_vs_damaged(std::size_t sentences, std::uint64_t seed) {
    TwoSystems t;
    t.references = random_corpus(sentences, seed);
    std::vector<Graph> damaged;
    for (std::size_t i = 0; i < t.references.size(); ++i) {
        Rng rng(mix64(seed, 1000 + i));
        damaged.push_back(delete_edges(t.references[i], 2, rng));
    }
    t.outputs["perfect"] = t.references;
    t.outputs["damaged"] = std::move(damaged);
    for (std::size_t i = 0; i < sentences; ++i) {
        JudgmentRecord j;
        j.sentence_id = static_cast<std::int64_t>(i);
        j.system_a = "perfect";
        j.system_b = "damaged";
        j.preference = Preference::A;
        t.judgments.push_back(j);
    }
    return t;
}

}  // namespace

TEST(JudgmentsTest, ParsesTheTsvFormat) {
    auto records = parse_judgments(tsv({"0\tsysA\tsysB\ta", "1\tsysA\tsysB\tb",
                                        "2\tsysB\tsysC\ttie"}));
    ASSERT_EQ(records.size(), 3u);
    EXPECT_EQ(records[0].sentence_id, 0);
    EXPECT_EQ(records[0].system_a, "sysA");
    EXPECT_EQ(records[0].preference, Preference::A);
    EXPECT_EQ(records[1].preference, Preference::B);
    EXPECT_EQ(records[2].preference, Preference::Tie);
    EXPECT_EQ(records[2].system_b, "sysC");
}

TEST(JudgmentsTest, RejectsBadInput) {
    EXPECT_THROW(parse_judgments(std::string("wrong\theader\n")), std::invalid_argument);
    EXPECT_THROW(parse_judgments(tsv({"0\tsysA\tsysB"})), std::invalid_argument);
    EXPECT_THROW(parse_judgments(tsv({"x\tsysA\tsysB\ta"})), std::invalid_argument);
    EXPECT_THROW(parse_judgments(tsv({"-3\tsysA\tsysB\ta"})), std::invalid_argument);
    EXPECT_THROW(parse_judgments(tsv({"0\tsysA\tsysA\ta"})), std::invalid_argument);
    EXPECT_THROW(parse_judgments(tsv({"0\tsysA\tsysB\tmaybe"})), std::invalid_argument);
}

TEST(JudgmentsTest, ErrorsNameTheLine) {
    try {
        parse_judgments(tsv({"0\tsysA\tsysB\ta", "bad\tsysA\tsysB\ta"}));
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(JudgmentsTest, MakePairsChecksLengths) {
    std::vector<Graph> two = random_corpus(2, 1), three = random_corpus(3, 2);
    EXPECT_EQ(make_pairs(two, two).size(), 2u);
    EXPECT_THROW(make_pairs(two, three), std::invalid_argument);
}

TEST(VarianceTest, IdenticalPairsHaveNoSpread) {
    Graph g = parse_penman(kAsk);
    std::vector<std::pair<Graph, Graph>> pairs(4, {g, g});
    auto rows = restart_variance(pairs, {1, 2}, 3, 7);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& row : rows) {
        EXPECT_DOUBLE_EQ(row.mean_f1, 1.0);
        EXPECT_DOUBLE_EQ(row.min_f1, 1.0);
        EXPECT_DOUBLE_EQ(row.max_f1, 1.0);
        EXPECT_DOUBLE_EQ(row.spread, 0.0);
    }
}

TEST(VarianceTest, ValidatesItsInputs) {
    Graph g = parse_penman(kAsk);
    std::vector<std::pair<Graph, Graph>> pairs(1, {g, g});
    EXPECT_THROW(restart_variance({}, {1}, 2, 0), std::invalid_argument);
    EXPECT_THROW(restart_variance(pairs, {1}, 1, 0), std::invalid_argument);
    EXPECT_THROW(restart_variance(pairs, {}, 2, 0), std::invalid_argument);
    EXPECT_THROW(restart_variance(pairs, {0}, 2, 0), std::invalid_argument);
}

TEST(GrowthTest, UnigramSlopeIsExactlyOne) {
    GrowthReport report = ngram_growth(random_corpus(25, 50), 3);
    ASSERT_EQ(report.fits.size(), 3u);
    EXPECT_EQ(report.fits[0].slope, 1.0);      // unigrams == nodes, bitwise
    EXPECT_EQ(report.fits[0].intercept, 0.0);
}

TEST(GrowthTest, ChainCorpusHasClosedFormTotals) {
    std::vector<Graph> chains;
    for (int n = 2; n <= 50; ++n) {
        std::string text;
        for (int i = 0; i + 1 < n; ++i)
            text += "(c" + std::to_string(i) + " / word" + std::to_string(i) + " :op1 ";
        text += "(c" + std::to_string(n - 1) + " / word" + std::to_string(n - 1) + ")";
        for (int i = 0; i + 1 < n; ++i) text += ")";
        chains.push_back(parse_penman(text));
    }
    GrowthReport report = ngram_growth(chains, 3);
    for (const GrowthRecord& rec : report.records) {
        EXPECT_EQ(rec.totals[0], rec.nodes);
        EXPECT_EQ(rec.totals[1], rec.nodes - 1);
        EXPECT_EQ(rec.totals[2], rec.nodes - 2);
    }
    EXPECT_NEAR(report.fits[1].slope, 1.0, 1e-9);
    EXPECT_NEAR(report.fits[2].slope, 1.0, 1e-9);
    EXPECT_NEAR(report.fits[1].intercept, -1.0, 1e-9);
}

TEST(GrowthTest, CsvHasOneRowPerGraphAndOrder) {
    GrowthReport report = ngram_growth(random_corpus(4, 9), 2);
    std::ostringstream os;
    write_growth_csv(os, report);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "nodes,order,count");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 8);
}

TEST(AgreementTest, SentenceOracleIsAlwaysConsistent) {
    TwoSystems t = perfect_vs_damaged(12, 21);
    MetricConfig metric;  // sembleu
    SentenceAgreement a = sentence_agreement(t.judgments, t.outputs, t.references, metric);
    EXPECT_EQ(a.total, 12u);
    EXPECT_EQ(a.consistent, 12u);
    EXPECT_DOUBLE_EQ(a.accuracy, 1.0);

    metric.kind = MetricKind::Smatch;
    a = sentence_agreement(t.judgments, t.outputs, t.references, metric);
    EXPECT_DOUBLE_EQ(a.accuracy, 1.0);
}

TEST(AgreementTest, TiesNeedEqualScores) {
    std::vector<Graph> refs = {parse_penman(kAsk)};
    std::map<std::string, std::vector<Graph>> outputs;
    outputs["left"] = refs;
    outputs["right"] = refs;  // identical output -> identical scores
    auto judgments = parse_judgments(tsv({"0\tleft\tright\ttie"}));
    MetricConfig metric;
    SentenceAgreement a = sentence_agreement(judgments, outputs, refs, metric);
    EXPECT_DOUBLE_EQ(a.accuracy, 1.0);

    outputs["right"] = {parse_penman(kMake)};  // scores now differ, tie misses
    a = sentence_agreement(judgments, outputs, refs, metric);
    EXPECT_DOUBLE_EQ(a.accuracy, 0.0);
}

TEST(AgreementTest, BootstrapIsPerfectWhenMetricMatchesHumans) {
    TwoSystems t = perfect_vs_damaged(10, 33);
    MetricConfig metric;
    auto rows = corpus_agreement_bootstrap(t.judgments, t.outputs, t.references, metric,
                                           50, 30, 5);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].system_a, "damaged");
    EXPECT_EQ(rows[0].system_b, "perfect");
    EXPECT_DOUBLE_EQ(rows[0].accuracy, 1.0);

    metric.kind = MetricKind::Smatch;
    rows = corpus_agreement_bootstrap(t.judgments, t.outputs, t.references, metric,
                                      50, 30, 5);
    EXPECT_DOUBLE_EQ(rows[0].accuracy, 1.0);
}

TEST(AgreementTest, DegenerateResampleIsZeroOrOne) {
    TwoSystems t = perfect_vs_damaged(1, 44);
    MetricConfig metric;
    auto rows = corpus_agreement_bootstrap(t.judgments, t.outputs, t.references, metric,
                                           1, 1, 9);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].accuracy == 0.0 || rows[0].accuracy == 1.0);
}

TEST(AgreementTest, ThreadCountDoesNotChangeBootstrap) {
    TwoSystems t = perfect_vs_damaged(8, 55);
    // make the comparison less one-sided so accuracy is not pinned at 1
    Rng rng(6);
    t.outputs["perfect"][0] = delete_edges(t.outputs["perfect"][0], 3, rng);
    MetricConfig metric;
    auto one = corpus_agreement_bootstrap(t.judgments, t.outputs, t.references, metric,
                                          200, 12, 77, 1);
    auto four = corpus_agreement_bootstrap(t.judgments, t.outputs, t.references, metric,
                                           200, 12, 77, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i)
        EXPECT_EQ(one[i].accuracy, four[i].accuracy);
}

TEST(AgreementTest, UnknownNamesAreRejected) {
    TwoSystems t = perfect_vs_damaged(3, 66);
    auto judgments = parse_judgments(tsv({"0\tperfect\tmystery\ta"}));
    MetricConfig metric;
    EXPECT_THROW(
        corpus_agreement_bootstrap(judgments, t.outputs, t.references, metric, 5, 5, 1),
        std::invalid_argument);
    auto out_of_range = parse_judgments(tsv({"99\tperfect\tdamaged\ta"}));
    EXPECT_THROW(sentence_agreement(out_of_range, t.outputs, t.references, metric),
                 std::invalid_argument);
}

TEST(RankTest, DuplicatedSystemTiesAndNeedsTwoSystems) {
    std::vector<Graph> refs = random_corpus(5, 11);
    std::map<std::string, std::vector<Graph>> outputs;
    outputs["copy1"] = refs;
    outputs["copy2"] = refs;
    RankReport report = rank_systems(outputs, refs);
    EXPECT_DOUBLE_EQ(report.sembleu[0].score, report.sembleu[1].score);
    EXPECT_EQ(report.sembleu[0].rank, 1);
    EXPECT_EQ(report.sembleu[1].rank, 1);
    EXPECT_EQ(report.ties.size(), 2u);  // one per metric
    EXPECT_TRUE(report.disagreements.empty());

    outputs.erase("copy2");
    EXPECT_THROW(rank_systems(outputs, refs), std::invalid_argument);
}

TEST(RankTest, GradedCorruptionRanksMonotonically) {
    std::vector<Graph> refs = random_corpus(12, 202);
    std::map<std::string, std::vector<Graph>> outputs;
    outputs["level0"] = refs;
    for (int level : {1, 3, 5}) {
        std::vector<Graph> damaged;
        for (std::size_t i = 0; i < refs.size(); ++i) {
            Rng rng(mix64(303, i));  // shared stream nests the deletions
            damaged.push_back(delete_edges(refs[i], static_cast<std::size_t>(level), rng));
        }
        outputs["level" + std::to_string(level)] = std::move(damaged);
    }
    RankReport report = rank_systems(outputs, refs);
    for (const auto& rows : {report.sembleu, report.smatch}) {
        ASSERT_EQ(rows.size(), 4u);
        for (int i = 0; i < 4; ++i)
            EXPECT_EQ(rows[static_cast<std::size_t>(i)].system,
                      "level" + std::to_string(std::vector<int>{0, 1, 3, 5}[i]));
        EXPECT_DOUBLE_EQ(rows[0].score, 1.0);
    }
    EXPECT_TRUE(report.disagreements.empty());
}

TEST(BenchTest, ReportsBothMetricsOnTinyCorpus) {
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(parse_penman(kAsk), parse_penman(kMake));
    BenchReport report = benchmark(pairs);
    EXPECT_EQ(report.pairs, 1u);
    EXPECT_GE(report.sembleu_seconds, 0.0);
    EXPECT_GT(report.smatch_seconds, 0.0);
    EXPECT_NEAR(report.smatch_f1, 0.266667, 1e-6);
    EXPECT_EQ(report.sembleu_value, 0.0);  // corpus default: no smoothing
}

TEST(SyntheticTest, CorpusIsReproducibleAndParsable) {
    std::vector<Graph> a = random_corpus(6, 77);
    std::vector<Graph> b = random_corpus(6, 77);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(serialize_penman(a[i]), serialize_penman(b[i]));
        Graph back = parse_penman(serialize_penman(a[i]));
        EXPECT_EQ(back.node_count(), a[i].node_count());
        EXPECT_EQ(back.edge_count(), a[i].edge_count());
        EXPECT_DOUBLE_EQ(sembleu_sentence(back, a[i]).value, 1.0);
    }
}

TEST(SyntheticTest, SizeBoundsAreRespected) {
    SyntheticConfig cfg;
    cfg.min_nodes = 6;
    cfg.max_nodes = 9;
    for (const Graph& g : random_corpus(25, 5, cfg)) {
        EXPECT_GE(g.node_count(), 6u);
        EXPECT_LE(g.node_count(), 9u);
    }
}

TEST(SyntheticTest, DeletionsNestAlongASharedStream) {
    Graph g = random_corpus(1, 8)[0];
    Rng r1(99), r3(99);
    Graph d1 = delete_edges(g, 1, r1);
    Graph d3 = delete_edges(g, 3, r3);
    // first deletion identical, so the 3-edge version is a further-damaged
    // copy of the 1-edge version: every one of its ngrams appears in d1
    NGramMultiset m1 = extract_ngrams(normalize_inverse(d1), 3);
    NGramMultiset m3 = extract_ngrams(normalize_inverse(d3), 3);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto [matched, total] = clipped_matches(m3, m1, k);
        EXPECT_EQ(matched, total) << "order " << k;
    }
    EXPECT_LT(d3.edge_count(), d1.edge_count());
}

TEST(SyntheticTest, DeleteKeepsGraphRootedAndConnected) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_corpus(1, seed)[0];
        Rng rng(seed);
        Graph d = delete_edges(g, 2, rng);
        // serialize would throw if any node were unreachable from the root
        EXPECT_NO_THROW(serialize_penman(d));
        EXPECT_DOUBLE_EQ(smatch_score(d, d).f1, 1.0);
    }
}

TEST(SyntheticTest, RelabelChangesExactlyKNodes) {
    Graph g = random_corpus(1, 31)[0];
    Rng rng(4);
    Graph r = relabel_nodes(g, 3, rng);
    ASSERT_EQ(r.node_count(), g.node_count());
    std::size_t changed = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].label != r.nodes[i].label) ++changed;
    EXPECT_EQ(changed, 3u);
}
