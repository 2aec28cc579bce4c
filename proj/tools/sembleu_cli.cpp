// Command-line front end: scoring, agreement studies, corpus generation.
// Input AMR files are UTF-8 text with blank-line separated PENMAN blocks;
// `#`-prefixed lines are ignored. Reports go to stdout as JSON unless
// --out is given.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sembleu/sembleu.hpp"

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<sembleu::Graph> load_corpus(const std::string& path,
                                        const sembleu::ParseOptions& opts = {}) {
    try {
        return sembleu::parse_corpus(read_file(path), opts);
    } catch (const sembleu::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

void emit_json(const std::string& out_path, const ordered_json& j) {
    write_text(out_path, j.dump(2) + "\n");
}

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

std::vector<double> parse_weights(const std::string& csv) {
    std::vector<double> weights;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            weights.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error("bad weight `" + item + "` in --weights");
        }
    }
    return weights;
}

std::map<std::string, std::vector<sembleu::Graph>> load_systems(
    const std::vector<std::string>& specs) {
    std::map<std::string, std::vector<sembleu::Graph>> out;
    for (const std::string& spec : specs) {
        std::size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
            throw std::runtime_error("--system expects NAME=FILE, got `" + spec + "`");
        std::string name = spec.substr(0, eq);
        if (out.count(name)) throw std::runtime_error("duplicate system name `" + name + "`");
        out[name] = load_corpus(spec.substr(eq + 1));
    }
    return out;
}

sembleu::Smoothing parse_smoothing(const std::string& name) {
    return name == "nist" ? sembleu::Smoothing::NistGeometric : sembleu::Smoothing::None;
}

sembleu::TopMode parse_top(const std::string& name) {
    return name == "root-only" ? sembleu::TopMode::RootOnly : sembleu::TopMode::Concept;
}

ordered_json score_report(const sembleu::SembleuScore& score, std::size_t pairs,
                          std::size_t max_order, int precision) {
    ordered_json j;
    j["mode"] = "corpus";
    j["pairs"] = pairs;
    j["max_order"] = max_order;
    j["value"] = round4(score.value);
    j["percent"] = sembleu::format_percent(score.value, precision);
    j["brevity_penalty"] = round4(score.brevity_penalty);
    j["candidate_size"] = score.candidate_size;
    j["reference_size"] = score.reference_size;
    j["precisions"] = ordered_json::array();
    for (const auto& op : score.precisions) {
        ordered_json row;
        row["order"] = op.order;
        row["matched"] = op.matched;
        row["total"] = op.total;
        row["p"] = round4(op.p);
        j["precisions"].push_back(row);
    }
    return j;
}

ordered_json smatch_report(const sembleu::SmatchResult& r, const sembleu::SmatchOptions& opts,
                           const std::string& top, int precision) {
    ordered_json j;
    j["precision"] = round4(r.precision);
    j["recall"] = round4(r.recall);
    j["f1"] = round4(r.f1);
    j["precision_percent"] = sembleu::format_percent(r.precision, precision);
    j["recall_percent"] = sembleu::format_percent(r.recall, precision);
    j["f1_percent"] = sembleu::format_percent(r.f1, precision);
    j["matched_triples"] = r.matched_triples;
    j["candidate_triples"] = r.candidate_triples;
    j["reference_triples"] = r.reference_triples;
    j["restarts"] = opts.restarts;
    j["seed"] = opts.seed;
    j["top"] = top;
    return j;
}

struct CorruptStep {
    enum class Kind { DeleteEdges, RelabelNodes, RelabelEdges } kind;
    std::size_t amount = 0;
};

CorruptStep parse_corrupt(const std::string& spec) {
    std::size_t eq = spec.find('=');
    std::string name = eq == std::string::npos ? spec : spec.substr(0, eq);
    CorruptStep step{CorruptStep::Kind::DeleteEdges, 1};
    if (name == "delete-edges")
        step.kind = CorruptStep::Kind::DeleteEdges;
    else if (name == "relabel-nodes")
        step.kind = CorruptStep::Kind::RelabelNodes;
    else if (name == "relabel-edges")
        step.kind = CorruptStep::Kind::RelabelEdges;
    else
        throw std::runtime_error("unknown corruption `" + name +
                                 "` (use delete-edges, relabel-nodes, relabel-edges)");
    if (eq != std::string::npos) {
        try {
            std::size_t used = 0;
            long long k = std::stoll(spec.substr(eq + 1), &used);
            if (used != spec.size() - eq - 1 || k < 0) throw std::invalid_argument("");
            step.amount = static_cast<std::size_t>(k);
        } catch (const std::exception&) {
            throw std::runtime_error("bad corruption amount in `" + spec + "`");
        }
    }
    return step;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SemBleu and Smatch evaluation toolkit for AMR graphs"};
    app.require_subcommand(1);

    // score
    std::string sc_cands, sc_refs, sc_smoothing, sc_mode = "corpus", sc_weights, sc_out;
    std::size_t sc_max_order = 3;
    int sc_precision = 2;
    CLI::App* score = app.add_subcommand("score", "SemBleu score for candidate vs reference AMRs");
    score->add_option("--candidates", sc_cands, "candidate AMR file")->required();
    score->add_option("--references", sc_refs, "reference AMR file")->required();
    score->add_option("--max-order", sc_max_order, "largest n-gram order (default 3)");
    score->add_option("--smoothing", sc_smoothing,
                      "zero-match smoothing (default: nist in sentence mode, none in corpus mode)")
        ->check(CLI::IsMember({"none", "nist"}));
    score->add_option("--mode", sc_mode, "corpus or sentence (default corpus)")
        ->check(CLI::IsMember({"corpus", "sentence"}));
    score->add_option("--weights", sc_weights, "comma-separated per-order weights summing to 1");
    score->add_option("--precision", sc_precision, "significant digits for percents (default 2)");
    score->add_option("--out", sc_out, "write the report here instead of stdout");

    // smatch
    std::string sm_cands, sm_refs, sm_top = "concept", sm_out;
    int sm_restarts = 4, sm_precision = 2;
    std::uint64_t sm_seed = 0;
    bool sm_per_sentence = false;
    CLI::App* smatch = app.add_subcommand("smatch", "Smatch F1 for candidate vs reference AMRs");
    smatch->add_option("--candidates", sm_cands, "candidate AMR file")->required();
    smatch->add_option("--references", sm_refs, "reference AMR file")->required();
    smatch->add_option("-r,--restarts", sm_restarts, "hill-climbing restarts (default 4)");
    smatch->add_option("--seed", sm_seed, "random seed (default 0)");
    smatch->add_flag("--per-sentence", sm_per_sentence,
                     "emit one index<TAB>P<TAB>R<TAB>F1 line per pair instead of a corpus report");
    smatch->add_option("--top", sm_top,
                       "top-triple convention: concept (roots and root concepts must agree) "
                       "or root-only (default concept)")
        ->check(CLI::IsMember({"concept", "root-only"}));
    smatch->add_option("--precision", sm_precision, "significant digits for percents (default 2)");
    smatch->add_option("--out", sm_out, "write the report here instead of stdout");

    // variance
    std::string va_cands, va_refs, va_rvalues = "1,2,4", va_out;
    int va_runs = 20;
    std::uint64_t va_seed = 0;
    CLI::App* variance =
        app.add_subcommand("variance", "Smatch restart-variance study over repeated seeded runs");
    variance->add_option("--candidates", va_cands, "candidate AMR file")->required();
    variance->add_option("--references", va_refs, "reference AMR file")->required();
    variance->add_option("--r-values", va_rvalues, "comma-separated restart counts (default 1,2,4)");
    variance->add_option("--runs", va_runs, "runs per restart count (default 20, minimum 2)");
    variance->add_option("--seed", va_seed, "master seed (default 0)");
    variance->add_option("--out", va_out, "write the report here instead of stdout");

    // agree-corpus
    std::string ac_judgments, ac_refs, ac_metric = "sembleu", ac_top = "concept", ac_out;
    std::vector<std::string> ac_systems;
    int ac_samples = 1000, ac_sample_size = 100, ac_threads = 1, ac_restarts = 4;
    std::size_t ac_max_order = 3;
    std::uint64_t ac_seed = 0;
    CLI::App* agree_corpus = app.add_subcommand(
        "agree-corpus", "bootstrap agreement between a metric and human preferences");
    agree_corpus->add_option("--judgments", ac_judgments, "judgments TSV file")->required();
    agree_corpus->add_option("--references", ac_refs, "reference AMR file")->required();
    agree_corpus
        ->add_option("--system", ac_systems, "system output as NAME=FILE (repeatable)")
        ->required();
    agree_corpus->add_option("--metric", ac_metric, "sembleu or smatch (default sembleu)")
        ->check(CLI::IsMember({"sembleu", "smatch"}));
    agree_corpus->add_option("--samples", ac_samples, "bootstrap resamples (default 1000)");
    agree_corpus->add_option("--sample-size", ac_sample_size,
                             "sentences per resample (default 100)");
    agree_corpus->add_option("--seed", ac_seed, "master seed (default 0)");
    agree_corpus->add_option("--threads", ac_threads, "worker threads (default 1)");
    agree_corpus->add_option("--max-order", ac_max_order, "SemBleu n-gram order (default 3)");
    agree_corpus->add_option("-r,--restarts", ac_restarts, "Smatch restarts (default 4)");
    agree_corpus->add_option("--top", ac_top, "Smatch top-triple convention")
        ->check(CLI::IsMember({"concept", "root-only"}));
    agree_corpus->add_option("--out", ac_out, "write the report here instead of stdout");

    // agree-sentence
    std::string as_judgments, as_refs, as_metric = "sembleu", as_top = "concept", as_out;
    std::vector<std::string> as_systems;
    int as_restarts = 4, as_precision = 2;
    std::size_t as_max_order = 3;
    std::uint64_t as_seed = 0;
    CLI::App* agree_sentence = app.add_subcommand(
        "agree-sentence", "per-judgment agreement between a metric and human preferences");
    agree_sentence->add_option("--judgments", as_judgments, "judgments TSV file")->required();
    agree_sentence->add_option("--references", as_refs, "reference AMR file")->required();
    agree_sentence
        ->add_option("--system", as_systems, "system output as NAME=FILE (repeatable)")
        ->required();
    agree_sentence->add_option("--metric", as_metric, "sembleu or smatch (default sembleu)")
        ->check(CLI::IsMember({"sembleu", "smatch"}));
    agree_sentence->add_option("--seed", as_seed, "Smatch seed (default 0)");
    agree_sentence->add_option("--max-order", as_max_order, "SemBleu n-gram order (default 3)");
    agree_sentence->add_option("-r,--restarts", as_restarts, "Smatch restarts (default 4)");
    agree_sentence->add_option("--top", as_top, "Smatch top-triple convention")
        ->check(CLI::IsMember({"concept", "root-only"}));
    agree_sentence->add_option("--precision", as_precision,
                               "significant digits for percents (default 2)");
    agree_sentence->add_option("--out", as_out, "write the report here instead of stdout");

    // growth
    std::string gr_input, gr_csv, gr_out;
    std::size_t gr_max_order = 3;
    CLI::App* growth =
        app.add_subcommand("growth", "n-gram totals per graph plus least-squares slopes");
    growth->add_option("--input", gr_input, "AMR corpus file")->required();
    growth->add_option("--max-order", gr_max_order, "largest n-gram order (default 3)");
    growth->add_option("--csv", gr_csv, "also write nodes,order,count rows to this CSV file");
    growth->add_option("--out", gr_out, "write the report here instead of stdout");

    // rank
    std::string rk_refs, rk_top = "concept", rk_out;
    std::vector<std::string> rk_systems;
    int rk_restarts = 4;
    std::size_t rk_max_order = 3;
    std::uint64_t rk_seed = 0;
    CLI::App* rank = app.add_subcommand("rank", "rank systems by corpus SemBleu and Smatch");
    rank->add_option("--references", rk_refs, "reference AMR file")->required();
    rank->add_option("--system", rk_systems, "system output as NAME=FILE (repeatable)")
        ->required();
    rank->add_option("--max-order", rk_max_order, "SemBleu n-gram order (default 3)");
    rank->add_option("-r,--restarts", rk_restarts, "Smatch restarts (default 4)");
    rank->add_option("--seed", rk_seed, "Smatch seed (default 0)");
    rank->add_option("--top", rk_top, "Smatch top-triple convention")
        ->check(CLI::IsMember({"concept", "root-only"}));
    rank->add_option("--out", rk_out, "write the report here instead of stdout");

    // bench
    std::string be_cands, be_refs, be_out;
    int be_restarts = 4;
    std::size_t be_max_order = 3;
    std::uint64_t be_seed = 0;
    CLI::App* bench =
        app.add_subcommand("bench", "time corpus SemBleu and corpus Smatch on the same pairs");
    bench->add_option("--candidates", be_cands, "candidate AMR file")->required();
    bench->add_option("--references", be_refs, "reference AMR file")->required();
    bench->add_option("--max-order", be_max_order, "SemBleu n-gram order (default 3)");
    bench->add_option("-r,--restarts", be_restarts, "Smatch restarts (default 4)");
    bench->add_option("--seed", be_seed, "Smatch seed (default 0)");
    bench->add_option("--out", be_out, "write the report here instead of stdout");

    // gen-synthetic
    std::string gs_out, gs_corrupt_out;
    std::vector<std::string> gs_corrupt;
    std::size_t gs_count = 100, gs_min_nodes = 8, gs_max_nodes = 20;
    double gs_reentrancy = 0.10, gs_constants = 0.20, gs_inverse = 0.08;
    std::uint64_t gs_seed = 1;
    CLI::App* gen = app.add_subcommand("gen-synthetic",
                                       "generate a random AMR corpus, optionally with a "
                                       "corrupted copy for use as system output");
    gen->add_option("--count", gs_count, "number of graphs (default 100)");
    gen->add_option("--min-nodes", gs_min_nodes, "minimum variable nodes per graph (default 8)");
    gen->add_option("--max-nodes", gs_max_nodes, "maximum variable nodes per graph (default 20)");
    gen->add_option("--seed", gs_seed, "master seed (default 1)");
    gen->add_option("--reentrancy", gs_reentrancy, "re-entrant edge probability (default 0.10)");
    gen->add_option("--constants", gs_constants, "constant leaf probability (default 0.20)");
    gen->add_option("--inverse", gs_inverse, "-of role probability (default 0.08)");
    gen->add_option("--out", gs_out, "reference corpus file to write")->required();
    gen->add_option("--corrupt", gs_corrupt,
                    "corruption step KIND[=K], applied in order per graph; kinds: "
                    "delete-edges, relabel-nodes, relabel-edges (repeatable)");
    gen->add_option("--corrupt-out", gs_corrupt_out, "file for the corrupted copy");

    // ngrams (debug)
    std::string ng_input, ng_out;
    std::size_t ng_max_order = 3;
    CLI::App* ngrams = app.add_subcommand(
        "ngrams", "dump extracted n-grams per graph as order<TAB>key<TAB>count "
                  "(keys join labels with the unit separator, U+001F)");
    ngrams->add_option("--input", ng_input, "AMR corpus file")->required();
    ngrams->add_option("--max-order", ng_max_order, "largest n-gram order (default 3)");
    ngrams->add_option("--out", ng_out, "write the dump here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*score) {
            sembleu::SembleuConfig cfg;
            cfg.max_order = sc_max_order;
            if (!sc_weights.empty()) cfg.weights = parse_weights(sc_weights);
            if (!sc_smoothing.empty()) cfg.smoothing = parse_smoothing(sc_smoothing);
            cfg.validate();
            auto pairs = sembleu::make_pairs(load_corpus(sc_cands), load_corpus(sc_refs));
            if (sc_mode == "sentence") {
                std::ostringstream lines;
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    auto s = sembleu::sembleu_sentence(pairs[i].first, pairs[i].second, cfg);
                    lines << i << '\t' << sembleu::format_percent(s.value, sc_precision)
                          << '\n';
                }
                write_text(sc_out, lines.str());
            } else {
                auto s = sembleu::sembleu_corpus(pairs, cfg);
                emit_json(sc_out, score_report(s, pairs.size(), cfg.max_order, sc_precision));
            }
        } else if (*smatch) {
            sembleu::SmatchOptions opts;
            opts.restarts = sm_restarts;
            opts.seed = sm_seed;
            opts.top = parse_top(sm_top);
            opts.validate();
            auto pairs = sembleu::make_pairs(load_corpus(sm_cands), load_corpus(sm_refs));
            if (sm_per_sentence) {
                std::ostringstream lines;
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    sembleu::SmatchOptions po = opts;
                    po.seed = sembleu::mix64(opts.seed, i);
                    auto r = sembleu::smatch_score(pairs[i].first, pairs[i].second, po);
                    lines << i << '\t' << sembleu::format_percent(r.precision, sm_precision)
                          << '\t' << sembleu::format_percent(r.recall, sm_precision) << '\t'
                          << sembleu::format_percent(r.f1, sm_precision) << '\n';
                }
                write_text(sm_out, lines.str());
            } else {
                auto r = sembleu::smatch_corpus(pairs, opts);
                emit_json(sm_out, smatch_report(r, opts, sm_top, sm_precision));
            }
        } else if (*variance) {
            std::vector<int> r_values;
            std::stringstream ss(va_rvalues);
            std::string item;
            while (std::getline(ss, item, ',')) r_values.push_back(std::stoi(item));
            auto pairs = sembleu::make_pairs(load_corpus(va_cands), load_corpus(va_refs));
            auto rows = sembleu::restart_variance(pairs, r_values, va_runs, va_seed);
            ordered_json j;
            j["runs"] = va_runs;
            j["seed"] = va_seed;
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["restarts"] = row.restarts;
                r["mean_f1"] = round4(row.mean_f1);
                r["min_f1"] = round4(row.min_f1);
                r["max_f1"] = round4(row.max_f1);
                r["spread"] = round4(row.spread);
                r["seconds"] = row.seconds;
                j["rows"].push_back(r);
            }
            emit_json(va_out, j);
        } else if (*agree_corpus) {
            sembleu::MetricConfig metric;
            metric.kind = ac_metric == "smatch" ? sembleu::MetricKind::Smatch
                                                : sembleu::MetricKind::Sembleu;
            metric.sembleu.max_order = ac_max_order;
            metric.smatch.restarts = ac_restarts;
            metric.smatch.seed = ac_seed;
            metric.smatch.top = parse_top(ac_top);
            auto refs = load_corpus(ac_refs);
            auto outputs = load_systems(ac_systems);
            std::ifstream jin(ac_judgments);
            if (!jin) throw std::runtime_error("cannot open " + ac_judgments);
            auto judgments = sembleu::parse_judgments(jin);
            auto pairs = sembleu::corpus_agreement_bootstrap(
                judgments, outputs, refs, metric, ac_samples, ac_sample_size, ac_seed,
                ac_threads);
            ordered_json j;
            j["metric"] = ac_metric;
            j["samples"] = ac_samples;
            j["sample_size"] = ac_sample_size;
            j["seed"] = ac_seed;
            j["pairs"] = ordered_json::array();
            for (const auto& p : pairs) {
                ordered_json row;
                row["system_a"] = p.system_a;
                row["system_b"] = p.system_b;
                row["accuracy"] = round4(p.accuracy);
                j["pairs"].push_back(row);
            }
            emit_json(ac_out, j);
        } else if (*agree_sentence) {
            sembleu::MetricConfig metric;
            metric.kind = as_metric == "smatch" ? sembleu::MetricKind::Smatch
                                                : sembleu::MetricKind::Sembleu;
            metric.sembleu.max_order = as_max_order;
            metric.smatch.restarts = as_restarts;
            metric.smatch.seed = as_seed;
            metric.smatch.top = parse_top(as_top);
            auto refs = load_corpus(as_refs);
            auto outputs = load_systems(as_systems);
            std::ifstream jin(as_judgments);
            if (!jin) throw std::runtime_error("cannot open " + as_judgments);
            auto judgments = sembleu::parse_judgments(jin);
            auto result = sembleu::sentence_agreement(judgments, outputs, refs, metric);
            ordered_json j;
            j["metric"] = as_metric;
            j["consistent"] = result.consistent;
            j["total"] = result.total;
            j["accuracy"] = round4(result.accuracy);
            j["percent"] = sembleu::format_percent(result.accuracy, as_precision);
            emit_json(as_out, j);
        } else if (*growth) {
            auto graphs = load_corpus(gr_input);
            auto report = sembleu::ngram_growth(graphs, gr_max_order);
            if (!gr_csv.empty()) {
                std::ofstream csv(gr_csv, std::ios::binary);
                if (!csv) throw std::runtime_error("cannot write " + gr_csv);
                sembleu::write_growth_csv(csv, report);
            }
            ordered_json j;
            j["max_order"] = report.max_order;
            j["graphs"] = report.records.size();
            j["fits"] = ordered_json::array();
            for (const auto& fit : report.fits) {
                ordered_json f;
                f["order"] = fit.order;
                f["slope"] = fit.slope;
                f["intercept"] = fit.intercept;
                j["fits"].push_back(f);
            }
            j["records"] = ordered_json::array();
            for (const auto& rec : report.records) {
                ordered_json r;
                r["nodes"] = rec.nodes;
                r["totals"] = rec.totals;
                j["records"].push_back(r);
            }
            emit_json(gr_out, j);
        } else if (*rank) {
            sembleu::SembleuConfig cfg;
            cfg.max_order = rk_max_order;
            sembleu::SmatchOptions opts;
            opts.restarts = rk_restarts;
            opts.seed = rk_seed;
            opts.top = parse_top(rk_top);
            auto refs = load_corpus(rk_refs);
            auto outputs = load_systems(rk_systems);
            auto report = sembleu::rank_systems(outputs, refs, cfg, opts);
            ordered_json j;
            auto dump_rows = [](const std::vector<sembleu::RankedScore>& rows) {
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) {
                    ordered_json r;
                    r["system"] = row.system;
                    r["score"] = round4(row.score);
                    r["rank"] = row.rank;
                    arr.push_back(r);
                }
                return arr;
            };
            j["sembleu"] = dump_rows(report.sembleu);
            j["smatch"] = dump_rows(report.smatch);
            j["disagreements"] = ordered_json::array();
            for (const auto& d : report.disagreements) {
                ordered_json r;
                r["system_a"] = d.system_a;
                r["system_b"] = d.system_b;
                r["sembleu_delta"] = d.sembleu_delta;
                r["smatch_delta"] = d.smatch_delta;
                j["disagreements"].push_back(r);
            }
            j["ties"] = ordered_json::array();
            for (const auto& t : report.ties) {
                ordered_json r;
                r["metric"] = t.metric;
                r["system_a"] = t.system_a;
                r["system_b"] = t.system_b;
                j["ties"].push_back(r);
            }
            emit_json(rk_out, j);
        } else if (*bench) {
            sembleu::SembleuConfig cfg;
            cfg.max_order = be_max_order;
            sembleu::SmatchOptions opts;
            opts.restarts = be_restarts;
            opts.seed = be_seed;
            auto pairs = sembleu::make_pairs(load_corpus(be_cands), load_corpus(be_refs));
            auto report = sembleu::benchmark(pairs, cfg, opts);
            ordered_json j;
            j["pairs"] = report.pairs;
            j["sembleu_seconds"] = report.sembleu_seconds;
            j["sembleu_value"] = round4(report.sembleu_value);
            j["smatch_seconds"] = report.smatch_seconds;
            j["smatch_f1"] = round4(report.smatch_f1);
            j["ratio"] = report.ratio;
            emit_json(be_out, j);
        } else if (*gen) {
            sembleu::SyntheticConfig cfg;
            cfg.min_nodes = gs_min_nodes;
            cfg.max_nodes = gs_max_nodes;
            cfg.reentrancy_prob = gs_reentrancy;
            cfg.constant_prob = gs_constants;
            cfg.inverse_prob = gs_inverse;
            auto graphs = sembleu::random_corpus(gs_count, gs_seed, cfg);
            {
                std::ofstream out(gs_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + gs_out);
                sembleu::write_corpus(out, graphs);
            }
            ordered_json j;
            j["count"] = graphs.size();
            j["out"] = gs_out;
            if (!gs_corrupt.empty()) {
                if (gs_corrupt_out.empty())
                    throw std::runtime_error("--corrupt requires --corrupt-out FILE");
                std::vector<CorruptStep> steps;
                for (const auto& spec : gs_corrupt) steps.push_back(parse_corrupt(spec));
                std::vector<sembleu::Graph> corrupted;
                corrupted.reserve(graphs.size());
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    sembleu::Rng rng(sembleu::mix64(sembleu::mix64(gs_seed, 0xC0DEull), i));
                    sembleu::Graph g = graphs[i];
                    for (const auto& step : steps) {
                        switch (step.kind) {
                            case CorruptStep::Kind::DeleteEdges:
                                g = sembleu::delete_edges(g, step.amount, rng);
                                break;
                            case CorruptStep::Kind::RelabelNodes:
                                g = sembleu::relabel_nodes(g, step.amount, rng);
                                break;
                            case CorruptStep::Kind::RelabelEdges:
                                g = sembleu::relabel_edges(g, step.amount, rng);
                                break;
                        }
                    }
                    corrupted.push_back(std::move(g));
                }
                std::ofstream out(gs_corrupt_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + gs_corrupt_out);
                sembleu::write_corpus(out, corrupted);
                j["corrupt_out"] = gs_corrupt_out;
            }
            emit_json("", j);
        } else if (*ngrams) {
            auto graphs = load_corpus(ng_input);
            std::ostringstream lines;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                lines << "# graph " << i << '\n';
                sembleu::Graph norm = sembleu::normalize_inverse(graphs[i]);
                sembleu::NGramMultiset ms = sembleu::extract_ngrams(norm, ng_max_order);
                std::vector<std::tuple<std::size_t, std::string, std::uint64_t>> rows;
                for (std::size_t k = 1; k <= ms.max_order(); ++k)
                    for (const auto& [key, count] : ms.order_counts(k))
                        rows.push_back({k, key, count});
                std::sort(rows.begin(), rows.end());
                for (const auto& [order, key, count] : rows)
                    lines << order << '\t' << key << '\t' << count << '\n';
            }
            write_text(ng_out, lines.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
