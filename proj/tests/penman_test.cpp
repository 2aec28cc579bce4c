#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sembleu/penman.hpp"

using namespace sembleu;

namespace {

// isomorphism up to node ids: label multisets, edge descriptor multisets,
// root label
struct Shape {
    std::multiset<std::string> nodes;
    std::multiset<std::string> edges;
    std::string root;
};

Shape shape_of(const Graph& g) {
    Shape s;
    for (const auto& n : g.nodes) s.nodes.insert(n.label);
    for (const auto& e : g.edges)
        s.edges.insert(g.nodes[e.source].label + "|" + e.label + "|" +
                       g.nodes[e.target].label);
    s.root = g.nodes[g.root].label;
    return s;
}

}  // namespace

TEST(PenmanTest, ParsesNestedGraph) {
    Graph g = parse_penman("(a / ask-01 :ARG0 (g / girl) :ARG1 (l / leave-11 :ARG0 (b / boy)))");
    ASSERT_EQ(g.nodes.size(), 4u);
    ASSERT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(g.nodes[g.root].label, "ask-01");
    EXPECT_EQ(g.nodes[g.root].var, "a");
    EXPECT_TRUE(g.nodes[g.root].is_variable);
    EXPECT_EQ(g.edges[0].label, "arg0");  // roles are lowercased
    EXPECT_EQ(g.nodes[g.edges[0].target].label, "girl");
}

TEST(PenmanTest, ConstantsBecomeLeafNodes) {
    Graph g = parse_penman("(p / pie :quant 2 :polarity - :wiki \"Boston\")");
    ASSERT_EQ(g.nodes.size(), 4u);
    ASSERT_EQ(g.edges.size(), 3u);
    std::map<std::string, std::string> by_role;
    for (const auto& e : g.edges) by_role[e.label] = g.nodes[e.target].label;
    EXPECT_EQ(by_role["quant"], "2");
    EXPECT_EQ(by_role["polarity"], "-");
    EXPECT_EQ(by_role["wiki"], "boston");  // quotes stripped, lowercased
    for (const auto& e : g.edges) EXPECT_FALSE(g.nodes[e.target].is_variable);
}

TEST(PenmanTest, QuotedStringsKeepSpacesAndEscapes) {
    Graph g = parse_penman("(c / city :name \"New \\\"York\\\"\")");
    ASSERT_EQ(g.nodes.size(), 2u);
    EXPECT_EQ(g.nodes[1].label, "new \"york\"");
}

TEST(PenmanTest, StripsAlignmentMarkup) {
    Graph g = parse_penman("(w / want-01~e.2 :ARG0~e.1 (b / boy~e.0))");
    EXPECT_EQ(g.nodes[g.root].label, "want-01");
    EXPECT_EQ(g.edges[0].label, "arg0");
    EXPECT_EQ(g.nodes[g.edges[0].target].label, "boy");
}

TEST(PenmanTest, ReentrancyReusesTheNode) {
    Graph g = parse_penman("(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))");
    EXPECT_EQ(g.nodes.size(), 3u);
    EXPECT_EQ(g.edges.size(), 3u);
}

TEST(PenmanTest, ForwardReferenceResolves) {
    Graph g = parse_penman("(a / and :op1 b :op2 (b / boy))");
    ASSERT_EQ(g.nodes.size(), 2u);
    EXPECT_EQ(g.edges.size(), 2u);
    EXPECT_EQ(g.edges[0].label, "op1");
    EXPECT_EQ(g.nodes[g.edges[0].target].label, "boy");
}

TEST(PenmanTest, DuplicateEdgesCollapse) {
    Graph g = parse_penman("(a / and :op1 (b / boy) :op1 b)");
    EXPECT_EQ(g.edges.size(), 1u);
    Graph h = parse_penman("(a / and :op1 (b / boy) :op2 b)");
    EXPECT_EQ(h.edges.size(), 2u);  // different labels stay distinct
}

TEST(PenmanTest, UndeclaredBareTokenIsAnError) {
    try {
        parse_penman("(a / ask-01 :ARG0 nobody)");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_GT(e.offset(), 0u);
        EXPECT_NE(std::string(e.what()).find("nobody"), std::string::npos);
    }
}

TEST(PenmanTest, LenientModeTreatsBareTokensAsConstants) {
    ParseOptions opts;
    opts.lenient_refs = true;
    Graph g = parse_penman("(a / ask-01 :ARG0 nobody)", opts);
    ASSERT_EQ(g.nodes.size(), 2u);
    EXPECT_FALSE(g.nodes[1].is_variable);
    EXPECT_EQ(g.nodes[1].label, "nobody");
}

TEST(PenmanTest, DuplicateVariableDeclarationIsAnError) {
    EXPECT_THROW(parse_penman("(a / ask-01 :ARG0 (a / boy))"), ParseError);
}

TEST(PenmanTest, RejectsMalformedInput) {
    EXPECT_THROW(parse_penman(""), ParseError);
    EXPECT_THROW(parse_penman("(a / ask-01"), ParseError);
    EXPECT_THROW(parse_penman("(a ask-01)"), ParseError);
    EXPECT_THROW(parse_penman("(a / ask-01)) extra"), ParseError);
}

TEST(PenmanTest, NumbersAreConstants) {
    Graph g = parse_penman("(t / temperature :quant -3.5)");
    EXPECT_FALSE(g.nodes[1].is_variable);
    EXPECT_EQ(g.nodes[1].label, "-3.5");
}

TEST(PenmanTest, CorpusSplitsOnBlankLinesAndSkipsComments) {
    std::string text =
        "# first sentence\n"
        "(a / ask-01)\n"
        "\n"
        "# second sentence\n"
        "(b / boy)\n"
        "\n"
        "(c / city)\n";
    auto graphs = parse_corpus(text);
    ASSERT_EQ(graphs.size(), 3u);
    EXPECT_EQ(graphs[0].nodes[0].label, "ask-01");
    EXPECT_EQ(graphs[1].nodes[0].label, "boy");
    EXPECT_EQ(graphs[2].nodes[0].label, "city");
}

TEST(PenmanTest, CorpusHandlesCrlf) {
    auto graphs = parse_corpus("(a / ask-01)\r\n\r\n(b / boy)\r\n");
    ASSERT_EQ(graphs.size(), 2u);
}

TEST(PenmanTest, CorpusErrorNamesTheBlock) {
    try {
        parse_corpus("(a / ask-01)\n\n(b / )\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.block(), 2u);
        EXPECT_NE(std::string(e.what()).find("block 2"), std::string::npos);
    }
}

TEST(PenmanTest, EmptyCorpusIsEmpty) {
    EXPECT_TRUE(parse_corpus("").empty());
    EXPECT_TRUE(parse_corpus("# only comments\n\n").empty());
}

TEST(PenmanTest, RoundTripPreservesShape) {
    const char* samples[] = {
        "(a / ask-01 :ARG0 (g / girl) :ARG1 (l / leave-11 :ARG0 (b / boy)))",
        "(m / make-01 :ARG0 (w / woman) :ARG1 (p / pie :quant 2))",
        "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))",
        "(s / say-01 :ARG0 (p / person :wiki \"Mary\") :polarity -)",
        "(a / and :op1 (b / boy) :op2 (c / city :mod b))",
    };
    for (const char* s : samples) {
        Graph g = parse_penman(s);
        Graph back = parse_penman(serialize_penman(g));
        EXPECT_EQ(shape_of(g).nodes, shape_of(back).nodes) << s;
        EXPECT_EQ(shape_of(g).edges, shape_of(back).edges) << s;
        EXPECT_EQ(shape_of(g).root, shape_of(back).root) << s;
    }
}

TEST(PenmanTest, RoundTripHandlesCycles) {
    Graph g = parse_penman("(a / attack-01 :ARG1 (c / country :mod a))");
    Graph back = parse_penman(serialize_penman(g));
    EXPECT_EQ(shape_of(g).edges, shape_of(back).edges);
}

TEST(PenmanTest, SerializeRejectsUnreachableNodes) {
    Graph g;
    g.nodes.push_back({"ask-01", "a", true});
    g.nodes.push_back({"orphan", "o", true});
    g.root = 0;
    EXPECT_THROW(serialize_penman(g), std::invalid_argument);
}

TEST(PenmanTest, WriteCorpusRoundTrips) {
    auto graphs = parse_corpus("(a / ask-01 :ARG0 (g / girl))\n\n(b / boy)\n");
    std::ostringstream out;
    write_corpus(out, graphs);
    auto back = parse_corpus(out.str());
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(shape_of(back[0]).edges, shape_of(graphs[0]).edges);
    EXPECT_EQ(back[1].nodes[0].label, "boy");
}
