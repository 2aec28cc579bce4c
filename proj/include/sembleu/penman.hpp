// PENMAN notation reader and writer.
//
// Accepted shape, informally:
//
//   node     := '(' var '/' concept relation* ')'
//   relation := ':role' target
//   target   := node | var | constant
//
// Constants are numbers, double-quoted strings and the polarity tokens
// '-' / '+'. Any other bare target must resolve to a variable declared
// somewhere in the same expression (forward references are fine); with
// ParseOptions::lenient_refs the unresolved ones become constants instead.
// Labels are lowercased and '~' alignment markup is stripped while reading.
#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sembleu/graph.hpp"

namespace sembleu {

struct ParseOptions {
    // keep undeclared bare reference targets as constant nodes instead of
    // rejecting the graph
    bool lenient_refs = false;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset, int block = 0)
        : std::runtime_error(format(what, offset, block)),
          raw_(what), offset_(offset), block_(block) {}

    // character offset into the parsed block text
    std::size_t offset() const { return offset_; }
    // 1-based block number when raised by parse_corpus, 0 otherwise
    int block() const { return block_; }

    ParseError with_block(int block) const { return ParseError(raw_, offset_, block); }

  private:
    static std::string format(const std::string& what, std::size_t offset, int block) {
        std::ostringstream os;
        if (block > 0) os << "block " << block << ": ";
        os << what << " at offset " << offset;
        return os.str();
    }

    std::string raw_;
    std::size_t offset_;
    int block_;
};

namespace detail {

inline bool is_number_token(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i < s.size() && s[i] == '.') {
        ++i;
        std::size_t frac = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++frac;
        if (frac == 0) return false;
    }
    return i == s.size();
}

inline bool is_constant_token(std::string_view s) {
    return s == "-" || s == "+" || is_number_token(s);
}

inline std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// drop '~e.5'-style alignment suffixes
inline std::string strip_alignment(std::string s) {
    auto pos = s.find('~');
    if (pos != std::string::npos) s.erase(pos);
    return s;
}

}  // namespace detail

class PenmanParser {
  public:
    explicit PenmanParser(std::string_view text, ParseOptions opts = {})
        : text_(text), opts_(opts) {}

    Graph parse() {
        tokenize();
        if (tokens_.empty()) throw ParseError("empty input", 0);
        pos_ = 0;
        Ast root = parse_node();
        if (pos_ != tokens_.size()) {
            const Token& t = tokens_[pos_];
            if (t.kind == Token::RParen) throw ParseError("unbalanced parentheses", t.offset);
            throw ParseError("trailing content after graph", t.offset);
        }
        collect_vars(root);
        Graph g;
        g.root = declare(root, g);
        emit(root, g);
        return g;
    }

  private:
    struct Token {
        enum Kind { LParen, RParen, Slash, Role, Atom, Str } kind;
        std::string text;
        std::size_t offset;
    };

    struct Ref {
        std::string token;
        std::size_t offset;
        bool quoted;
    };

    struct Ast;
    struct Rel {
        std::string role;
        std::variant<std::unique_ptr<Ast>, Ref> target;
    };

    struct Ast {
        std::string var;
        std::size_t var_offset = 0;
        std::string concept_label;
        std::vector<Rel> rels;
    };

    void tokenize() {
        std::size_t i = 0;
        const std::size_t n = text_.size();
        while (i < n) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            std::size_t start = i;
            if (c == '(') { tokens_.push_back({Token::LParen, "(", start}); ++i; }
            else if (c == ')') { tokens_.push_back({Token::RParen, ")", start}); ++i; }
            else if (c == '/') { tokens_.push_back({Token::Slash, "/", start}); ++i; }
            else if (c == '"') {
                ++i;
                std::string s;
                bool closed = false;
                while (i < n) {
                    if (text_[i] == '\\' && i + 1 < n) { s += text_[i + 1]; i += 2; continue; }
                    if (text_[i] == '"') { closed = true; ++i; break; }
                    s += text_[i++];
                }
                if (!closed) throw ParseError("unterminated string", start);
                if (i < n && text_[i] == '~') i = skip_atom_chars(i);
                tokens_.push_back({Token::Str, detail::lowercase(std::move(s)), start});
            } else if (c == ':') {
                ++i;
                std::size_t body = i;
                i = skip_atom_chars(i);
                std::string role = detail::strip_alignment(
                    detail::lowercase(std::string(text_.substr(body, i - body))));
                if (role.empty()) throw ParseError("empty role name", start);
                tokens_.push_back({Token::Role, std::move(role), start});
            } else {
                i = skip_atom_chars(i);
                std::string atom = detail::strip_alignment(
                    detail::lowercase(std::string(text_.substr(start, i - start))));
                if (atom.empty()) throw ParseError("empty token", start);
                tokens_.push_back({Token::Atom, std::move(atom), start});
            }
        }
    }

    std::size_t skip_atom_chars(std::size_t i) const {
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
                c == '/' || c == ':' || c == '"')
                break;
            ++i;
        }
        return i;
    }

    const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

    std::size_t end_offset() const { return text_.size(); }

    Ast parse_node() {
        const Token* t = peek();
        if (!t) throw ParseError("unbalanced parentheses", end_offset());
        if (t->kind != Token::LParen) throw ParseError("expected '('", t->offset);
        ++pos_;

        t = peek();
        if (!t || t->kind != Token::Atom)
            throw ParseError("expected variable name", t ? t->offset : end_offset());
        Ast node;
        node.var = t->text;
        node.var_offset = t->offset;
        ++pos_;

        t = peek();
        if (!t || t->kind != Token::Slash)
            throw ParseError("expected '/' after variable", t ? t->offset : end_offset());
        ++pos_;

        t = peek();
        if (!t || t->kind != Token::Atom)
            throw ParseError("expected concept", t ? t->offset : end_offset());
        node.concept_label = t->text;
        ++pos_;

        while (true) {
            t = peek();
            if (!t) throw ParseError("unbalanced parentheses", end_offset());
            if (t->kind == Token::RParen) { ++pos_; return node; }
            if (t->kind != Token::Role) throw ParseError("expected role or ')'", t->offset);
            Rel rel;
            rel.role = t->text;
            ++pos_;

            t = peek();
            if (!t) throw ParseError("unbalanced parentheses", end_offset());
            if (t->kind == Token::LParen) {
                rel.target = std::make_unique<Ast>(parse_node());
            } else if (t->kind == Token::Str) {
                rel.target = Ref{t->text, t->offset, true};
                ++pos_;
            } else if (t->kind == Token::Atom) {
                rel.target = Ref{t->text, t->offset, false};
                ++pos_;
            } else {
                throw ParseError("expected relation target", t->offset);
            }
            node.rels.push_back(std::move(rel));
        }
    }

    void collect_vars(const Ast& node) {
        if (!declared_.insert(node.var).second)
            throw ParseError("duplicate declaration of variable '" + node.var + "'",
                             node.var_offset);
        for (const Rel& rel : node.rels)
            if (auto* child = std::get_if<std::unique_ptr<Ast>>(&rel.target))
                collect_vars(**child);
    }

    NodeId add_node(Graph& g, Node n) {
        g.nodes.push_back(std::move(n));
        return static_cast<NodeId>(g.nodes.size() - 1);
    }

    void add_edge(Graph& g, NodeId src, NodeId tgt, const std::string& label) {
        // duplicate (source, label, target) edges carry nothing; drop them
        if (seen_edges_.insert({src, tgt, label}).second)
            g.edges.push_back({src, tgt, label});
    }

    // Two passes over the tree so that forward references (a variable used
    // before its declaration) land in text order. declare() creates every
    // node at the position it appears; emit() then adds edges in the order
    // the relations were written.
    NodeId declare(const Ast& node, Graph& g) {
        NodeId id = add_node(g, Node{node.concept_label, node.var, true});
        built_[node.var] = id;
        for (const Rel& rel : node.rels) {
            if (auto* child = std::get_if<std::unique_ptr<Ast>>(&rel.target)) {
                declare(**child, g);
                continue;
            }
            const Ref& ref = std::get<Ref>(rel.target);
            if (!ref.quoted && declared_.count(ref.token)) continue;
            if (ref.quoted || detail::is_constant_token(ref.token) || opts_.lenient_refs)
                const_ids_.push_back(add_node(g, Node{ref.token, "", false}));
            else
                throw ParseError("reference to undeclared variable '" + ref.token + "'",
                                 ref.offset);
        }
        return id;
    }

    void emit(const Ast& node, Graph& g) {
        NodeId id = built_.at(node.var);
        for (const Rel& rel : node.rels) {
            if (auto* child = std::get_if<std::unique_ptr<Ast>>(&rel.target)) {
                add_edge(g, id, built_.at((**child).var), rel.role);
                emit(**child, g);
                continue;
            }
            const Ref& ref = std::get<Ref>(rel.target);
            if (!ref.quoted && declared_.count(ref.token))
                add_edge(g, id, built_.at(ref.token), rel.role);
            else
                add_edge(g, id, const_ids_[const_cursor_++], rel.role);
        }
    }

    std::string_view text_;
    ParseOptions opts_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::unordered_set<std::string> declared_;
    std::unordered_map<std::string, NodeId> built_;
    std::set<std::tuple<NodeId, NodeId, std::string>> seen_edges_;
    std::vector<NodeId> const_ids_;
    std::size_t const_cursor_ = 0;
};

inline Graph parse_penman(std::string_view text, ParseOptions opts = {}) {
    PenmanParser p(text, opts);
    return p.parse();
}

// Splits a document into AMR blocks on blank lines, skipping '#' comment
// lines, and parses each block. Throws ParseError carrying the 1-based
// block number of the offending block.
inline std::vector<Graph> parse_corpus(std::string_view text, ParseOptions opts = {}) {
    std::vector<std::string> blocks;
    std::string current;
    std::size_t line_start = 0;
    auto close_block = [&] {
        if (!current.empty()) blocks.push_back(std::move(current));
        current.clear();
    };
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            close_block();
        } else if (line[first] != '#') {
            if (!current.empty()) current += '\n';
            current += line;
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    close_block();

    std::vector<Graph> graphs;
    graphs.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        try {
            graphs.push_back(parse_penman(blocks[i], opts));
        } catch (const ParseError& e) {
            throw e.with_block(static_cast<int>(i) + 1);
        }
    }
    return graphs;
}

namespace detail {

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

// Writes a graph back to single-line PENMAN. Requires every node to be
// reachable from the root following stored edge directions. Constant nodes
// are inlined at each incoming edge; variables met again become bare
// re-entrant references, which also covers cycles.
inline std::string serialize_penman(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("cannot serialize an empty graph");

    // variable names: reuse stored ones when unique, otherwise derive from
    // the concept's first letter
    std::vector<std::string> names(g.nodes.size());
    std::set<std::string> used;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const Node& n = g.nodes[i];
        if (n.is_variable && !n.var.empty() && used.insert(n.var).second) names[i] = n.var;
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const Node& n = g.nodes[i];
        if (!n.is_variable || !names[i].empty()) continue;
        char initial = 'n';
        for (char c : n.label)
            if (std::isalpha(static_cast<unsigned char>(c))) { initial = c; break; }
        std::string base(1, initial);
        std::string candidate = base;
        for (int k = 2; !used.insert(candidate).second; ++k)
            candidate = base + std::to_string(k);
        names[i] = candidate;
    }

    std::vector<std::vector<std::size_t>> out_edges(g.nodes.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out_edges[g.edges[e].source].push_back(e);

    std::vector<bool> expanded(g.nodes.size(), false);
    std::string out;
    auto write = [&](auto&& self, NodeId id) -> void {
        const Node& n = g.nodes[id];
        if (!n.is_variable) {
            expanded[id] = true;
            out += detail::is_constant_token(n.label) ? n.label : detail::quote(n.label);
            return;
        }
        if (expanded[id]) {
            out += names[id];
            return;
        }
        expanded[id] = true;
        out += '(';
        out += names[id];
        out += " / ";
        out += n.label;
        for (std::size_t e : out_edges[id]) {
            out += " :";
            out += g.edges[e].label;
            out += ' ';
            self(self, g.edges[e].target);
        }
        out += ')';
    };
    write(write, g.root);

    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (!expanded[i])
            throw std::invalid_argument("graph has nodes unreachable from the root");
    return out;
}

inline void write_corpus(std::ostream& os, const std::vector<Graph>& graphs) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i) os << '\n';
        os << serialize_penman(graphs[i]) << '\n';
    }
}

}  // namespace sembleu
