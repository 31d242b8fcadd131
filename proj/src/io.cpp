#include "kappatree/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kappatree {

namespace {

using Json = nlohmann::ordered_json;
using EdgeList = std::vector<std::pair<std::string, std::string>>;

Graph finish(const EdgeList& edges, std::size_t last_line) {
    if (edges.empty()) {
        throw ParseError(last_line, "no edges");
    }
    Graph g = Graph::from_edges(edges);
    if (!g.connected()) {
        throw DisconnectedGraphError("graph is not connected");
    }
    return g;
}

Graph parse_edgelist(std::string_view text) {
    EdgeList edges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) {
            tokens.push_back(std::move(t));
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(number, "expected two vertex labels, found " + std::to_string(tokens.size()));
        }
        edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    }
    return finish(edges, number);
}

struct Token {
    enum class Kind { kId, kSymbol, kEnd };
    Kind kind;
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize_dot(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    auto is_id_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#' || text.substr(i, 2) == "//") {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
        } else if (text.substr(i, 2) == "/*") {
            const std::size_t end = text.find("*/", i + 2);
            if (end == std::string_view::npos) {
                throw ParseError(line, "unterminated comment");
            }
            for (std::size_t j = i; j < end; ++j) {
                line += text[j] == '\n';
            }
            i = end + 2;
        } else if (c == '"') {
            std::string id;
            const std::size_t start = line;
            ++i;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size()) {
                    ++i;
                }
                line += text[i] == '\n';
                id += text[i++];
            }
            if (i == text.size()) {
                throw ParseError(start, "unterminated string");
            }
            ++i;
            out.push_back({Token::Kind::kId, std::move(id), start});
        } else if (text.substr(i, 2) == "--" || text.substr(i, 2) == "->") {
            out.push_back({Token::Kind::kSymbol, std::string(text.substr(i, 2)), line});
            i += 2;
        } else if (is_id_char(c)) {
            std::string id;
            while (i < text.size() && is_id_char(text[i])) {
                id += text[i++];
            }
            out.push_back({Token::Kind::kId, std::move(id), line});
        } else {
            out.push_back({Token::Kind::kSymbol, std::string(1, c), line});
            ++i;
        }
    }
    out.push_back({Token::Kind::kEnd, "", line});
    return out;
}

Graph parse_dot(std::string_view text) {
    const std::vector<Token> tokens = tokenize_dot(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return tokens[pos]; };
    auto is = [&](std::string_view s) { return peek().text == s && peek().kind != Token::Kind::kEnd; };
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(peek().line, what); };

    if (peek().kind == Token::Kind::kId && peek().text == "strict") {
        ++pos;
    }
    if (is("digraph")) {
        throw fail("directed graphs are not supported");
    }
    if (!is("graph")) {
        throw fail("expected 'graph'");
    }
    ++pos;
    if (peek().kind == Token::Kind::kId) {
        ++pos;
    }
    if (!is("{")) {
        throw fail("expected '{'");
    }
    ++pos;

    EdgeList edges;
    std::vector<std::string> declared;
    while (!is("}")) {
        if (peek().kind == Token::Kind::kEnd) {
            throw fail("expected '}'");
        }
        if (is(";") || is(",")) {
            ++pos;
            continue;
        }
        if (peek().kind != Token::Kind::kId) {
            throw fail("unsupported statement starting with '" + peek().text + "'");
        }
        std::vector<std::string> chain{peek().text};
        ++pos;
        while (is("--") || is("->")) {
            if (is("->")) {
                throw fail("directed edge in undirected graph");
            }
            ++pos;
            if (peek().kind != Token::Kind::kId) {
                throw fail("expected node id after '--'");
            }
            chain.push_back(peek().text);
            ++pos;
        }
        if (chain.size() == 1) {
            declared.push_back(chain.front());
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            edges.emplace_back(chain[i], chain[i + 1]);
        }
        if (!is(";") && !is("}") && peek().kind != Token::Kind::kId) {
            throw fail("unsupported syntax '" + peek().text + "'");
        }
    }
    const std::size_t last = peek().line;
    if (edges.empty()) {
        throw ParseError(last, "no edges");
    }
    std::vector<std::string> labels = declared;
    for (const auto& [u, v] : edges) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    Graph g(std::move(labels), edges);
    if (!g.connected()) {
        throw DisconnectedGraphError("graph is not connected");
    }
    return g;
}

Json labels(const Graph& g, VertexSet s) { return Json(g.labels_of(s)); }

Json tree_document(const Analysis& a) {
    const StructureTree& t = a.tree;
    const Graph& g = a.graph;
    Json doc;
    doc["kappa"] = a.kappa ? Json(*a.kappa) : Json(nullptr);
    doc["trivial"] = a.trivial();
    doc["separators"] = Json::array();
    for (VertexSet s : t.separators) {
        doc["separators"].push_back(labels(g, s));
    }
    doc["blocks"] = Json::array();
    for (const BlockNode& b : t.blocks) {
        doc["blocks"].push_back(labels(g, b.vertices));
    }
    doc["slices"] = Json::array();
    for (const Slice& s : t.slices) {
        doc["slices"].push_back({{"vertices", labels(g, s.vertices)}, {"separator", labels(g, s.separator)}});
    }
    doc["cuts"] = Json::array();
    for (const Cut& c : t.system.cuts()) {
        const std::size_t parent = a.nested.parent_ids.empty() ? c.id : a.nested.parent_ids[c.id];
        doc["cuts"].push_back({{"id", c.id},
                               {"vertices", labels(g, c.vertices)},
                               {"boundary", labels(g, c.boundary)},
                               {"mu", a.stats.mu[parent]},
                               {"isA", a.classes[parent].is_a},
                               {"isB", a.classes[parent].is_b},
                               {"class", t.block_of_cut[c.id]}});
    }
    Json nodes = Json::array();
    for (std::size_t s = 0; s < t.separators.size(); ++s) {
        nodes.push_back({{"id", "S" + std::to_string(s)}, {"kind", "separator"}, {"vertices", labels(g, t.separators[s])}});
    }
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        nodes.push_back({{"id", "B" + std::to_string(b)}, {"kind", "block"}, {"vertices", labels(g, t.blocks[b].vertices)}});
    }
    Json edges = Json::array();
    for (const TreeEdge& e : t.edges) {
        edges.push_back({{"from", "S" + std::to_string(e.separator)}, {"to", "B" + std::to_string(e.block)}, {"cut", e.cut}});
    }
    doc["tree"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    doc["warnings"] = Json::array();
    for (const ExceptionalWarning& w : a.warnings) {
        doc["warnings"].push_back({{"cut", w.cut},
                                   {"block", "B" + std::to_string(w.block)},
                                   {"cut_block", "B" + std::to_string(w.cut_block)},
                                   {"omega_member", labels(g, a.omega.members[w.omega_member])}});
    }
    return doc;
}

const char* stop_name(StopReason r) {
    switch (r) {
        case StopReason::kExpanded:
            return "expanded";
        case StopReason::kTrivial:
            return "trivial";
        case StopReason::kDepthLimit:
            return "depth-limit";
    }
    return "trivial";
}

Json level_document(const DecompositionLevel& level) {
    Json doc = tree_document(level.analysis);
    doc["depth"] = level.depth;
    doc["recursion"] = Json::array();
    for (const auto& child : level.children) {
        Json c;
        c["block"] = "B" + std::to_string(child.block);
        c["vertices"] = labels(level.analysis.graph, child.block_graph.block);
        c["ideal_edges"] = Json::array();
        for (const auto& [u, v] : child.block_graph.ideal_edges) {
            c["ideal_edges"].push_back({u, v});
        }
        c["stop"] = stop_name(child.stop);
        if (!child.level.empty()) {
            c["level"] = level_document(child.level.front());
        }
        doc["recursion"].push_back(std::move(c));
    }
    return doc;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string dot_label(const Graph& g, VertexSet s) {
    std::string out;
    for (const std::string& l : g.labels_of(s)) {
        out += (out.empty() ? "" : ",") + dot_escape(l);
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text, InputFormat format) {
    return format == InputFormat::kDot ? parse_dot(text) : parse_edgelist(text);
}

std::string emit_edgelist(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.label(u) + " " + g.label(v) + "\n";
    }
    return out;
}

std::string emit_dot(const StructureTree& t) {
    std::ostringstream out;
    out << "digraph structure_tree {\n";
    for (std::size_t s = 0; s < t.separators.size(); ++s) {
        out << "  S" << s << " [label=\"" << dot_label(t.graph, t.separators[s])
            << "\", shape=circle, style=filled, fillcolor=white];\n";
    }
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        out << "  B" << b << " [label=\"" << dot_label(t.graph, t.blocks[b].vertices)
            << "\", shape=box, style=filled, fillcolor=black, fontcolor=white];\n";
    }
    for (const TreeEdge& e : t.edges) {
        out << "  S" << e.separator << " -> B" << e.block << " [label=\"" << e.cut << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string analysis_json(const Analysis& a) {
    Json doc;
    doc["kappa"] = a.kappa ? Json(*a.kappa) : Json(nullptr);
    doc["trivial"] = a.trivial();
    if (a.trivial()) {
        return doc.dump(2) + "\n";
    }
    const Graph& g = a.graph;
    doc["omega"] = Json::array();
    for (VertexSet y : a.omega.members) {
        doc["omega"].push_back(labels(g, y));
    }
    doc["separators"] = Json::array();
    for (VertexSet s : a.system.separators()) {
        doc["separators"].push_back(labels(g, s));
    }
    doc["cuts"] = Json::array();
    std::vector<std::optional<std::size_t>> selected(a.system.size());
    for (std::size_t i = 0; i < a.nested.parent_ids.size(); ++i) {
        selected[a.nested.parent_ids[i]] = i;
    }
    for (const Cut& c : a.system.cuts()) {
        Json cut = {{"id", c.id},
                    {"vertices", labels(g, c.vertices)},
                    {"boundary", labels(g, c.boundary)},
                    {"mu", a.stats.mu[c.id]},
                    {"isA", a.classes[c.id].is_a},
                    {"isB", a.classes[c.id].is_b}};
        cut["class"] = selected[c.id] ? Json(a.tree.block_of_cut[*selected[c.id]]) : Json(nullptr);
        doc["cuts"].push_back(std::move(cut));
    }
    doc["mu_min"] = a.stats.mu_min ? Json(*a.stats.mu_min) : Json(nullptr);
    doc["crossing_pairs"] = a.stats.crossing_pairs.size();
    doc["nested_cuts"] = a.nested.parent_ids;
    return doc.dump(2) + "\n";
}

std::string tree_json(const Analysis& a) { return tree_document(a).dump(2) + "\n"; }

std::string decomposition_json(const DecompositionReport& r) {
    Json doc = level_document(r.root);
    doc["checks"] = {{"kappa_increasing", r.kappa_increasing},
                     {"block_graphs_connected", r.block_graphs_connected},
                     {"depth_limit_hit", r.depth_limit_hit},
                     {"problems", r.problems}};
    return doc.dump(2) + "\n";
}

std::string certificate_json(const oracle::Certificate& c) {
    Json doc;
    doc["passed"] = c.passed();
    doc["axioms"] = {{"pairs_checked", c.axioms.pairs_checked},
                     {"A1", c.axioms.a1},
                     {"A2", c.axioms.a2},
                     {"A2_prime", c.axioms.a2_prime},
                     {"A2_equivalent", c.axioms.a2_equivalent}};
    doc["tree_valid"] = c.tree_valid;
    doc["oracle"] = {{"run", c.oracle_run},
                     {"kappa", c.kappa_agrees},
                     {"omega", c.omega_agrees},
                     {"cuts", c.cuts_agree},
                     {"nesting", c.nesting_agrees},
                     {"nested_pairs_checked", c.nested_pairs_checked}};
    doc["problems"] = c.problems;
    return doc.dump(2) + "\n";
}

}  // namespace kappatree
