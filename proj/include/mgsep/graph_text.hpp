#ifndef MGSEP_GRAPH_TEXT_HPP
#define MGSEP_GRAPH_TEXT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "mgsep/errors.hpp"
#include "mgsep/mixed_graph.hpp"

namespace mgsep {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace detail

/// Parses the line-based graph format:
///
///     # comment
///     node u
///     u -> v
///     u <-> v
///
/// Text after '#' is ignored. Endpoints of edge statements are declared
/// implicitly; `node` lines exist for isolated vertices. Reports errors
/// with 1-based line numbers.
inline MixedGraph parse_graph_file(const std::string& text) {
    VertexSet vertices;
    std::vector<Edge> edges;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::vector<std::string> tokens = detail::split_tokens(raw);
        if (tokens.empty()) continue;

        auto checked_name = [&](const std::string& name) {
            try {
                validate_vertex_name(name);
            } catch (const MalformedVertexNameError& e) {
                throw ParseError(lineno, e.what());
            }
            return name;
        };

        if (tokens[0] == "node") {
            if (tokens.size() != 2) {
                throw ParseError(lineno, "expected 'node <name>'");
            }
            vertices.insert(checked_name(tokens[1]));
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError(lineno, "expected 'node <name>', '<u> -> <v>' or '<u> <-> <v>'");
        }
        const std::string& u = checked_name(tokens[0]);
        const std::string& v = checked_name(tokens[2]);
        if (u == v) {
            throw ParseError(lineno, "self loop at vertex '" + u + "'");
        }
        if (tokens[1] == "->") {
            edges.push_back(Edge::directed(u, v));
        } else if (tokens[1] == "<->") {
            edges.push_back(Edge::bidirected(u, v));
        } else {
            throw ParseError(lineno, "unknown edge operator '" + tokens[1] + "'");
        }
    }
    return MixedGraph::build(std::vector<std::string>(vertices.begin(), vertices.end()), edges);
}

/// Canonical text form: `node` lines for isolated vertices in name order,
/// then directed edges sorted by (tail, head), then bidirected edges sorted
/// by their (smaller, larger) endpoint names. Parsing the output reproduces
/// the graph exactly.
inline std::string serialize_graph_file(const MixedGraph& g) {
    std::ostringstream out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int vi = static_cast<int>(v);
        if (g.parents_of(vi).empty() && g.children_of(vi).empty() && g.spouses_of(vi).empty()) {
            out << "node " << g.name_of(vi) << "\n";
        }
    }
    for (auto [t, h] : g.directed_edges()) {
        out << g.name_of(t) << " -> " << g.name_of(h) << "\n";
    }
    for (auto [x, y] : g.bidirected_edges()) {
        out << g.name_of(x) << " <-> " << g.name_of(y) << "\n";
    }
    return out.str();
}

}  // namespace mgsep

#endif
