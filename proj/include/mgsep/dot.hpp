#ifndef MGSEP_DOT_HPP
#define MGSEP_DOT_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mgsep/mixed_graph.hpp"
#include "mgsep/separation.hpp"
#include "mgsep/undirected_graph.hpp"

namespace mgsep {

namespace detail {

inline std::string dot_quote(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

}  // namespace detail

inline std::string to_dot(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (const std::string& name : g.vertex_names()) {
        out << "  " << detail::dot_quote(name) << ";\n";
    }
    for (const auto& [u, v] : g.edge_names()) {
        out << "  " << detail::dot_quote(u) << " -- " << detail::dot_quote(v) << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const std::string& name : g.vertex_names()) {
        out << "  " << detail::dot_quote(name) << ";\n";
    }
    for (auto [t, h] : g.directed_edges()) {
        out << "  " << detail::dot_quote(g.name_of(t)) << " -> " << detail::dot_quote(g.name_of(h))
            << ";\n";
    }
    for (auto [x, y] : g.bidirected_edges()) {
        out << "  " << detail::dot_quote(g.name_of(x)) << " -> " << detail::dot_quote(g.name_of(y))
            << " [dir=both];\n";
    }
    out << "}\n";
    return out.str();
}

/// Renders the reduction with every multi-vertex contracted district drawn
/// as a single node labeled with its members. Edges inside a contracted
/// district disappear; parallel edges between the same rendered endpoints
/// collapse to one.
inline std::string to_dot(const ReducedGraph& rg) {
    const UndirectedGraph& g = rg.graph;

    std::map<std::string, std::string> render_id;  // vertex name -> rendered node id
    std::vector<std::string> district_nodes;
    for (const VertexSet& district : rg.contracted_districts) {
        if (district.size() < 2) continue;
        std::string label = "C={";
        bool first = true;
        for (const std::string& member : district) {
            if (!first) label += ",";
            label += member;
            first = false;
        }
        label += "}";
        district_nodes.push_back(label);
        for (const std::string& member : district) render_id[member] = label;
    }

    std::ostringstream out;
    out << "graph {\n";
    for (const std::string& name : g.vertex_names()) {
        if (!render_id.count(name)) out << "  " << detail::dot_quote(name) << ";\n";
    }
    for (const std::string& label : district_nodes) {
        out << "  " << detail::dot_quote(label) << ";\n";
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edge_names()) {
        auto iu = render_id.find(u);
        auto iv = render_id.find(v);
        std::string ru = iu == render_id.end() ? u : iu->second;
        std::string rv = iv == render_id.end() ? v : iv->second;
        if (ru == rv) continue;
        if (rv < ru) std::swap(ru, rv);
        edges.emplace_back(std::move(ru), std::move(rv));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) {
        out << "  " << detail::dot_quote(u) << " -- " << detail::dot_quote(v) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mgsep

#endif
