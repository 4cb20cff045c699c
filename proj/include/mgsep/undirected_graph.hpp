#ifndef MGSEP_UNDIRECTED_GRAPH_HPP
#define MGSEP_UNDIRECTED_GRAPH_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mgsep/errors.hpp"
#include "mgsep/mixed_graph.hpp"

namespace mgsep {

/// Immutable undirected graph over named vertices. Used for derived graphs
/// (augmentations and reductions) where only plain separation matters.
/// Same ordering conventions as MixedGraph: vertices sorted by name.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    static UndirectedGraph build(const std::vector<std::string>& vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
        std::vector<std::string> names = vertices;
        for (const auto& [a, b] : edges) {
            names.push_back(a);
            names.push_back(b);
        }
        for (const std::string& name : names) validate_vertex_name(name);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());

        UndirectedGraph g;
        g.names_ = std::move(names);
        std::vector<std::pair<int, int>> idx_edges;
        idx_edges.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            if (a == b) throw SelfLoopError(a);
            int ai = g.index_of(a);
            int bi = g.index_of(b);
            idx_edges.emplace_back(std::min(ai, bi), std::max(ai, bi));
        }
        g.finish_edges(std::move(idx_edges));
        return g;
    }

    /// Index-space constructor: names must be sorted and unique, edges use
    /// positions into `names`. Self-loops are dropped silently here (callers
    /// in the reduction path generate them legitimately and they are
    /// irrelevant for separation).
    static UndirectedGraph from_indexed(std::vector<std::string> names,
                                        std::vector<std::pair<int, int>> edges) {
        UndirectedGraph g;
        g.names_ = std::move(names);
        std::vector<std::pair<int, int>> kept;
        kept.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a == b) continue;
            kept.emplace_back(std::min(a, b), std::max(a, b));
        }
        g.finish_edges(std::move(kept));
        return g;
    }

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }

    bool has_vertex(const std::string& name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        return it != names_.end() && *it == name;
    }

    int index_of(const std::string& name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) throw UnknownVertexError(name);
        return static_cast<int>(it - names_.begin());
    }

    const std::string& name_of(int idx) const { return names_[static_cast<std::size_t>(idx)]; }

    /// Edges as (lo, hi) index pairs, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Edges as sorted name pairs (first < second).
    std::vector<std::pair<std::string, std::string>> edge_names() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(edges_.size());
        for (auto [a, b] : edges_) out.emplace_back(names_[a], names_[b]);
        return out;
    }

    const std::vector<int>& neighbors_of(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool adjacent(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
    }
    bool adjacent(const std::string& a, const std::string& b) const {
        return adjacent(index_of(a), index_of(b));
    }

private:
    void finish_edges(std::vector<std::pair<int, int>> edges) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_.assign(names_.size(), {});
        for (auto [a, b] : edges_) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& v : adj_) std::sort(v.begin(), v.end());
    }

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Plain undirected separation: true iff no vertex of B is reachable from A
/// once C is removed from H. A, B, C must be pairwise disjoint subsets of
/// the vertices of H.
inline bool u_separated(const UndirectedGraph& h, const VertexSet& a, const VertexSet& b,
                        const VertexSet& c) {
    std::vector<int> ai, bi, ci;
    for (const std::string& name : a) ai.push_back(h.index_of(name));
    for (const std::string& name : b) bi.push_back(h.index_of(name));
    for (const std::string& name : c) ci.push_back(h.index_of(name));

    std::vector<char> role(h.vertex_count(), 0);  // 1 = A, 2 = B, 3 = C
    auto mark = [&](const std::vector<int>& set, char tag) {
        for (int v : set) {
            if (role[static_cast<std::size_t>(v)] != 0) {
                throw OverlappingSetsError(h.name_of(v));
            }
            role[static_cast<std::size_t>(v)] = tag;
        }
    };
    mark(ai, 1);
    mark(bi, 2);
    mark(ci, 3);

    std::vector<char> seen(h.vertex_count(), 0);
    std::vector<int> stack;
    for (int v : ai) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : h.neighbors_of(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            if (role[static_cast<std::size_t>(w)] == 3) continue;  // blocked by C
            if (role[static_cast<std::size_t>(w)] == 2) return false;
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return true;
}

}  // namespace mgsep

#endif
