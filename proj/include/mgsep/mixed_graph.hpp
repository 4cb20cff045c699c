#ifndef MGSEP_MIXED_GRAPH_HPP
#define MGSEP_MIXED_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mgsep/errors.hpp"

namespace mgsep {

/// A set of vertex names. std::set iterates lexicographically, which is the
/// stable order used everywhere results are produced.
using VertexSet = std::set<std::string>;

enum class EdgeKind { Directed, Bidirected };

/// A single edge. Directed edges run u -> v (tail at u, head at v);
/// bidirected edges are unordered and kept with u < v once stored in a graph.
struct Edge {
    EdgeKind kind;
    std::string u;
    std::string v;

    static Edge directed(std::string tail, std::string head) {
        return Edge{EdgeKind::Directed, std::move(tail), std::move(head)};
    }
    static Edge bidirected(std::string a, std::string b) {
        return Edge{EdgeKind::Bidirected, std::move(a), std::move(b)};
    }

    friend bool operator==(const Edge& lhs, const Edge& rhs) {
        if (lhs.kind != rhs.kind) return false;
        if (lhs.kind == EdgeKind::Directed) return lhs.u == rhs.u && lhs.v == rhs.v;
        return (lhs.u == rhs.u && lhs.v == rhs.v) || (lhs.u == rhs.v && lhs.v == rhs.u);
    }
};

/// Rejects names that could not round-trip through the text format:
/// empty strings, whitespace or control characters, and the reserved
/// punctuation "->" and "#" ("<->" contains "->").
inline void validate_vertex_name(const std::string& name) {
    if (name.empty()) throw MalformedVertexNameError(name);
    for (unsigned char ch : name) {
        if (ch <= 0x20 || ch == 0x7f) throw MalformedVertexNameError(name);
    }
    if (name.find("->") != std::string::npos || name.find('#') != std::string::npos) {
        throw MalformedVertexNameError(name);
    }
}

/// Immutable mixed graph with directed and bidirected edges.
///
/// Vertices are kept sorted by name; the index of a vertex is its position in
/// that order, so index-based iteration is deterministic. All queries are
/// pure; there is no mutation after construction.
class MixedGraph {
public:
    MixedGraph() = default;

    /// Builds a graph from a vertex list and an edge list. Endpoints missing
    /// from the vertex list are added; duplicate vertices and edges collapse.
    /// Throws SelfLoopError and MalformedVertexNameError.
    static MixedGraph build(const std::vector<std::string>& vertices,
                            const std::vector<Edge>& edges) {
        std::vector<std::string> names = vertices;
        for (const Edge& e : edges) {
            names.push_back(e.u);
            names.push_back(e.v);
        }
        for (const std::string& name : names) validate_vertex_name(name);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());

        MixedGraph g;
        g.names_ = std::move(names);
        std::vector<std::pair<int, int>> dir, bidir;
        for (const Edge& e : edges) {
            if (e.u == e.v) throw SelfLoopError(e.u);
            int ui = g.unchecked_index(e.u);
            int vi = g.unchecked_index(e.v);
            if (e.kind == EdgeKind::Directed) {
                dir.emplace_back(ui, vi);
            } else {
                bidir.emplace_back(std::min(ui, vi), std::max(ui, vi));
            }
        }
        g.finish_edges(std::move(dir), std::move(bidir));
        return g;
    }

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return directed_.size() + bidirected_.size(); }
    std::size_t directed_count() const { return directed_.size(); }
    std::size_t bidirected_count() const { return bidirected_.size(); }

    /// Vertex names in the stable (lexicographic) order.
    const std::vector<std::string>& vertex_names() const { return names_; }

    bool has_vertex(const std::string& name) const { return unchecked_index(name) >= 0; }

    int index_of(const std::string& name) const {
        int idx = unchecked_index(name);
        if (idx < 0) throw UnknownVertexError(name);
        return idx;
    }

    const std::string& name_of(int idx) const { return names_[static_cast<std::size_t>(idx)]; }

    /// Directed edges as (tail, head) index pairs, sorted.
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }
    /// Bidirected edges as (lo, hi) index pairs, sorted.
    const std::vector<std::pair<int, int>>& bidirected_edges() const { return bidirected_; }

    /// All edges in deterministic order: directed sorted by (tail, head),
    /// then bidirected sorted by (lo, hi).
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (auto [t, h] : directed_) out.push_back(Edge::directed(names_[t], names_[h]));
        for (auto [a, b] : bidirected_) out.push_back(Edge::bidirected(names_[a], names_[b]));
        return out;
    }

    const std::vector<int>& parents_of(int v) const { return parents_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children_of(int v) const { return children_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& spouses_of(int v) const { return spouses_[static_cast<std::size_t>(v)]; }

    bool has_directed(int tail, int head) const {
        return std::binary_search(directed_.begin(), directed_.end(), std::make_pair(tail, head));
    }
    bool has_bidirected(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(bidirected_.begin(), bidirected_.end(), std::make_pair(a, b));
    }
    bool adjacent(int a, int b) const {
        return has_directed(a, b) || has_directed(b, a) || has_bidirected(a, b);
    }
    bool has_directed(const std::string& tail, const std::string& head) const {
        return has_directed(index_of(tail), index_of(head));
    }
    bool has_bidirected(const std::string& a, const std::string& b) const {
        return has_bidirected(index_of(a), index_of(b));
    }
    bool adjacent(const std::string& a, const std::string& b) const {
        return adjacent(index_of(a), index_of(b));
    }

    /// pa(S): union of parents of members, minus S itself.
    VertexSet parents(const VertexSet& s) const { return neighbor_union(s, parents_); }
    /// ch(S): union of children of members, minus S itself.
    VertexSet children(const VertexSet& s) const { return neighbor_union(s, children_); }
    /// sp(S): union of spouses of members, minus S itself.
    VertexSet spouses(const VertexSet& s) const { return neighbor_union(s, spouses_); }

    /// an(S): reflexive-transitive closure of the parent relation. Result
    /// always contains S; well-defined in the presence of directed cycles.
    VertexSet ancestors(const VertexSet& s) const {
        std::vector<char> mask = ancestor_mask(to_indices(s));
        VertexSet out;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (mask[i]) out.insert(names_[i]);
        }
        return out;
    }

    /// Connected components of the bidirected-only subgraph, ordered by their
    /// smallest member. Every vertex appears in exactly one component.
    std::vector<VertexSet> districts() const {
        std::vector<int> ids = district_ids(nullptr);
        int count = 0;
        for (int id : ids) count = std::max(count, id + 1);
        std::vector<VertexSet> out(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < names_.size(); ++i) {
            out[static_cast<std::size_t>(ids[i])].insert(names_[i]);
        }
        return out;
    }

    /// dis(S): union of the districts touching S.
    VertexSet district_of(const VertexSet& s) const {
        std::vector<int> seeds = to_indices(s);
        std::vector<int> ids = district_ids(nullptr);
        std::vector<char> keep(names_.size(), 0);
        for (int v : seeds) keep[static_cast<std::size_t>(ids[v])] = 1;
        VertexSet out;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (keep[static_cast<std::size_t>(ids[i])]) out.insert(names_[i]);
        }
        return out;
    }

    /// G_S: subgraph induced by S (edges with both endpoints in S).
    MixedGraph induced_subgraph(const VertexSet& s) const {
        std::vector<int> keep = to_indices(s);
        return induced_subgraph_by_index(keep);
    }

    /// Index-space variant; `keep` must be sorted and duplicate-free.
    MixedGraph induced_subgraph_by_index(const std::vector<int>& keep) const {
        std::vector<int> remap(names_.size(), -1);
        MixedGraph g;
        g.names_.reserve(keep.size());
        for (int v : keep) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(g.names_.size());
            g.names_.push_back(names_[static_cast<std::size_t>(v)]);
        }
        std::vector<std::pair<int, int>> dir, bidir;
        for (auto [t, h] : directed_) {
            if (remap[t] >= 0 && remap[h] >= 0) dir.emplace_back(remap[t], remap[h]);
        }
        for (auto [a, b] : bidirected_) {
            if (remap[a] >= 0 && remap[b] >= 0) bidir.emplace_back(remap[a], remap[b]);
        }
        g.finish_edges(std::move(dir), std::move(bidir));
        return g;
    }

    /// Converts a name set to a sorted index vector, rejecting unknown names.
    std::vector<int> to_indices(const VertexSet& s) const {
        std::vector<int> out;
        out.reserve(s.size());
        for (const std::string& name : s) out.push_back(index_of(name));
        return out;  // already sorted: set iterates in name order = index order
    }

    VertexSet to_names(const std::vector<int>& idx) const {
        VertexSet out;
        for (int v : idx) out.insert(names_[static_cast<std::size_t>(v)]);
        return out;
    }

    /// Mask of an(seeds) over all vertices.
    std::vector<char> ancestor_mask(const std::vector<int>& seeds) const {
        std::vector<char> mask(names_.size(), 0);
        std::vector<int> stack(seeds);
        for (int v : seeds) mask[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int p : parents_[static_cast<std::size_t>(v)]) {
                if (!mask[static_cast<std::size_t>(p)]) {
                    mask[static_cast<std::size_t>(p)] = 1;
                    stack.push_back(p);
                }
            }
        }
        return mask;
    }

    /// District id per vertex (bidirected components), restricted to `mask`
    /// when given; vertices outside the mask get id -1. Ids are assigned in
    /// order of each component's smallest vertex.
    std::vector<int> district_ids(const std::vector<char>* mask) const {
        std::vector<int> ids(names_.size(), -1);
        int next = 0;
        std::vector<int> stack;
        for (std::size_t start = 0; start < names_.size(); ++start) {
            if (mask && !(*mask)[start]) continue;
            if (ids[start] >= 0) continue;
            ids[start] = next;
            stack.push_back(static_cast<int>(start));
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int s : spouses_[static_cast<std::size_t>(v)]) {
                    if (mask && !(*mask)[static_cast<std::size_t>(s)]) continue;
                    if (ids[static_cast<std::size_t>(s)] < 0) {
                        ids[static_cast<std::size_t>(s)] = next;
                        stack.push_back(s);
                    }
                }
            }
            ++next;
        }
        return ids;
    }

private:
    int unchecked_index(const std::string& name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return -1;
        return static_cast<int>(it - names_.begin());
    }

    void finish_edges(std::vector<std::pair<int, int>> dir, std::vector<std::pair<int, int>> bidir) {
        std::sort(dir.begin(), dir.end());
        dir.erase(std::unique(dir.begin(), dir.end()), dir.end());
        std::sort(bidir.begin(), bidir.end());
        bidir.erase(std::unique(bidir.begin(), bidir.end()), bidir.end());
        directed_ = std::move(dir);
        bidirected_ = std::move(bidir);
        parents_.assign(names_.size(), {});
        children_.assign(names_.size(), {});
        spouses_.assign(names_.size(), {});
        for (auto [t, h] : directed_) {
            children_[static_cast<std::size_t>(t)].push_back(h);
            parents_[static_cast<std::size_t>(h)].push_back(t);
        }
        for (auto [a, b] : bidirected_) {
            spouses_[static_cast<std::size_t>(a)].push_back(b);
            spouses_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& v : parents_) std::sort(v.begin(), v.end());
        for (auto& v : children_) std::sort(v.begin(), v.end());
        for (auto& v : spouses_) std::sort(v.begin(), v.end());
    }

    VertexSet neighbor_union(const VertexSet& s, const std::vector<std::vector<int>>& adj) const {
        std::vector<int> members = to_indices(s);
        VertexSet out;
        for (int v : members) {
            for (int n : adj[static_cast<std::size_t>(v)]) out.insert(names_[static_cast<std::size_t>(n)]);
        }
        for (const std::string& name : s) out.erase(name);
        return out;
    }

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> directed_;
    std::vector<std::pair<int, int>> bidirected_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> spouses_;
};

}  // namespace mgsep

#endif
