#ifndef MGSEP_AUGMENTATION_HPP
#define MGSEP_AUGMENTATION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "mgsep/mixed_graph.hpp"
#include "mgsep/undirected_graph.hpp"

namespace mgsep {

namespace detail {

/// For each vertex v, the sorted set of district ids hit by {v} together
/// with the children of v. Two vertices are collider connected exactly when
/// these sets intersect (or the vertices are adjacent, which the sets cover
/// as well; adjacency is kept as a separate fast check).
inline std::vector<std::vector<int>> collider_reach_sets(const MixedGraph& g,
                                                         const std::vector<int>& district_ids) {
    std::vector<std::vector<int>> reach(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<int>& ids = reach[v];
        ids.push_back(district_ids[v]);
        for (int ch : g.children_of(static_cast<int>(v))) {
            ids.push_back(district_ids[static_cast<std::size_t>(ch)]);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    return reach;
}

inline bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Whether u and v are joined by a pure collider path (every intermediate
/// vertex a collider). Computed by the closed form: u, v adjacent, or the
/// districts of u plus its children meet the districts of v plus its
/// children. A single edge counts (no intermediates to constrain).
inline bool collider_connected(const MixedGraph& g, const std::string& u, const std::string& v) {
    int ui = g.index_of(u);
    int vi = g.index_of(v);
    if (g.adjacent(ui, vi)) return true;
    std::vector<int> ids = g.district_ids(nullptr);
    std::vector<std::vector<int>> reach = detail::collider_reach_sets(g, ids);
    return detail::sorted_intersects(reach[static_cast<std::size_t>(ui)],
                                     reach[static_cast<std::size_t>(vi)]);
}

/// The augmented graph: same vertex set, one undirected edge per collider
/// connected pair. Never contains self-loops.
inline UndirectedGraph augmented_graph(const MixedGraph& g) {
    std::vector<int> ids = g.district_ids(nullptr);
    std::vector<std::vector<int>> reach = detail::collider_reach_sets(g, ids);
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(g.vertex_count());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) ||
                detail::sorted_intersects(reach[static_cast<std::size_t>(u)],
                                          reach[static_cast<std::size_t>(v)])) {
                edges.emplace_back(u, v);
            }
        }
    }
    return UndirectedGraph::from_indexed(g.vertex_names(), std::move(edges));
}

}  // namespace mgsep

#endif
