#ifndef MGSEP_SEPARATION_HPP
#define MGSEP_SEPARATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mgsep/augmentation.hpp"
#include "mgsep/errors.hpp"
#include "mgsep/mixed_graph.hpp"
#include "mgsep/undirected_graph.hpp"
#include "mgsep/walk.hpp"

namespace mgsep {

/// Default cap for the exhaustive procedure; it enumerates walks over
/// (edge, orientation) states and is exponential in the worst case.
inline constexpr std::size_t kDefaultOracleMaxEdges = 14;

struct SeparationQuery {
    VertexSet a;
    VertexSet b;
    VertexSet c;
};

enum class Criterion { Walk, Augmentation, District, Oracle };

inline const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Walk: return "walk";
        case Criterion::Augmentation: return "augmentation";
        case Criterion::District: return "district";
        case Criterion::Oracle: return "oracle";
    }
    return "?";
}

/// Separation certificate: an enlargement of A and B over the ancestral
/// closure whose district closures in the induced subgraph are disjoint.
struct Certificate {
    VertexSet a_star;
    VertexSet b_star;
    VertexSet v_star;
};

/// Verdict plus a machine-checkable witness: a connecting walk when the
/// verdict is "connected", a certificate when it is "separated".
struct SeparationDecision {
    bool separated = false;
    Criterion criterion = Criterion::District;
    std::variant<Walk, Certificate> witness;

    const Walk& connecting_walk() const { return std::get<Walk>(witness); }
    const Certificate& certificate() const { return std::get<Certificate>(witness); }
};

/// The undirected reduction over V* = an(A u B u C): skeleton edges of the
/// induced subgraph plus one edge per pair of vertices sending arrowheads
/// into a common district of the subgraph induced by C. `contracted_districts`
/// lists the districts of that C-subgraph (used when rendering the graph
/// with merged district nodes).
struct ReducedGraph {
    UndirectedGraph graph;
    std::vector<VertexSet> contracted_districts;
};

namespace detail {

struct IndexQuery {
    std::vector<int> a, b, c;        // sorted vertex indices
    std::vector<char> in_a, in_b, in_c;
};

inline IndexQuery make_index_query(const MixedGraph& g, const std::vector<int>& a,
                                   const std::vector<int>& b, const std::vector<int>& c) {
    IndexQuery q;
    q.a = a;
    q.b = b;
    q.c = c;
    q.in_a.assign(g.vertex_count(), 0);
    q.in_b.assign(g.vertex_count(), 0);
    q.in_c.assign(g.vertex_count(), 0);
    auto mark = [&](const std::vector<int>& set, std::vector<char>& mask) {
        for (int v : set) {
            if (q.in_a[static_cast<std::size_t>(v)] || q.in_b[static_cast<std::size_t>(v)] ||
                q.in_c[static_cast<std::size_t>(v)]) {
                throw OverlappingSetsError(g.name_of(v));
            }
            mask[static_cast<std::size_t>(v)] = 1;
        }
    };
    mark(q.a, q.in_a);
    mark(q.b, q.in_b);
    mark(q.c, q.in_c);
    return q;
}

inline IndexQuery validate_query(const MixedGraph& g, const SeparationQuery& q) {
    return make_index_query(g, g.to_indices(q.a), g.to_indices(q.b), g.to_indices(q.c));
}

/// Traversal-state table: one state per (edge, orientation). Directed edge i
/// yields states 2i (tail to head) and 2i+1 (head to tail); bidirected edge j
/// yields states 2D+2j (lo to hi) and 2D+2j+1 (hi to lo).
struct WalkSpace {
    int nstates = 0;
    std::vector<int> entry, exit;
    std::vector<char> dep_arrow, arr_arrow;      // arrowhead at entry / exit end
    std::vector<std::vector<int>> out;           // states departing each vertex

    explicit WalkSpace(const MixedGraph& g) {
        const auto& dir = g.directed_edges();
        const auto& bidir = g.bidirected_edges();
        nstates = 2 * static_cast<int>(dir.size() + bidir.size());
        entry.resize(static_cast<std::size_t>(nstates));
        exit.resize(static_cast<std::size_t>(nstates));
        dep_arrow.resize(static_cast<std::size_t>(nstates));
        arr_arrow.resize(static_cast<std::size_t>(nstates));
        out.assign(g.vertex_count(), {});
        int s = 0;
        for (auto [t, h] : dir) {
            entry[s] = t; exit[s] = h; dep_arrow[s] = 0; arr_arrow[s] = 1;
            out[static_cast<std::size_t>(t)].push_back(s);
            ++s;
            entry[s] = h; exit[s] = t; dep_arrow[s] = 1; arr_arrow[s] = 0;
            out[static_cast<std::size_t>(h)].push_back(s);
            ++s;
        }
        for (auto [a, b] : bidir) {
            entry[s] = a; exit[s] = b; dep_arrow[s] = 1; arr_arrow[s] = 1;
            out[static_cast<std::size_t>(a)].push_back(s);
            ++s;
            entry[s] = b; exit[s] = a; dep_arrow[s] = 1; arr_arrow[s] = 1;
            out[static_cast<std::size_t>(b)].push_back(s);
            ++s;
        }
    }

    WalkStep step_of(const MixedGraph& g, int s) const {
        std::size_t d = g.directed_edges().size();
        if (static_cast<std::size_t>(s) < 2 * d) {
            auto [t, h] = g.directed_edges()[static_cast<std::size_t>(s) / 2];
            return WalkStep{Edge::directed(g.name_of(t), g.name_of(h)), s % 2 == 0};
        }
        std::size_t j = (static_cast<std::size_t>(s) - 2 * d) / 2;
        auto [a, b] = g.bidirected_edges()[j];
        return WalkStep{Edge::bidirected(g.name_of(a), g.name_of(b)),
                        (static_cast<std::size_t>(s) - 2 * d) % 2 == 0};
    }
};

/// Breadth-first reachability over (edge, orientation) states. A departure
/// from an intermediate vertex is legal exactly when the collider status it
/// induces matches membership in C. Returns true when separated; fills
/// `witness` with the reconstructed walk otherwise (when requested).
inline bool walk_separated_in(const MixedGraph& g, const WalkSpace& ws, const IndexQuery& q,
                              Walk* witness = nullptr) {
    std::vector<int> pred(static_cast<std::size_t>(ws.nstates), -2);  // -2 unseen, -1 initial
    std::vector<int> queue;
    int accept = -1;

    auto visit = [&](int state, int from) {
        pred[static_cast<std::size_t>(state)] = from;
        if (q.in_b[static_cast<std::size_t>(ws.exit[static_cast<std::size_t>(state)])]) {
            accept = state;
            return true;
        }
        queue.push_back(state);
        return false;
    };

    for (int a : q.a) {
        for (int s : ws.out[static_cast<std::size_t>(a)]) {
            if (pred[static_cast<std::size_t>(s)] != -2) continue;
            if (visit(s, -1)) goto done;
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int s = queue[head];
        int v = ws.exit[static_cast<std::size_t>(s)];
        for (int t : ws.out[static_cast<std::size_t>(v)]) {
            if (pred[static_cast<std::size_t>(t)] != -2) continue;
            bool collider = ws.arr_arrow[static_cast<std::size_t>(s)] &&
                            ws.dep_arrow[static_cast<std::size_t>(t)];
            if (collider != static_cast<bool>(q.in_c[static_cast<std::size_t>(v)])) continue;
            if (visit(t, s)) goto done;
        }
    }
done:
    if (accept < 0) return true;
    if (witness) {
        std::vector<int> chain;
        for (int s = accept; s >= 0; s = pred[static_cast<std::size_t>(s)]) chain.push_back(s);
        std::reverse(chain.begin(), chain.end());
        witness->start = g.name_of(ws.entry[static_cast<std::size_t>(chain.front())]);
        witness->steps.clear();
        for (int s : chain) witness->steps.push_back(ws.step_of(g, s));
    }
    return false;
}

inline bool walk_separated(const MixedGraph& g, const IndexQuery& q, Walk* witness = nullptr) {
    WalkSpace ws(g);
    return walk_separated_in(g, ws, q, witness);
}

/// Separation in the augmented graph of the ancestral induced subgraph,
/// evaluated without materializing either graph: reachability from A over
/// collider connected pairs inside V*, with C removed.
inline bool augmentation_separated(const MixedGraph& g, const IndexQuery& q) {
    std::vector<int> seeds;
    seeds.reserve(q.a.size() + q.b.size() + q.c.size());
    seeds.insert(seeds.end(), q.a.begin(), q.a.end());
    seeds.insert(seeds.end(), q.b.begin(), q.b.end());
    seeds.insert(seeds.end(), q.c.begin(), q.c.end());
    std::vector<char> in_w = g.ancestor_mask(seeds);
    std::vector<int> w;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (in_w[v]) w.push_back(static_cast<int>(v));
    }

    std::vector<int> ids = g.district_ids(&in_w);
    std::vector<std::vector<int>> reach(g.vertex_count());
    for (int v : w) {
        std::vector<int>& r = reach[static_cast<std::size_t>(v)];
        r.push_back(ids[static_cast<std::size_t>(v)]);
        for (int ch : g.children_of(v)) {
            if (in_w[static_cast<std::size_t>(ch)]) r.push_back(ids[static_cast<std::size_t>(ch)]);
        }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
    }

    auto connected_in_w = [&](int u, int v) {
        return g.adjacent(u, v) || sorted_intersects(reach[static_cast<std::size_t>(u)],
                                                     reach[static_cast<std::size_t>(v)]);
    };

    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int a : q.a) {
        seen[static_cast<std::size_t>(a)] = 1;
        stack.push_back(a);
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : w) {
            if (seen[static_cast<std::size_t>(v)] || v == u) continue;
            if (q.in_c[static_cast<std::size_t>(v)]) continue;
            if (!connected_in_w(u, v)) continue;
            if (q.in_b[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    }
    return true;
}

/// Everything the reduction construction produces, in original vertex
/// indices: V*, the districts of the C-induced subgraph, and the edges of
/// the undirected reduction (skeleton plus inserted pairs).
struct ReductionParts {
    std::vector<int> w;                   // V*, sorted
    std::vector<char> in_w;
    std::vector<int> c_district_ids;      // -1 outside C
    int c_district_count = 0;
    std::vector<std::pair<int, int>> edges;  // lo < hi, sorted, unique
};

inline ReductionParts build_reduction(const MixedGraph& g, const IndexQuery& q) {
    ReductionParts parts;
    std::vector<int> seeds;
    seeds.insert(seeds.end(), q.a.begin(), q.a.end());
    seeds.insert(seeds.end(), q.b.begin(), q.b.end());
    seeds.insert(seeds.end(), q.c.begin(), q.c.end());
    parts.in_w = g.ancestor_mask(seeds);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (parts.in_w[v]) parts.w.push_back(static_cast<int>(v));
    }

    parts.c_district_ids = g.district_ids(&q.in_c);
    for (int id : parts.c_district_ids) {
        parts.c_district_count = std::max(parts.c_district_count, id + 1);
    }

    // Arrowhead senders per C-district: v sends when some edge v -> c or
    // v <-> c of the induced subgraph over V* lands in the district.
    std::vector<std::vector<int>> senders(static_cast<std::size_t>(parts.c_district_count));
    auto add_sender = [&](int into_c, int from_v) {
        if (!parts.in_w[static_cast<std::size_t>(from_v)]) return;
        senders[static_cast<std::size_t>(parts.c_district_ids[static_cast<std::size_t>(into_c)])]
            .push_back(from_v);
    };
    for (auto [t, h] : g.directed_edges()) {
        if (q.in_c[static_cast<std::size_t>(h)]) add_sender(h, t);
    }
    for (auto [x, y] : g.bidirected_edges()) {
        if (q.in_c[static_cast<std::size_t>(x)]) add_sender(x, y);
        if (q.in_c[static_cast<std::size_t>(y)]) add_sender(y, x);
    }

    std::vector<std::pair<int, int>>& edges = parts.edges;
    for (auto [t, h] : g.directed_edges()) {
        if (parts.in_w[static_cast<std::size_t>(t)] && parts.in_w[static_cast<std::size_t>(h)]) {
            edges.emplace_back(std::min(t, h), std::max(t, h));
        }
    }
    for (auto [x, y] : g.bidirected_edges()) {
        if (parts.in_w[static_cast<std::size_t>(x)] && parts.in_w[static_cast<std::size_t>(y)]) {
            edges.emplace_back(x, y);
        }
    }
    for (std::vector<int>& group : senders) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                edges.emplace_back(group[i], group[j]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return parts;
}

/// The canonical enlargement: A* holds A plus every vertex of V* outside
/// B and C reachable from A in the reduction avoiding C; B* takes all of
/// V* \ (C u A*).
struct StarPartition {
    ReductionParts parts;
    std::vector<char> in_astar, in_bstar;
};

inline StarPartition partition_star_indexed(const MixedGraph& g, const IndexQuery& q) {
    StarPartition star;
    star.parts = build_reduction(g, q);

    std::vector<std::vector<int>> adj(g.vertex_count());
    for (auto [u, v] : star.parts.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<char> reach(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int a : q.a) {
        reach[static_cast<std::size_t>(a)] = 1;
        stack.push_back(a);
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (reach[static_cast<std::size_t>(v)] || q.in_c[static_cast<std::size_t>(v)]) continue;
            reach[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    }

    star.in_astar.assign(g.vertex_count(), 0);
    star.in_bstar.assign(g.vertex_count(), 0);
    for (int v : star.parts.w) {
        std::size_t i = static_cast<std::size_t>(v);
        if (q.in_c[i]) continue;
        if (reach[i] && !q.in_b[i]) {
            star.in_astar[i] = 1;
        } else {
            star.in_bstar[i] = 1;
        }
    }
    return star;
}

/// District criterion on a computed partition. Evaluates both equivalent
/// tests (district closures disjoint; A*, B* non-adjacent in the reduction)
/// and verifies they agree before answering.
inline bool district_separated_on(const MixedGraph& g, const StarPartition& star) {
    std::vector<int> ids = g.district_ids(&star.parts.in_w);

    auto closure_district_mask = [&](const std::vector<char>& in_set) {
        std::vector<char> hit(g.vertex_count() + 1, 0);  // by district id
        for (int v : star.parts.w) {
            std::size_t i = static_cast<std::size_t>(v);
            bool in_closure = in_set[i] != 0;
            if (!in_closure) continue;
            hit[static_cast<std::size_t>(ids[i])] = 1;
        }
        for (auto [t, h] : g.directed_edges()) {
            if (in_set[static_cast<std::size_t>(t)] && star.parts.in_w[static_cast<std::size_t>(h)]) {
                hit[static_cast<std::size_t>(ids[static_cast<std::size_t>(h)])] = 1;
            }
        }
        return hit;
    };
    std::vector<char> hit_a = closure_district_mask(star.in_astar);
    std::vector<char> hit_b = closure_district_mask(star.in_bstar);
    bool districts_disjoint = true;
    for (std::size_t i = 0; i < hit_a.size(); ++i) {
        if (hit_a[i] && hit_b[i]) {
            districts_disjoint = false;
            break;
        }
    }

    bool nonadjacent = true;
    for (auto [u, v] : star.parts.edges) {
        std::size_t ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
        if ((star.in_astar[ui] && star.in_bstar[vi]) || (star.in_astar[vi] && star.in_bstar[ui])) {
            nonadjacent = false;
            break;
        }
    }

    if (districts_disjoint != nonadjacent) {
        throw std::logic_error(
            "district criterion internal mismatch: closure test and adjacency test disagree");
    }
    return districts_disjoint;
}

inline bool district_separated(const MixedGraph& g, const IndexQuery& q) {
    StarPartition star = partition_star_indexed(g, q);
    return district_separated_on(g, star);
}

/// Exhaustive walk enumeration: depth-first over walks in which every
/// (edge, orientation) pair appears at most once, checking the m-connecting
/// condition at each intermediate vertex. Exponential; the caller keeps the
/// state count within the 64-bit used mask.
inline bool oracle_separated_in(const WalkSpace& ws, const IndexQuery& q) {
    struct Dfs {
        const WalkSpace& ws;
        const IndexQuery& q;
        bool connected(int v, int last, std::uint64_t used) const {
            for (int t : ws.out[static_cast<std::size_t>(v)]) {
                std::uint64_t bit = std::uint64_t{1} << t;
                if (used & bit) continue;
                if (last >= 0) {
                    bool collider = ws.arr_arrow[static_cast<std::size_t>(last)] &&
                                    ws.dep_arrow[static_cast<std::size_t>(t)];
                    if (collider != static_cast<bool>(q.in_c[static_cast<std::size_t>(v)])) continue;
                }
                int next = ws.exit[static_cast<std::size_t>(t)];
                if (q.in_b[static_cast<std::size_t>(next)]) return true;
                if (connected(next, t, used | bit)) return true;
            }
            return false;
        }
    } dfs{ws, q};

    for (int a : q.a) {
        if (dfs.connected(a, -1, 0)) return false;
    }
    return true;
}

inline bool oracle_separated(const MixedGraph& g, const IndexQuery& q, std::size_t max_edges) {
    std::size_t bound = std::min<std::size_t>(max_edges, 32);  // 2 states per edge, 64-bit mask
    if (g.edge_count() > bound) throw InstanceTooLargeError(g.edge_count(), bound);
    WalkSpace ws(g);
    return oracle_separated_in(ws, q);
}

/// Districts of the full graph reached by S together with its children;
/// the lemma's closed form compares two of these sets.
inline std::vector<int> boundary_reach(const MixedGraph& g, const std::vector<int>& set,
                                       const std::vector<int>& district_ids) {
    std::vector<int> out;
    for (int v : set) {
        out.push_back(district_ids[static_cast<std::size_t>(v)]);
        for (int ch : g.children_of(v)) out.push_back(district_ids[static_cast<std::size_t>(ch)]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Witness helpers shared by the decision procedures: a connecting walk from
/// the state-space search, a certificate from the canonical construction.
namespace detail {

inline Certificate make_certificate(const MixedGraph& g, const StarPartition& star) {
    Certificate cert;
    for (int v : star.parts.w) {
        std::size_t i = static_cast<std::size_t>(v);
        cert.v_star.insert(g.name_of(v));
        if (star.in_astar[i]) cert.a_star.insert(g.name_of(v));
        if (star.in_bstar[i]) cert.b_star.insert(g.name_of(v));
    }
    return cert;
}

inline SeparationDecision finish_decision(const MixedGraph& g, const IndexQuery& q,
                                          bool separated, Criterion crit) {
    SeparationDecision d;
    d.separated = separated;
    d.criterion = crit;
    if (separated) {
        StarPartition star = partition_star_indexed(g, q);
        d.witness = make_certificate(g, star);
    } else {
        Walk walk;
        if (walk_separated(g, q, &walk)) {
            throw CriterionDisagreementError("criterion reported a connection but no walk exists");
        }
        d.witness = std::move(walk);
    }
    return d;
}

}  // namespace detail

/// m-separation via breadth-first walk reachability. Connected verdicts carry
/// the walk the search found; separated verdicts carry a certificate built by
/// the canonical enlargement.
inline SeparationDecision msep_walk(const MixedGraph& g, const SeparationQuery& q) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    SeparationDecision d;
    d.criterion = Criterion::Walk;
    Walk walk;
    d.separated = detail::walk_separated(g, iq, &walk);
    if (d.separated) {
        detail::StarPartition star = detail::partition_star_indexed(g, iq);
        d.witness = detail::make_certificate(g, star);
    } else {
        d.witness = std::move(walk);
    }
    return d;
}

/// m-separation via ordinary separation in the augmented ancestral subgraph.
inline SeparationDecision msep_augmentation(const MixedGraph& g, const SeparationQuery& q) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    bool separated = detail::augmentation_separated(g, iq);
    return detail::finish_decision(g, iq, separated, Criterion::Augmentation);
}

/// m-separation via the district criterion on the canonical enlargement.
inline SeparationDecision msep_district(const MixedGraph& g, const SeparationQuery& q) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    detail::StarPartition star = detail::partition_star_indexed(g, iq);
    SeparationDecision d;
    d.criterion = Criterion::District;
    d.separated = detail::district_separated_on(g, star);
    if (d.separated) {
        d.witness = detail::make_certificate(g, star);
    } else {
        Walk walk;
        if (detail::walk_separated(g, iq, &walk)) {
            throw CriterionDisagreementError("criterion reported a connection but no walk exists");
        }
        d.witness = std::move(walk);
    }
    return d;
}

/// Exhaustive small-graph decision. Throws InstanceTooLargeError when the
/// graph exceeds `max_edges`.
inline bool msep_oracle(const MixedGraph& g, const SeparationQuery& q,
                        std::size_t max_edges = kDefaultOracleMaxEdges) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    return detail::oracle_separated(g, iq, max_edges);
}

/// The undirected reduction over the ancestral closure, plus the list of
/// C-districts it contracts.
inline ReducedGraph build_reduced_graph(const MixedGraph& g, const SeparationQuery& q) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    detail::ReductionParts parts = detail::build_reduction(g, iq);

    std::vector<int> local(g.vertex_count(), -1);
    std::vector<std::string> names;
    names.reserve(parts.w.size());
    for (int v : parts.w) {
        local[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
        names.push_back(g.name_of(v));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(parts.edges.size());
    for (auto [u, v] : parts.edges) {
        edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    }

    ReducedGraph out;
    out.graph = UndirectedGraph::from_indexed(std::move(names), std::move(edges));
    out.contracted_districts.assign(static_cast<std::size_t>(parts.c_district_count), {});
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int id = parts.c_district_ids[v];
        if (id >= 0) out.contracted_districts[static_cast<std::size_t>(id)].insert(g.name_of(static_cast<int>(v)));
    }
    return out;
}

/// The canonical (A*, B*) enlargement used by the district criterion.
inline std::pair<VertexSet, VertexSet> partition_star(const MixedGraph& g,
                                                      const SeparationQuery& q) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    detail::StarPartition star = detail::partition_star_indexed(g, iq);
    VertexSet a_star, b_star;
    for (int v : star.parts.w) {
        std::size_t i = static_cast<std::size_t>(v);
        if (star.in_astar[i]) a_star.insert(g.name_of(v));
        if (star.in_bstar[i]) b_star.insert(g.name_of(v));
    }
    return {std::move(a_star), std::move(b_star)};
}

/// Recomputes every certificate property from scratch through the public
/// set operations: V* is the ancestral closure of A u B u C, the starred
/// sets extend A and B and partition V* together with C, and the district
/// closures of A* and B* in the induced subgraph are disjoint.
inline bool certificate_valid(const MixedGraph& g, const SeparationQuery& q,
                              const Certificate& cert) {
    VertexSet abc = q.a;
    abc.insert(q.b.begin(), q.b.end());
    abc.insert(q.c.begin(), q.c.end());
    if (cert.v_star != g.ancestors(abc)) return false;

    if (!std::includes(cert.a_star.begin(), cert.a_star.end(), q.a.begin(), q.a.end())) return false;
    if (!std::includes(cert.b_star.begin(), cert.b_star.end(), q.b.begin(), q.b.end())) return false;

    VertexSet all = cert.a_star;
    all.insert(cert.b_star.begin(), cert.b_star.end());
    all.insert(q.c.begin(), q.c.end());
    if (all != cert.v_star) return false;
    if (all.size() != cert.a_star.size() + cert.b_star.size() + q.c.size()) return false;

    MixedGraph sub = g.induced_subgraph(cert.v_star);
    auto closure = [&](const VertexSet& s) {
        VertexSet out = s;
        VertexSet ch = sub.children(s);
        out.insert(ch.begin(), ch.end());
        return sub.district_of(out);
    };
    VertexSet da = closure(cert.a_star);
    VertexSet db = closure(cert.b_star);
    for (const std::string& v : da) {
        if (db.count(v)) return false;
    }
    return true;
}

/// Checks the witness attached to a decision: a connecting walk must run
/// from A to B and satisfy the stepwise connection test, a certificate must
/// pass `certificate_valid`.
inline bool decision_witness_valid(const MixedGraph& g, const SeparationQuery& q,
                                   const SeparationDecision& d) {
    if (d.separated) {
        if (!std::holds_alternative<Certificate>(d.witness)) return false;
        return certificate_valid(g, q, d.certificate());
    }
    if (!std::holds_alternative<Walk>(d.witness)) return false;
    const Walk& walk = d.connecting_walk();
    if (walk.steps.empty()) return false;
    if (!q.a.count(walk.start) || !q.b.count(walk.end())) return false;
    return walk_is_m_connecting(g, walk, q.c);
}

/// Boundary case of the separation problem: whether A and B are m-separated
/// given everything else, decided by the closed form over full-graph
/// districts.
inline bool lemma_boundary_check(const MixedGraph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<int> ai = g.to_indices(a);
    std::vector<int> bi = g.to_indices(b);
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : ai) seen[static_cast<std::size_t>(v)] = 1;
    for (int v : bi) {
        if (seen[static_cast<std::size_t>(v)]) throw OverlappingSetsError(g.name_of(v));
    }
    std::vector<int> ids = g.district_ids(nullptr);
    return !detail::sorted_intersects(detail::boundary_reach(g, ai, ids),
                                      detail::boundary_reach(g, bi, ids));
}

/// Decides a query with the chosen criterion (the district criterion by
/// default).
inline SeparationDecision decide(const MixedGraph& g, const SeparationQuery& q,
                                 Criterion criterion = Criterion::District,
                                 std::size_t oracle_max_edges = kDefaultOracleMaxEdges) {
    switch (criterion) {
        case Criterion::Walk: return msep_walk(g, q);
        case Criterion::Augmentation: return msep_augmentation(g, q);
        case Criterion::District: return msep_district(g, q);
        case Criterion::Oracle: {
            detail::IndexQuery iq = detail::validate_query(g, q);
            bool separated = detail::oracle_separated(g, iq, oracle_max_edges);
            return detail::finish_decision(g, iq, separated, Criterion::Oracle);
        }
    }
    throw std::logic_error("unreachable criterion");
}

/// Paranoid mode: runs every applicable criterion (the exhaustive one only
/// within its edge bound), requires unanimous verdicts, and returns the
/// district decision. Throws CriterionDisagreementError otherwise.
inline SeparationDecision decide_all(const MixedGraph& g, const SeparationQuery& q,
                                     std::size_t oracle_max_edges = kDefaultOracleMaxEdges) {
    detail::IndexQuery iq = detail::validate_query(g, q);
    bool by_walk = detail::walk_separated(g, iq);
    bool by_augmentation = detail::augmentation_separated(g, iq);
    bool by_district = detail::district_separated(g, iq);
    std::optional<bool> by_oracle;
    if (g.edge_count() <= oracle_max_edges) {
        by_oracle = detail::oracle_separated(g, iq, oracle_max_edges);
    }
    if (by_walk != by_augmentation || by_walk != by_district ||
        (by_oracle && *by_oracle != by_walk)) {
        std::string detail_msg = "criteria disagree: walk=" + std::to_string(by_walk) +
                                 " augmentation=" + std::to_string(by_augmentation) +
                                 " district=" + std::to_string(by_district);
        if (by_oracle) detail_msg += " oracle=" + std::to_string(*by_oracle);
        throw CriterionDisagreementError(detail_msg);
    }
    return msep_district(g, q);
}

}  // namespace mgsep

#endif
