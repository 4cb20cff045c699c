#ifndef MGSEP_WALK_HPP
#define MGSEP_WALK_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mgsep/mixed_graph.hpp"

namespace mgsep {

/// One traversal step along an edge. `forward` means the step runs from
/// edge.u to edge.v; a directed edge traversed backward runs head-to-tail.
struct WalkStep {
    Edge edge;
    bool forward = true;

    const std::string& from() const { return forward ? edge.u : edge.v; }
    const std::string& to() const { return forward ? edge.v : edge.u; }

    /// Whether the edge end at the departure vertex is an arrowhead.
    bool arrow_at_from() const { return edge.kind == EdgeKind::Bidirected || !forward; }
    /// Whether the edge end at the arrival vertex is an arrowhead.
    bool arrow_at_to() const { return edge.kind == EdgeKind::Bidirected || forward; }
};

/// A walk: a start vertex plus consecutive steps. Vertices and edges may
/// repeat; only the per-step orientations matter for classification.
struct Walk {
    std::string start;
    std::vector<WalkStep> steps;

    /// Vertex visited after `i` steps (0 = start).
    const std::string& vertex_at(std::size_t i) const {
        return i == 0 ? start : steps[i - 1].to();
    }
    const std::string& end() const { return vertex_at(steps.size()); }

    /// True when consecutive steps chain (each step departs where the
    /// previous one arrived) and when nonempty walks begin at `start`.
    bool well_formed() const {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (steps[i].from() != vertex_at(i)) return false;
        }
        return true;
    }
};

/// Whether v is a collider between two consecutive steps: both incident edge
/// ends at v carry arrowheads. Requires prev to arrive at v and next to
/// depart from it.
inline bool is_collider_at(const WalkStep& prev, const WalkStep& next, const std::string& v) {
    if (prev.to() != v || next.from() != v) {
        throw std::invalid_argument("steps do not meet at vertex '" + v + "'");
    }
    return prev.arrow_at_to() && next.arrow_at_from();
}

/// Stepwise check of the m-connecting condition: every collider on the walk
/// is in C and every non-collider is not in C. Also verifies that the walk
/// is well formed, nonempty, and that every step uses an edge of g.
inline bool walk_is_m_connecting(const MixedGraph& g, const Walk& walk, const VertexSet& c) {
    if (walk.steps.empty() || !walk.well_formed()) return false;
    for (const WalkStep& s : walk.steps) {
        if (s.edge.kind == EdgeKind::Directed) {
            if (!g.has_vertex(s.edge.u) || !g.has_vertex(s.edge.v)) return false;
            if (!g.has_directed(s.edge.u, s.edge.v)) return false;
        } else {
            if (!g.has_vertex(s.edge.u) || !g.has_vertex(s.edge.v)) return false;
            if (!g.has_bidirected(s.edge.u, s.edge.v)) return false;
        }
    }
    for (std::size_t i = 1; i < walk.steps.size(); ++i) {
        const std::string& v = walk.vertex_at(i);
        bool collider = is_collider_at(walk.steps[i - 1], walk.steps[i], v);
        if (collider != (c.count(v) > 0)) return false;
    }
    return true;
}

/// Text form of one step: "u -> v", "u <- v" (directed edge v->u traversed
/// against its direction), or "u <-> v".
inline std::string format_step(const WalkStep& s) {
    if (s.edge.kind == EdgeKind::Bidirected) return s.from() + " <-> " + s.to();
    return s.forward ? s.from() + " -> " + s.to() : s.from() + " <- " + s.to();
}

/// Chain form of a whole walk, e.g. "x -> b -> g -> z <- g <-> h -> y".
inline std::string format_walk(const Walk& walk) {
    std::string out = walk.start;
    for (const WalkStep& s : walk.steps) {
        if (s.edge.kind == EdgeKind::Bidirected) {
            out += " <-> ";
        } else {
            out += s.forward ? " -> " : " <- ";
        }
        out += s.to();
    }
    return out;
}

}  // namespace mgsep

#endif
