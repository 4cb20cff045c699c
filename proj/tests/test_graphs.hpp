#ifndef MGSEP_TEST_GRAPHS_HPP
#define MGSEP_TEST_GRAPHS_HPP

#include <string>
#include <vector>

#include "mgsep/mixed_graph.hpp"

// The eleven-vertex graph used throughout the suite, built directly so the
// parser is not in the loop.
inline mgsep::MixedGraph fig1() {
    using mgsep::Edge;
    return mgsep::MixedGraph::build(
        std::vector<std::string>{},
        {Edge::directed("x", "b"), Edge::directed("b", "g"), Edge::directed("g", "z"),
         Edge::directed("b", "f"), Edge::directed("a", "c"), Edge::directed("c", "h"),
         Edge::directed("h", "y"), Edge::directed("d", "y"), Edge::bidirected("g", "f"),
         Edge::bidirected("g", "h"), Edge::bidirected("c", "d"), Edge::bidirected("d", "e")});
}

#endif
