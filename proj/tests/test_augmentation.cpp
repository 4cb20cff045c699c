#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mgsep/augmentation.hpp"
#include "mgsep/random_graph.hpp"
#include "test_graphs.hpp"

using mgsep::MixedGraph;
using mgsep::UndirectedGraph;
using mgsep::VertexSet;

namespace {

// Reference check straight from the definition: a simple path whose every
// intermediate vertex has arrowheads on both incident edge ends.
bool pcp_dfs(const MixedGraph& g, int cur, int goal, bool start, bool arrived_arrow,
             std::vector<char>& visited) {
    int n = static_cast<int>(g.vertex_count());
    for (int next = 0; next < n; ++next) {
        if (next == cur || visited[static_cast<std::size_t>(next)]) continue;
        struct Option {
            bool exists, arrow_at_cur, arrow_at_next;
        };
        Option options[3] = {
            {g.has_directed(cur, next), false, true},
            {g.has_directed(next, cur), true, false},
            {g.has_bidirected(cur, next), true, true},
        };
        for (const Option& opt : options) {
            if (!opt.exists) continue;
            if (!start && !(arrived_arrow && opt.arrow_at_cur)) continue;
            if (next == goal) return true;
            visited[static_cast<std::size_t>(next)] = 1;
            if (pcp_dfs(g, next, goal, false, opt.arrow_at_next, visited)) return true;
            visited[static_cast<std::size_t>(next)] = 0;
        }
    }
    return false;
}

bool pure_collider_connected_by_search(const MixedGraph& g, const std::string& a,
                                       const std::string& b) {
    int u = g.index_of(a);
    int v = g.index_of(b);
    std::vector<char> visited(g.vertex_count(), 0);
    visited[static_cast<std::size_t>(u)] = 1;
    return pcp_dfs(g, u, v, true, false, visited);
}

}  // namespace

TEST_CASE("collider connectivity on the figure graph") {
    MixedGraph g = fig1();

    CHECK(mgsep::collider_connected(g, "b", "c"));   // b -> g <-> h <- c
    CHECK(mgsep::collider_connected(g, "a", "d"));   // a -> c <-> d
    CHECK(mgsep::collider_connected(g, "b", "h"));   // b -> g <-> h
    CHECK(mgsep::collider_connected(g, "g", "f"));   // adjacent
    CHECK(mgsep::collider_connected(g, "x", "b"));   // adjacent
    CHECK_FALSE(mgsep::collider_connected(g, "x", "g"));
    CHECK_FALSE(mgsep::collider_connected(g, "e", "y"));
    CHECK_FALSE(mgsep::collider_connected(g, "x", "y"));

    SECTION("symmetric") {
        CHECK(mgsep::collider_connected(g, "c", "b"));
        CHECK_FALSE(mgsep::collider_connected(g, "g", "x"));
    }
}

TEST_CASE("collider connectivity matches the path-search definition") {
    SECTION("figure graph, all pairs") {
        MixedGraph g = fig1();
        for (const std::string& u : g.vertex_names()) {
            for (const std::string& v : g.vertex_names()) {
                if (u >= v) continue;
                INFO("pair " << u << ", " << v);
                CHECK(mgsep::collider_connected(g, u, v) ==
                      pure_collider_connected_by_search(g, u, v));
            }
        }
    }

    SECTION("random graphs") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            mgsep::RandomGraphOptions opts;
            opts.n = 6;
            opts.p_directed = 0.35;
            opts.p_bidirected = 0.3;
            opts.seed = seed;
            MixedGraph g = mgsep::random_graph(opts);
            UndirectedGraph aug = mgsep::augmented_graph(g);
            for (const std::string& u : g.vertex_names()) {
                for (const std::string& v : g.vertex_names()) {
                    if (u >= v) continue;
                    bool expected = pure_collider_connected_by_search(g, u, v);
                    INFO("seed " << seed << ", pair " << u << ", " << v);
                    CHECK(mgsep::collider_connected(g, u, v) == expected);
                    CHECK(aug.adjacent(u, v) == expected);
                }
            }
        }
    }
}

TEST_CASE("augmented graph") {
    MixedGraph g = fig1();
    UndirectedGraph aug = mgsep::augmented_graph(g);

    REQUIRE(aug.vertex_names() == g.vertex_names());
    CHECK(aug.adjacent("b", "h"));
    CHECK(aug.adjacent("b", "c"));
    CHECK(aug.adjacent("x", "b"));
    CHECK_FALSE(aug.adjacent("x", "g"));
    CHECK_FALSE(aug.adjacent("x", "y"));

    SECTION("no collider patterns means skeleton only") {
        MixedGraph chain = MixedGraph::build(
            std::vector<std::string>{},
            {mgsep::Edge::directed("x", "b"), mgsep::Edge::directed("b", "g")});
        UndirectedGraph a = mgsep::augmented_graph(chain);
        REQUIRE(a.edge_count() == 2);
        CHECK(a.adjacent("x", "b"));
        CHECK(a.adjacent("b", "g"));
    }

    SECTION("empty graph") {
        UndirectedGraph a = mgsep::augmented_graph(MixedGraph());
        REQUIRE(a.vertex_count() == 0);
        REQUIRE(a.edge_count() == 0);
    }
}

TEST_CASE("plain undirected separation") {
    UndirectedGraph path = UndirectedGraph::build(std::vector<std::string>{},
                                                  {{"a", "b"}, {"b", "c"}});

    CHECK(mgsep::u_separated(path, {"a"}, {"c"}, {"b"}));
    CHECK_FALSE(mgsep::u_separated(path, {"a"}, {"c"}, {}));
    CHECK_FALSE(mgsep::u_separated(path, {"a"}, {"b"}, {}));

    SECTION("disconnected vertices are separated by anything") {
        UndirectedGraph h = UndirectedGraph::build({"c"}, {{"a", "b"}});
        CHECK(mgsep::u_separated(h, {"a"}, {"c"}, {}));
        CHECK(mgsep::u_separated(h, {"a"}, {"c"}, {"b"}));
    }

    SECTION("overlapping sets rejected") {
        REQUIRE_THROWS_AS(mgsep::u_separated(path, {"a"}, {"a"}, {}),
                          mgsep::OverlappingSetsError);
        REQUIRE_THROWS_AS(mgsep::u_separated(path, {"a"}, {"b"}, {"b"}),
                          mgsep::OverlappingSetsError);
    }

    SECTION("empty sides") {
        CHECK(mgsep::u_separated(path, {}, {"c"}, {}));
        CHECK(mgsep::u_separated(path, {"a"}, {}, {}));
    }
}
