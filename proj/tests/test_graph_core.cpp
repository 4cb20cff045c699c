#include <catch2/catch_amalgamated.hpp>

#include "mgsep/mixed_graph.hpp"
#include "test_graphs.hpp"

using mgsep::Edge;
using mgsep::MixedGraph;
using mgsep::VertexSet;

TEST_CASE("build and lookup") {
    MixedGraph g = fig1();

    REQUIRE(g.vertex_count() == 11);
    REQUIRE(g.edge_count() == 12);
    REQUIRE(g.directed_count() == 8);
    REQUIRE(g.bidirected_count() == 4);

    std::vector<std::string> expected{"a", "b", "c", "d", "e", "f", "g", "h", "x", "y", "z"};
    REQUIRE(g.vertex_names() == expected);

    REQUIRE(g.has_vertex("x"));
    REQUIRE_FALSE(g.has_vertex("w"));
    REQUIRE(g.name_of(g.index_of("g")) == "g");
    REQUIRE_THROWS_AS(g.index_of("nope"), mgsep::UnknownVertexError);

    REQUIRE(g.has_directed("x", "b"));
    REQUIRE_FALSE(g.has_directed("b", "x"));
    REQUIRE(g.has_bidirected("g", "h"));
    REQUIRE(g.has_bidirected("h", "g"));
    REQUIRE(g.adjacent("g", "z"));
    REQUIRE(g.adjacent("z", "g"));
    REQUIRE_FALSE(g.adjacent("x", "y"));
}

TEST_CASE("duplicates collapse and extra vertices survive") {
    MixedGraph g = MixedGraph::build(
        {"lonely", "a"},
        {Edge::directed("a", "b"), Edge::directed("a", "b"), Edge::bidirected("a", "b"),
         Edge::bidirected("b", "a")});
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.directed_count() == 1);
    REQUIRE(g.bidirected_count() == 1);
    REQUIRE(g.has_vertex("lonely"));
}

TEST_CASE("edge equality ignores bidirected order") {
    REQUIRE(Edge::bidirected("g", "f") == Edge::bidirected("f", "g"));
    REQUIRE_FALSE(Edge::directed("a", "b") == Edge::directed("b", "a"));
    REQUIRE_FALSE(Edge::directed("a", "b") == Edge::bidirected("a", "b"));
}

TEST_CASE("construction rejects bad input") {
    REQUIRE_THROWS_AS(MixedGraph::build(std::vector<std::string>{},
                                        {Edge::directed("a", "a")}),
                      mgsep::SelfLoopError);
    REQUIRE_THROWS_AS(MixedGraph::build({""}, {}), mgsep::MalformedVertexNameError);
    REQUIRE_THROWS_AS(MixedGraph::build({"a b"}, {}), mgsep::MalformedVertexNameError);
    REQUIRE_THROWS_AS(MixedGraph::build({"x->y"}, {}), mgsep::MalformedVertexNameError);
    REQUIRE_THROWS_AS(MixedGraph::build({"ha#h"}, {}), mgsep::MalformedVertexNameError);
    REQUIRE_THROWS_AS(MixedGraph::build({"tab\there"}, {}), mgsep::MalformedVertexNameError);
}

TEST_CASE("parents, children, spouses") {
    MixedGraph g = fig1();

    SECTION("singletons") {
        REQUIRE(g.parents({"y"}) == VertexSet{"d", "h"});
        REQUIRE(g.children({"b"}) == VertexSet{"f", "g"});
        REQUIRE(g.spouses({"g"}) == VertexSet{"f", "h"});
        REQUIRE(g.parents({"x"}).empty());
        REQUIRE(g.children({"z"}).empty());
        REQUIRE(g.spouses({"x"}).empty());
    }

    SECTION("set form subtracts the argument") {
        REQUIRE(g.children({"x", "b"}) == VertexSet{"f", "g"});
        REQUIRE(g.parents({"y", "h"}) == VertexSet{"c", "d"});
        REQUIRE(g.spouses({"c", "d"}) == VertexSet{"e"});
    }
}

TEST_CASE("ancestors") {
    MixedGraph g = fig1();

    REQUIRE(g.ancestors({"z"}) == VertexSet{"b", "g", "x", "z"});
    REQUIRE(g.ancestors({"e"}) == VertexSet{"e"});
    REQUIRE(g.ancestors({}).empty());
    REQUIRE(g.ancestors({"x", "y", "z"}) ==
            VertexSet{"a", "b", "c", "d", "g", "h", "x", "y", "z"});

    SECTION("idempotent and monotone") {
        VertexSet an_z = g.ancestors({"z"});
        REQUIRE(g.ancestors(an_z) == an_z);
        VertexSet small = g.ancestors({"z"});
        VertexSet big = g.ancestors({"x", "z"});
        REQUIRE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }

    SECTION("well defined under directed cycles") {
        MixedGraph cyc = MixedGraph::build(
            std::vector<std::string>{},
            {Edge::directed("a", "b"), Edge::directed("b", "a"), Edge::directed("c", "a")});
        REQUIRE(cyc.ancestors({"a"}) == VertexSet{"a", "b", "c"});
        REQUIRE(cyc.ancestors({"b"}) == VertexSet{"a", "b", "c"});
    }
}

TEST_CASE("districts") {
    MixedGraph g = fig1();

    std::vector<VertexSet> expected{{"a"}, {"b"}, {"c", "d", "e"}, {"f", "g", "h"},
                                    {"x"}, {"y"}, {"z"}};
    REQUIRE(g.districts() == expected);

    SECTION("they partition the vertex set") {
        std::size_t total = 0;
        VertexSet all;
        for (const VertexSet& d : g.districts()) {
            total += d.size();
            all.insert(d.begin(), d.end());
        }
        REQUIRE(total == g.vertex_count());
        REQUIRE(all.size() == g.vertex_count());
    }

    SECTION("district_of unions the touched districts") {
        REQUIRE(g.district_of({"g"}) == VertexSet{"f", "g", "h"});
        REQUIRE(g.district_of({"x"}) == VertexSet{"x"});
        REQUIRE(g.district_of({"g", "c"}) == VertexSet{"c", "d", "e", "f", "g", "h"});
        REQUIRE(g.district_of({}).empty());
    }
}

TEST_CASE("induced subgraph") {
    MixedGraph g = fig1();

    SECTION("chain fragment") {
        MixedGraph sub = g.induced_subgraph({"x", "b", "g", "z"});
        REQUIRE(sub.vertex_count() == 4);
        REQUIRE(sub.directed_count() == 3);
        REQUIRE(sub.bidirected_count() == 0);
        REQUIRE(sub.has_directed("x", "b"));
        REQUIRE(sub.has_directed("g", "z"));
    }

    SECTION("ancestral closure of the worked example") {
        MixedGraph sub = g.induced_subgraph(g.ancestors({"x", "y", "z"}));
        REQUIRE(sub.vertex_count() == 9);
        REQUIRE_FALSE(sub.has_vertex("e"));
        REQUIRE_FALSE(sub.has_vertex("f"));
        REQUIRE(sub.directed_count() == 7);   // b -> f is gone
        REQUIRE(sub.bidirected_count() == 2); // g <-> f and d <-> e are gone
        REQUIRE(sub.has_bidirected("g", "h"));
        REQUIRE(sub.has_bidirected("c", "d"));
    }

    SECTION("unknown member rejected") {
        REQUIRE_THROWS_AS(g.induced_subgraph({"x", "nope"}), mgsep::UnknownVertexError);
    }
}

TEST_CASE("edges come out in stable order") {
    MixedGraph g = fig1();
    std::vector<Edge> edges = g.edges();
    REQUIRE(edges.size() == 12);
    REQUIRE(edges.front() == Edge::directed("a", "c"));
    REQUIRE(edges[7] == Edge::directed("x", "b"));
    REQUIRE(edges[8] == Edge::bidirected("c", "d"));
    REQUIRE(edges.back() == Edge::bidirected("g", "h"));
}
