#include <klgraph/graph.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace klgraph;

TEST_CASE("bitset basics") {
    Bitset b(130);
    REQUIRE(b.capacity() == 130);
    REQUIRE(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    REQUIRE(b.count() == 4);
    REQUIRE(b.test(63));
    REQUIRE_FALSE(b.test(62));
    b.reset(63);
    REQUIRE_FALSE(b.test(63));
    REQUIRE(b.count() == 3);

    SECTION("next scans ascending and ends at -1") {
        std::vector<int> seen;
        for (int i = b.next(0); i >= 0; i = b.next(i + 1)) seen.push_back(i);
        REQUIRE(seen == std::vector<int>{0, 64, 129});
        REQUIRE(b.next(130) == -1);
    }

    SECTION("for_each matches next order") {
        std::vector<int> seen;
        b.for_each([&](int i) { seen.push_back(i); });
        REQUIRE(seen == std::vector<int>{0, 64, 129});
    }
}

TEST_CASE("bitset set algebra") {
    Bitset a(70), b(70);
    a.set(1);
    a.set(65);
    a.set(3);
    b.set(3);
    b.set(65);
    b.set(9);

    Bitset i = a;
    i &= b;
    REQUIRE(to_vertex_set(i) == VertexSet{3, 65});
    Bitset u = a;
    u |= b;
    REQUIRE(to_vertex_set(u) == VertexSet{1, 3, 9, 65});
    Bitset d = a;
    d.and_not(b);
    REQUIRE(to_vertex_set(d) == VertexSet{1});

    REQUIRE(a.intersects(b));
    REQUIRE_FALSE(d.intersects(b));
    REQUIRE(i.subset_of(a));
    REQUIRE(i.subset_of(b));
    REQUIRE_FALSE(a.subset_of(b));
    REQUIRE(a.and_count(b) == 2);
}

TEST_CASE("graph construction and queries") {
    Graph g(5, {{4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}});
    REQUIRE(g.n() == 5);
    REQUIRE(g.m() == 5);
    REQUIRE(g.complement_edge_count() == 5);
    REQUIRE(g.adjacent(0, 4));
    REQUIRE(g.adjacent(4, 0));
    REQUIRE_FALSE(g.adjacent(0, 2));
    REQUIRE_FALSE(g.adjacent(3, 3));
    REQUIRE(g.degree(0) == 2);
    REQUIRE(g.neighbors(0) == VertexSet{1, 4});
    REQUIRE(g.neighbors(3) == VertexSet{2, 4});

    SECTION("edges are normalized and sorted") {
        std::vector<Edge> want{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
        REQUIRE(g.edges() == want);
    }

    SECTION("row masks mirror adjacency") {
        REQUIRE(to_vertex_set(g.row(2)) == VertexSet{1, 3});
        REQUIRE(to_vertex_set(g.full_mask()) == VertexSet{0, 1, 2, 3, 4});
    }
}

TEST_CASE("graph validation") {
    REQUIRE_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(Graph::kMaxVertices + 1, {}), std::invalid_argument);
    REQUIRE_NOTHROW(Graph(0, {}));
}

TEST_CASE("complement") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    Graph gc = complement(c5);
    REQUIRE(gc.n() == 5);
    REQUIRE(gc.m() == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) REQUIRE(gc.adjacent(u, v) == !c5.adjacent(u, v));
    Graph gcc = complement(gc);
    REQUIRE(gcc.edges() == c5.edges());
}

TEST_CASE("induced subgraph relabels and maps back") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto [h, back] = induced_subgraph(c5, {1, 3, 4});
    REQUIRE(h.n() == 3);
    REQUIRE(back == VertexSet{1, 3, 4});
    std::vector<Edge> want{{1, 2}};  // only 3-4 survives, relabeled
    REQUIRE(h.edges() == want);

    auto [empty, none] = induced_subgraph(c5, {});
    REQUIRE(empty.n() == 0);
    REQUIRE(none.empty());
}

TEST_CASE("neighborhood helpers") {
    Graph g(5, {{0, 1}, {0, 3}, {2, 3}});
    REQUIRE(neighborhood(g, 0) == VertexSet{1, 3});
    REQUIRE(closed_neighborhood(g, 0) == VertexSet{0, 1, 3});
    REQUIRE(non_neighborhood(g, 0) == VertexSet{2, 4});
    REQUIRE(non_neighborhood(g, 4) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("mask round trips and set helpers") {
    VertexSet s{0, 2, 5};
    REQUIRE(to_vertex_set(make_mask(6, s)) == s);
    REQUIRE_THROWS_AS(make_mask(4, s), std::invalid_argument);

    REQUIRE(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    REQUIRE(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
    REQUIRE(set_intersection({1, 2, 3}, {0, 2, 4}) == VertexSet{2});
}
