#include <klgraph/certificates.hpp>
#include <klgraph/generators.hpp>

#include "test_oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace klgraph;

TEST_CASE("verify_kl accepts a valid partition") {
    Graph c5 = named("cycle(5)");
    KLPartition p{{{1, 3}, {2, 4}}, {{0}}};
    REQUIRE_FALSE(verify_kl(c5, p).has_value());
}

TEST_CASE("verify_kl accepts empty parts") {
    Graph k2 = named("complete(2)");
    KLPartition p{{{}, {}}, {{0, 1}}};
    REQUIRE_FALSE(verify_kl(k2, p).has_value());
    REQUIRE(p.k() == 2);
    REQUIRE(p.l() == 1);
}

TEST_CASE("verify_kl reports cover defects first") {
    Graph c4 = named("cycle(4)");

    SECTION("missing vertex") {
        KLPartition p{{{0, 2}}, {{1}}};
        auto v = verify_kl(c4, p);
        REQUIRE(v);
        REQUIRE(v->kind == ViolationKind::MissingVertex);
        REQUIRE(v->vertex_a == 3);
        REQUIRE(v->vertex_b == -1);
    }

    SECTION("duplicated vertex") {
        KLPartition p{{{0, 2}, {1, 3}}, {{0}}};
        auto v = verify_kl(c4, p);
        REQUIRE(v);
        REQUIRE(v->kind == ViolationKind::DuplicatedVertex);
        REQUIRE(v->vertex_a == 0);
    }
}

TEST_CASE("verify_kl reports structural defects") {
    SECTION("edge inside an independent set") {
        Graph k3 = named("complete(3)");
        KLPartition p{{{0, 1}, {2}}, {}};
        auto v = verify_kl(k3, p);
        REQUIRE(v);
        REQUIRE(v->kind == ViolationKind::EdgeInsideIndependentSet);
        REQUIRE(v->vertex_a == 0);
        REQUIRE(v->vertex_b == 1);
    }

    SECTION("non-edge inside a clique") {
        Graph g(4, {{0, 1}, {2, 3}});
        KLPartition p{{{1}, {3}}, {{0, 2}}};
        auto v = verify_kl(g, p);
        REQUIRE(v);
        REQUIRE(v->kind == ViolationKind::NonEdgeInsideClique);
        REQUIRE(v->vertex_a == 0);
        REQUIRE(v->vertex_b == 2);
    }
}

TEST_CASE("verify_kl rejects out-of-range vertices") {
    Graph k1(1, {});
    KLPartition p{{{0, 5}}, {}};
    REQUIRE_THROWS_AS(verify_kl(k1, p), std::invalid_argument);
}

TEST_CASE("swap_parts flips class roles under complement") {
    KLPartition p{{{1, 3}, {2, 4}}, {{0}}};
    KLPartition q = swap_parts(p);
    REQUIRE(q.k() == 1);
    REQUIRE(q.l() == 2);
    REQUIRE(q.independent_sets == std::vector<VertexSet>{{0}});
    REQUIRE(q.cliques == std::vector<VertexSet>{{1, 3}, {2, 4}});

    // A valid partition of g is valid for complement(g) with roles swapped.
    for (std::uint64_t mask : {0ull, 9ull, 37ull, 63ull, 777ull}) {
        Graph g = kltest::labeled_graph(5, mask);
        auto cert = oracle_kl(g, 2, 1);
        if (!cert) continue;
        REQUIRE_FALSE(verify_kl(g, *cert).has_value());
        REQUIRE_FALSE(verify_kl(complement(g), swap_parts(*cert)).has_value());
    }
}
