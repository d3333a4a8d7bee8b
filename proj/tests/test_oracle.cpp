#include <klgraph/oracle.hpp>

#include "test_oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace klgraph;

TEST_CASE("oracle agrees with naive enumeration on every graph with n <= 4") {
    for (int n = 0; n <= 4; ++n)
        kltest::for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            for (int k = 0; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) {
                    auto cert = oracle_kl(g, k, l);
                    REQUIRE(cert.has_value() == kltest::naive_kl_member(g, k, l));
                    if (!cert) continue;
                    REQUIRE(cert->k() == k);
                    REQUIRE(cert->l() == l);
                    REQUIRE_FALSE(verify_kl(g, *cert).has_value());
                }
        });
}

TEST_CASE("oracle edge cases") {
    REQUIRE(oracle_kl(Graph(0, {}), 0, 0).has_value());
    REQUIRE_FALSE(oracle_kl(Graph(1, {}), 0, 0).has_value());
    REQUIRE(oracle_kl(Graph(1, {}), 1, 0).has_value());
    REQUIRE(oracle_kl(Graph(1, {}), 0, 1).has_value());
    REQUIRE_THROWS_AS(oracle_kl(Graph(1, {}), -1, 0), std::invalid_argument);
}

TEST_CASE("oracle respects the vertex cutoff") {
    Graph g(19, {});
    REQUIRE_THROWS_AS(oracle_kl(g, 1, 0), std::invalid_argument);
    auto cert = oracle_kl(g, 1, 0, 20);
    REQUIRE(cert);
    REQUIRE(cert->independent_sets[0].size() == 19);
    REQUIRE_THROWS_AS(oracle_kl(Graph(63, {}), 1, 0, 63), std::invalid_argument);
}

TEST_CASE("forced oracle pins vertices to parts") {
    Graph k2 = Graph(2, {{0, 1}});

    SECTION("forcing both endpoints into one independent part fails") {
        REQUIRE(oracle_kl_forced(k2, 1, 1, {{0, 0}}).has_value());
        REQUIRE_FALSE(oracle_kl_forced(k2, 1, 0, {{0, 0}, {1, 0}}).has_value());
    }

    SECTION("the returned partition honors the forcing") {
        Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        auto cert = oracle_kl_forced(c5, 2, 1, {{3, 2}});
        REQUIRE(cert);
        REQUIRE(std::binary_search(cert->cliques[0].begin(), cert->cliques[0].end(), 3));
        REQUIRE_FALSE(verify_kl(c5, *cert).has_value());
    }

    SECTION("rejects out-of-range forcing") {
        REQUIRE_THROWS_AS(oracle_kl_forced(k2, 1, 1, {{5, 0}}), std::invalid_argument);
        REQUIRE_THROWS_AS(oracle_kl_forced(k2, 1, 1, {{0, 2}}), std::invalid_argument);
    }

    SECTION("agrees with naive enumeration under forcing for n <= 4") {
        for (int n = 1; n <= 4; ++n)
            kltest::for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
                for (int v = 0; v < n; ++v)
                    for (int part = 0; part < 3; ++part) {
                        bool want = kltest::naive_kl_member(g, 2, 1, {{v, part}});
                        auto cert = oracle_kl_forced(g, 2, 1, {{v, part}});
                        REQUIRE(cert.has_value() == want);
                        if (!cert) continue;
                        const auto& side = part < 2 ? cert->independent_sets[part]
                                                    : cert->cliques[part - 2];
                        REQUIRE(std::binary_search(side.begin(), side.end(), v));
                    }
            });
    }
}

TEST_CASE("oracle duality under complement") {
    for (int i = 0; i < 60; ++i) {
        Graph g = gnp(5 + i % 6, 0.2 + 0.12 * (i % 5), 4800 + i);
        for (auto [k, l] : {std::pair{2, 1}, {1, 2}, {2, 2}})
            REQUIRE(oracle_kl(g, k, l).has_value() ==
                    oracle_kl(complement(g), l, k).has_value());
    }
}
