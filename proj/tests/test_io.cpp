#include <klgraph/io.hpp>

#include <klgraph/generators.hpp>

#include "test_oracles.hpp"

#include <catch2/catch_amalgamated.hpp>
#include "json.hpp"

#include <sstream>

using namespace klgraph;

namespace {

Graph round_trip(const Graph& g, GraphFormat fmt) {
    std::ostringstream out;
    write_graph(out, g, fmt);
    std::istringstream in(out.str());
    return parse_graph(in, fmt);
}

}  // namespace

TEST_CASE("parse_format") {
    REQUIRE(parse_format("edgelist") == GraphFormat::EdgeList);
    REQUIRE(parse_format("dimacs") == GraphFormat::Dimacs);
    REQUIRE(parse_format("graph6") == GraphFormat::Graph6);
    REQUIRE_THROWS_AS(parse_format("gml"), std::invalid_argument);
}

TEST_CASE("edge list format") {
    std::istringstream in("3 3\n0 1\n1 2\n0 2\n");
    Graph g = parse_graph(in, GraphFormat::EdgeList);
    REQUIRE(g.n() == 3);
    REQUIRE(g.m() == 3);
    REQUIRE(g.adjacent(0, 2));

    SECTION("malformed inputs") {
        std::istringstream bad1("3 2\n0 1\n");
        REQUIRE_THROWS_AS(parse_graph(bad1, GraphFormat::EdgeList), std::invalid_argument);
        std::istringstream bad2("x 0\n");
        REQUIRE_THROWS_AS(parse_graph(bad2, GraphFormat::EdgeList), std::invalid_argument);
        std::istringstream bad3("2 1\n0 2\n");
        REQUIRE_THROWS_AS(parse_graph(bad3, GraphFormat::EdgeList), std::invalid_argument);
    }
}

TEST_CASE("dimacs format") {
    std::istringstream in("c tiny instance\np edge 2 1\ne 1 2\n");
    Graph g = parse_graph(in, GraphFormat::Dimacs);
    REQUIRE(g.n() == 2);
    REQUIRE(g.m() == 1);
    REQUIRE(g.adjacent(0, 1));

    SECTION("malformed inputs") {
        std::istringstream bad1("e 1 2\n");
        REQUIRE_THROWS_AS(parse_graph(bad1, GraphFormat::Dimacs), std::invalid_argument);
        std::istringstream bad2("p edge 2 1\np edge 2 1\ne 1 2\n");
        REQUIRE_THROWS_AS(parse_graph(bad2, GraphFormat::Dimacs), std::invalid_argument);
        std::istringstream bad3("p edge 2 2\ne 1 2\n");
        REQUIRE_THROWS_AS(parse_graph(bad3, GraphFormat::Dimacs), std::invalid_argument);
        std::istringstream bad4("p edge 2 1\nq 1 2\n");
        REQUIRE_THROWS_AS(parse_graph(bad4, GraphFormat::Dimacs), std::invalid_argument);
    }
}

TEST_CASE("graph6 format") {
    SECTION("a star on five vertices") {
        std::istringstream in("D?{");
        Graph g = parse_graph(in, GraphFormat::Graph6);
        REQUIRE(g.n() == 5);
        REQUIRE(g.m() == 4);
        for (int v = 0; v < 4; ++v) REQUIRE(g.adjacent(v, 4));
        std::ostringstream out;
        write_graph(out, g, GraphFormat::Graph6);
        REQUIRE(out.str() == "D?{\n");
    }

    SECTION("optional header is accepted") {
        std::istringstream in(">>graph6<<D?{");
        REQUIRE(parse_graph(in, GraphFormat::Graph6).m() == 4);
    }

    SECTION("empty and large orders") {
        std::istringstream in("?");
        REQUIRE(parse_graph(in, GraphFormat::Graph6).n() == 0);
        Graph p63 = named("path(63)");
        Graph back = round_trip(p63, GraphFormat::Graph6);
        REQUIRE(back.n() == 63);
        REQUIRE(back.edges() == p63.edges());
    }

    SECTION("truncated or padded bodies are rejected") {
        std::istringstream bad1("D?");
        REQUIRE_THROWS_WITH(parse_graph(bad1, GraphFormat::Graph6),
                            "bad graph6 checksum-length");
        std::istringstream bad2("D?{{");
        REQUIRE_THROWS_WITH(parse_graph(bad2, GraphFormat::Graph6),
                            "bad graph6 checksum-length");
        std::istringstream bad3("B");
        REQUIRE_THROWS_WITH(parse_graph(bad3, GraphFormat::Graph6),
                            "bad graph6 checksum-length");
        std::istringstream bad4("A?\x7f");
        REQUIRE_THROWS_AS(parse_graph(bad4, GraphFormat::Graph6), std::invalid_argument);
    }
}

TEST_CASE("round trips preserve every small graph") {
    for (int n = 0; n <= 4; ++n)
        kltest::for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs, GraphFormat::Graph6}) {
                Graph back = round_trip(g, fmt);
                REQUIRE(back.n() == g.n());
                REQUIRE(back.edges() == g.edges());
            }
        });
    for (int i = 0; i < 12; ++i) {
        Graph g = gnp(20 + i, 0.2 + 0.05 * i, 7400 + i);
        for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs, GraphFormat::Graph6})
            REQUIRE(round_trip(g, fmt).edges() == g.edges());
    }
}

TEST_CASE("parse_genspec") {
    GenSpec a = parse_genspec("gnp:n=100,p=0.5,seed=42");
    REQUIRE(a.kind == GenSpec::Kind::Gnp);
    REQUIRE(a.n == 100);
    REQUIRE(a.p == 0.5);
    REQUIRE(a.seed == 42);

    GenSpec b = parse_genspec("planted:ind=3/3,cliques=4/4,p=0.5,seed=7");
    REQUIRE(b.kind == GenSpec::Kind::Planted);
    REQUIRE(b.independent_sizes == std::vector<int>{3, 3});
    REQUIRE(b.clique_sizes == std::vector<int>{4, 4});
    REQUIRE(b.seed == 7);

    GenSpec c = parse_genspec("named:cycle(5)");
    REQUIRE(c.kind == GenSpec::Kind::Named);
    REQUIRE(generate(c).edges() == named("cycle(5)").edges());

    REQUIRE_THROWS_AS(parse_genspec("ladder:n=5"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_genspec("gnp:n=5,q=0.5"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_genspec("gnp:n=five"), std::invalid_argument);
}

TEST_CASE("report_to_json") {
    RecognitionReport rep;
    rep.k = 2;
    rep.l = 1;
    rep.member = true;
    rep.engine = "main";
    rep.certificate = KLPartition{{{1, 3}, {2, 4}}, {{0}}};
    rep.timings_ms = {{"parse", 0.5}, {"recognize", 1.25}};

    auto j = nlohmann::json::parse(report_to_json(rep));
    REQUIRE(j["k"] == 2);
    REQUIRE(j["l"] == 1);
    REQUIRE(j["member"] == true);
    REQUIRE(j["engine"] == "main");
    REQUIRE(j["timings_ms"]["recognize"] == 1.25);
    REQUIRE(j["independent_sets"] == nlohmann::json::parse("[[1,3],[2,4]]"));
    REQUIRE(j["cliques"] == nlohmann::json::parse("[[0]]"));

    SECTION("the reloaded certificate still verifies") {
        Graph c5 = named("cycle(5)");
        KLPartition back;
        for (const auto& s : j["independent_sets"])
            back.independent_sets.push_back(s.get<VertexSet>());
        for (const auto& s : j["cliques"]) back.cliques.push_back(s.get<VertexSet>());
        REQUIRE_FALSE(verify_kl(c5, back).has_value());
    }

    SECTION("certificate can be suppressed") {
        auto plain = nlohmann::json::parse(report_to_json(rep, false));
        REQUIRE_FALSE(plain.contains("independent_sets"));
        REQUIRE_FALSE(plain.contains("cliques"));
        REQUIRE(plain["member"] == true);
    }

    SECTION("non-members carry no certificate keys") {
        RecognitionReport none;
        none.k = 2;
        none.l = 2;
        none.member = false;
        auto j2 = nlohmann::json::parse(report_to_json(none));
        REQUIRE_FALSE(j2.contains("independent_sets"));
        REQUIRE(j2["member"] == false);
    }
}
