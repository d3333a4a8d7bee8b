#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "klgraph/certificates.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

namespace detail {

// Portable uniform draw in [0,1): mt19937_64 is fully specified by the
// standard, and the top 53 bits scaled by 2^-53 avoid the
// implementation-defined std::uniform_real_distribution.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace detail

// G(n,p): one draw per unordered pair in lexicographic order (0,1), (0,2),
// ..., (n-2,n-1); the edge is present iff draw < p. Identical seeds give
// identical edge lists on every platform.
inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::unit_draw(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Planted (k,l) instance: consecutive vertex blocks, first the independent
// sets then the cliques. Intra-independent pairs are absent, intra-clique
// pairs present, and every cross-part pair is drawn (lexicographic order,
// same draw scheme as gnp) with probability p_cross. Returns the graph and
// the planted partition.
inline std::pair<Graph, KLPartition> planted_kl(const std::vector<int>& independent_sizes,
                                                const std::vector<int>& clique_sizes,
                                                double p_cross, std::uint64_t seed) {
    if (!(p_cross >= 0.0 && p_cross <= 1.0))
        throw std::invalid_argument("planted_kl: p_cross must be in [0,1]");
    int n = 0;
    KLPartition planted;
    std::vector<int> part_of;
    int part = 0;
    for (auto* sizes : {&independent_sizes, &clique_sizes}) {
        for (int s : *sizes) {
            if (s < 0) throw std::invalid_argument("planted_kl: negative part size");
            VertexSet vs;
            for (int i = 0; i < s; ++i) {
                vs.push_back(n + i);
                part_of.push_back(part);
            }
            n += s;
            ++part;
            if (sizes == &independent_sizes)
                planted.independent_sets.push_back(std::move(vs));
            else
                planted.cliques.push_back(std::move(vs));
        }
    }
    int k = static_cast<int>(independent_sizes.size());
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] == part_of[v]) {
                if (part_of[u] >= k) edges.emplace_back(u, v);
            } else if (detail::unit_draw(rng) < p_cross) {
                edges.emplace_back(u, v);
            }
        }
    return {Graph(n, edges), std::move(planted)};
}

// Named families: "cycle(n)", "path(n)", "complete(n)", "petersen",
// "tK3(t)" (t disjoint triangles), "bowtie" (two triangles sharing vertex 2).
inline Graph named(const std::string& name) {
    auto arg_of = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
            name[prefix.size()] != '(' || name.back() != ')')
            return std::nullopt;
        std::string body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("named: bad argument in '" + name + "'");
        return std::stoi(body);
    };
    if (auto n = arg_of("cycle")) {
        if (*n < 3) throw std::invalid_argument("named: cycle needs n >= 3");
        std::vector<Edge> edges;
        for (int i = 0; i < *n; ++i) edges.emplace_back(i, (i + 1) % *n);
        return Graph(*n, edges);
    }
    if (auto n = arg_of("path")) {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < *n; ++i) edges.emplace_back(i, i + 1);
        return Graph(*n, edges);
    }
    if (auto n = arg_of("complete")) {
        std::vector<Edge> edges;
        for (int u = 0; u < *n; ++u)
            for (int v = u + 1; v < *n; ++v) edges.emplace_back(u, v);
        return Graph(*n, edges);
    }
    if (auto t = arg_of("tK3")) {
        std::vector<Edge> edges;
        for (int i = 0; i < *t; ++i) {
            int b = 3 * i;
            edges.insert(edges.end(), {{b, b + 1}, {b, b + 2}, {b + 1, b + 2}});
        }
        return Graph(3 * *t, edges);
    }
    if (name == "petersen") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);          // outer cycle
            edges.emplace_back(i, i + 5);                // spokes
            edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
        }
        return Graph(10, edges);
    }
    if (name == "bowtie")
        return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    throw std::invalid_argument("named: unknown family '" + name + "'");
}

// Generation request as parsed from the CLI; see parse_genspec in io.hpp.
struct GenSpec {
    enum class Kind { Gnp, Planted, Named };
    Kind kind = Kind::Gnp;
    int n = 0;
    double p = 0.5;
    std::vector<int> independent_sizes, clique_sizes;
    std::string name;
    std::uint64_t seed = 0;
};

inline Graph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::Gnp:
            return gnp(spec.n, spec.p, spec.seed);
        case GenSpec::Kind::Planted:
            return planted_kl(spec.independent_sizes, spec.clique_sizes, spec.p, spec.seed)
                .first;
        case GenSpec::Kind::Named:
            return named(spec.name);
    }
    throw std::logic_error("generate: unreachable");
}

}  // namespace klgraph
