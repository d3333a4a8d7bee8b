#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "klgraph/graph.hpp"

namespace klgraph {

// A claimed partition of V into k independent sets and l cliques; k and l are
// implicit in the list lengths and parts may be empty.
struct KLPartition {
    std::vector<VertexSet> independent_sets;
    std::vector<VertexSet> cliques;

    int k() const { return static_cast<int>(independent_sets.size()); }
    int l() const { return static_cast<int>(cliques.size()); }
};

enum class ViolationKind {
    MissingVertex,
    DuplicatedVertex,
    EdgeInsideIndependentSet,
    NonEdgeInsideClique,
};

// Witness for a failed check: a single vertex (vertex_b == -1) for the cover
// kinds, a vertex pair for the structural kinds.
struct Violation {
    ViolationKind kind;
    int vertex_a = -1;
    int vertex_b = -1;
};

// Checks a claimed partition against the graph; nullopt means valid. The scan
// order is deterministic: cover defects first (lowest vertex id), then
// independent sets in list order (lexicographically first bad pair), then
// cliques likewise.
inline std::optional<Violation> verify_kl(const Graph& g, const KLPartition& p) {
    std::vector<int> count(g.n(), 0);
    auto tally = [&](const std::vector<VertexSet>& parts) {
        for (const auto& part : parts)
            for (int v : part) {
                if (v < 0 || v >= g.n())
                    throw std::invalid_argument("verify_kl: vertex out of range");
                ++count[v];
            }
    };
    tally(p.independent_sets);
    tally(p.cliques);
    for (int v = 0; v < g.n(); ++v) {
        if (count[v] == 0) return Violation{ViolationKind::MissingVertex, v, -1};
        if (count[v] > 1) return Violation{ViolationKind::DuplicatedVertex, v, -1};
    }
    for (const auto& part : p.independent_sets) {
        Bitset mask = make_mask(g.n(), part);
        for (int u : part) {
            int w = (g.row(u) & mask).next(u + 1);
            if (w >= 0) return Violation{ViolationKind::EdgeInsideIndependentSet, u, w};
        }
    }
    for (const auto& part : p.cliques) {
        Bitset mask = make_mask(g.n(), part);
        for (int u : part) {
            Bitset missing = mask;
            missing.and_not(g.row(u));
            missing.reset(u);
            int w = missing.next(u + 1);
            if (w >= 0) return Violation{ViolationKind::NonEdgeInsideClique, u, w};
        }
    }
    return std::nullopt;
}

// Complement duality: a valid (k,l) partition of G is a valid (l,k) partition
// of complement(G) with the part roles exchanged.
inline KLPartition swap_parts(const KLPartition& p) {
    return KLPartition{p.cliques, p.independent_sets};
}

}  // namespace klgraph
