#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klgraph/bitset.hpp"

namespace klgraph {

// Sorted, duplicate-free list of vertex ids. Functions producing a VertexSet
// keep it sorted; functions consuming one validate where it matters.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Keeps sorted
// adjacency lists, one adjacency bit-row per vertex, and the normalized
// (u < v, lexicographically sorted) edge list.
class Graph {
public:
    static constexpr int kMaxVertices = 50000;

    Graph() = default;

    Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        if (n > kMaxVertices)
            throw std::invalid_argument("graph: vertex count exceeds cap of " +
                                        std::to_string(kMaxVertices));
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("graph: loop edge");
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i] == edges_[i - 1])
                throw std::invalid_argument("graph: duplicate edge");
        adj_.assign(n, {});
        rows_.assign(n, Bitset(n));
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            rows_[u].set(v);
            rows_[v].set(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }

    std::size_t complement_edge_count() const {
        return static_cast<std::size_t>(n_) * (n_ - 1) / 2 - m();
    }

    bool adjacent(int u, int v) const { return u != v && rows_[u].test(v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    const Bitset& row(int v) const { return rows_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    Bitset full_mask() const {
        Bitset b(n_);
        for (int v = 0; v < n_; ++v) b.set(v);
        return b;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
    std::vector<Bitset> rows_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.complement_edge_count());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

// Induced subgraph plus the mapping from new ids to original ids; s must be
// sorted and duplicate-free, so new id i corresponds to s[i].
inline std::pair<Graph, VertexSet> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> new_id(g.n(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && s[i - 1] >= v)
            throw std::invalid_argument("induced_subgraph: vertex set not sorted/unique");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && new_id[w] >= 0) edges.emplace_back(new_id[v], new_id[w]);
    return {Graph(static_cast<int>(s.size()), edges), s};
}

inline VertexSet neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("neighborhood: vertex out of range");
    return g.neighbors(v);
}

inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet out = neighborhood(g, v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

// Vertices that are neither v nor adjacent to it.
inline VertexSet non_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("non_neighborhood: vertex out of range");
    VertexSet out;
    out.reserve(g.n() - 1 - g.degree(v));
    for (int u = 0; u < g.n(); ++u)
        if (u != v && !g.adjacent(u, v)) out.push_back(u);
    return out;
}

// Small helpers shared across modules.

inline Bitset make_mask(int n, const VertexSet& s) {
    Bitset b(n);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("make_mask: vertex out of range");
        b.set(v);
    }
    return b;
}

inline VertexSet to_vertex_set(const Bitset& b) {
    VertexSet out;
    out.reserve(b.count());
    b.for_each([&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace klgraph
