#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "klgraph/basic.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

// A sparse-dense partition problem: both predicates must be hereditary, and
// c bounds the size of any (sparse intersect dense) vertex set.
struct SparseDenseProblem {
    std::function<bool(const Graph&)> sparse_test, dense_test;
    int c = 0;
};

struct SparseDensePartition {
    VertexSet v_s, v_d;

    friend bool operator==(const SparseDensePartition&, const SparseDensePartition&) = default;
    friend bool operator<(const SparseDensePartition& a, const SparseDensePartition& b) {
        return a.v_s < b.v_s;
    }
};

// Bipartite sparse side, co-bipartite dense side. A graph that is both
// bipartite and co-bipartite has at most 4 vertices, hence c = 4.
inline SparseDenseProblem bipartite_cobipartite_problem() {
    return SparseDenseProblem{
        [](const Graph& g) { return detail::is_bipartite_in(g, g.full_mask()); },
        [](const Graph& g) {
            Graph gc = complement(g);
            return detail::is_bipartite_in(gc, gc.full_mask());
        },
        4};
}

// Edgeless sparse side, complete dense side (the split-graph instance); a
// graph that is both has at most 1 vertex.
inline SparseDenseProblem edgeless_complete_problem() {
    return SparseDenseProblem{[](const Graph& g) { return g.m() == 0; },
                              [](const Graph& g) {
                                  return g.m() == static_cast<std::size_t>(g.n()) *
                                                      (g.n() - 1) / 2;
                              },
                              1};
}

namespace detail {

// Size-k subsets of items in lexicographic order; fn returning true stops
// the enumeration (and makes this return true).
template <class F>
inline bool for_each_combination(const VertexSet& items, int k, F&& fn) {
    int n = static_cast<int>(items.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    VertexSet combo(k);
    while (true) {
        for (int i = 0; i < k; ++i) combo[i] = items[idx[i]];
        if (fn(combo)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool sparse_on(const Graph& g, const SparseDenseProblem& prob, const VertexSet& s) {
    return prob.sparse_test(induced_subgraph(g, s).first);
}

inline bool dense_on(const Graph& g, const SparseDenseProblem& prob, const VertexSet& s) {
    return prob.dense_test(induced_subgraph(g, s).first);
}

}  // namespace detail

// Local-search growth phase: repeatedly replace S by (S \ P) union Q with
// |P| <= c, |Q| = |P| + 1, P from S and Q from V \ S (so P and Q are
// disjoint), keeping the sparse predicate true. Candidates are tried with P
// by increasing size then lexicographic, Q lexicographic; the first
// improvement is taken, so every iteration grows |S| by exactly one.
inline VertexSet phase1(const Graph& g, const SparseDenseProblem& prob, const VertexSet& s0,
                        std::optional<int> max_iters = std::nullopt) {
    if (!detail::sparse_on(g, prob, s0))
        throw std::invalid_argument("phase1: seed fails the sparse predicate");
    VertexSet s = s0;
    int iters = 0;
    while (!max_iters || iters < *max_iters) {
        VertexSet outside = set_difference(to_vertex_set(g.full_mask()), s);
        bool improved = false;
        for (int psize = 0; psize <= std::min<int>(prob.c, s.size()) && !improved; ++psize) {
            detail::for_each_combination(s, psize, [&](const VertexSet& p) {
                VertexSet base = set_difference(s, p);
                return detail::for_each_combination(outside, psize + 1, [&](const VertexSet& q) {
                    VertexSet cand = set_union(base, q);
                    if (!detail::sparse_on(g, prob, cand)) return false;
                    s = std::move(cand);
                    improved = true;
                    return true;
                });
            });
        }
        if (!improved) break;
        ++iters;
    }
    return s;
}

// Enumeration phase around a quiescent S*: all S'' = (S* \ P) union Q with
// |Q| <= |P| <= c and Q from V \ S* whose sides satisfy both predicates.
// Distinct (P,Q) pairs give distinct S'' here, but candidates are still
// deduplicated by their sorted encoding. Output is sorted by sparse side.
inline std::vector<SparseDensePartition> phase2(const Graph& g, const SparseDenseProblem& prob,
                                                const VertexSet& s_star) {
    if (!detail::sparse_on(g, prob, s_star))
        throw std::invalid_argument("phase2: S* fails the sparse predicate");
    VertexSet outside = set_difference(to_vertex_set(g.full_mask()), s_star);
    std::set<VertexSet> seen;
    std::vector<SparseDensePartition> out;
    for (int psize = 0; psize <= std::min<int>(prob.c, s_star.size()); ++psize) {
        detail::for_each_combination(s_star, psize, [&](const VertexSet& p) {
            VertexSet base = set_difference(s_star, p);
            for (int qsize = 0; qsize <= psize; ++qsize) {
                detail::for_each_combination(outside, qsize, [&](const VertexSet& q) {
                    VertexSet cand = set_union(base, q);
                    if (!seen.insert(cand).second) return false;
                    VertexSet rest = set_difference(to_vertex_set(g.full_mask()), cand);
                    if (detail::sparse_on(g, prob, cand) && detail::dense_on(g, prob, rest))
                        out.push_back({std::move(cand), std::move(rest)});
                    return false;
                });
            }
            return false;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Complete list of sparse-dense partitions: grow from the empty set to
// quiescence, then enumerate around the result. The count is bounded by
// n^(2c).
inline std::vector<SparseDensePartition> all_sparse_dense_partitions(
    const Graph& g, const SparseDenseProblem& prob) {
    VertexSet s_star = phase1(g, prob, {});
    auto out = phase2(g, prob, s_star);
    if (g.n() > 1 &&
        static_cast<long double>(out.size()) >
            std::pow(static_cast<long double>(g.n()), 2.0L * prob.c))
        throw std::logic_error("all_sparse_dense_partitions: count bound exceeded");
    return out;
}

// Brute-force reference: every one of the 2^n splits, tested directly.
inline std::vector<SparseDensePartition> oracle_all_sparse_dense(const Graph& g,
                                                                 const SparseDenseProblem& prob,
                                                                 int cutoff = 20) {
    if (g.n() > cutoff)
        throw std::invalid_argument("oracle_all_sparse_dense: graph exceeds cutoff");
    std::vector<SparseDensePartition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
        VertexSet vs, vd;
        for (int v = 0; v < g.n(); ++v) ((mask >> v) & 1 ? vs : vd).push_back(v);
        if (detail::sparse_on(g, prob, vs) && detail::dense_on(g, prob, vd))
            out.push_back({std::move(vs), std::move(vd)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace klgraph
