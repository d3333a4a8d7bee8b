#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "klgraph/basic.hpp"
#include "klgraph/certificates.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

// Per-vertex trichotomy for the two-independent-sets-plus-clique class:
// b_f holds vertices forced to the bipartite side (neighborhood not split),
// c_f vertices forced to the clique (non-neighborhood not bipartite), r the
// unconstrained rest. A vertex failing both tests rules the class out;
// reject_witness records the lowest such vertex.
struct TriClassification21 {
    VertexSet c_f, b_f, r;
    std::optional<int> reject_witness;
};

inline TriClassification21 classify_vertices_21(const Graph& g) {
    TriClassification21 out;
    Bitset non_nbh(g.n());
    for (int v = 0; v < g.n(); ++v) {
        bool nbh_split = detail::is_split_in(g, g.row(v));
        non_nbh = g.full_mask();
        non_nbh.and_not(g.row(v));
        non_nbh.reset(v);
        bool non_nbh_bipartite = detail::is_bipartite_in(g, non_nbh);
        if (nbh_split && non_nbh_bipartite)
            out.r.push_back(v);
        else if (nbh_split)
            out.b_f.push_back(v);
        else if (non_nbh_bipartite)
            out.c_f.push_back(v);
        else if (!out.reject_witness)
            out.reject_witness = v;
    }
    return out;
}

namespace detail {

// Assembles the (2,1) certificate: the two color classes of G[b_mask] plus
// the clique, verified before returning.
inline KLPartition make_partition_21(const Graph& g, const Bitset& b_mask,
                                     const VertexSet& clique) {
    std::vector<signed char> color;
    if (two_color_in(g, b_mask, &color))
        throw std::logic_error("partition_21: bipartite side not bipartite");
    KLPartition out;
    out.independent_sets.assign(2, {});
    for (int v = b_mask.next(0); v >= 0; v = b_mask.next(v + 1))
        out.independent_sets[color[v] == 0 ? 0 : 1].push_back(v);
    out.cliques.push_back(clique);
    if (verify_kl(g, out)) throw std::logic_error("partition_21: certificate failed to verify");
    return out;
}

// Lexicographically first triangle of G[mask], scanning its edges in
// lexicographic order and picking the lowest common neighbor.
inline std::optional<std::array<int, 3>> first_triangle_in(const Graph& g, const Bitset& mask) {
    for (int u = mask.next(0); u >= 0; u = mask.next(u + 1))
        for (int v : g.neighbors(u)) {
            if (v <= u || !mask.test(v)) continue;
            Bitset common = g.row(u);
            common &= g.row(v);
            common &= mask;
            int w = common.next(0);
            if (w >= 0) {
                std::array<int, 3> tri{u, v, w};
                std::sort(tri.begin(), tri.end());
                return tri;
            }
        }
    return std::nullopt;
}

}  // namespace detail

// Decides whether a valid partition exists with x in the clique part.
// G[N(x)] must be split (guaranteed for x in cls.r): any clique containing x
// is {x} plus a clique of G[N(x)], and a clique of a split graph has at most
// one vertex j outside the maximal clique side K, so the maximal candidates
// C_j = {x} union (K intersect N(j)) union {j}, plus C_bottom = {x} union K,
// cover every case; bipartiteness of the rest is hereditary, so testing the
// maximal candidates suffices.
inline std::optional<KLPartition> modify(const Graph& g, int x, const TriClassification21& cls) {
    if (!std::binary_search(cls.r.begin(), cls.r.end(), x))
        throw std::invalid_argument("modify: x is not in cls.r");
    auto sp = detail::split_partition_in(g, g.row(x));
    if (!sp) throw std::logic_error("modify: neighborhood of an r-vertex must be split");
    const auto& [k_side, i_side] = *sp;
    Bitset k_mask = make_mask(g.n(), k_side);
    auto attempt = [&](std::optional<int> j) -> std::optional<KLPartition> {
        Bitset c_mask(g.n());
        c_mask.set(x);
        if (j) {
            Bitset kj = k_mask;
            kj &= g.row(*j);
            c_mask |= kj;
            c_mask.set(*j);
        } else {
            c_mask |= k_mask;
        }
        if (!detail::is_clique_in(g, c_mask))
            throw std::logic_error("modify: candidate clique is not a clique");
        Bitset b_mask = g.full_mask();
        b_mask.and_not(c_mask);
        if (!detail::is_bipartite_in(g, b_mask)) return std::nullopt;
        return detail::make_partition_21(g, b_mask, to_vertex_set(c_mask));
    };
    if (auto res = attempt(std::nullopt)) return res;
    for (int j : i_side)
        if (auto res = attempt(j)) return res;
    return std::nullopt;
}

// Completion step when the unconstrained region R is clique-poor. PROMISE:
// G[R] has no triangle (then any clique uses at most two R-vertices, and the
// candidate scan below is complete); the checked preconditions are no
// witness, C^F a clique, G[B^F] bipartite, R nonempty. If G[B^F union R] is
// not bipartite, its shortest odd cycle cannot sit inside the bipartite
// side, so a valid clique has one vertex on the cycle (case a) or an
// R-R edge with an endpoint on it (case b); the enumeration is bounded by
// 3n because an outside vertex has at most two neighbors on a shortest odd
// cycle.
inline std::optional<KLPartition> solve_low_clique_R(const Graph& g,
                                                     const TriClassification21& cls) {
    if (cls.reject_witness) throw std::invalid_argument("solve_low_clique_R: reject witness set");
    if (cls.r.empty()) throw std::invalid_argument("solve_low_clique_R: R is empty");
    Bitset cf_mask = make_mask(g.n(), cls.c_f);
    if (!detail::is_clique_in(g, cf_mask))
        throw std::invalid_argument("solve_low_clique_R: C^F is not a clique");
    Bitset bf_mask = make_mask(g.n(), cls.b_f);
    if (!detail::is_bipartite_in(g, bf_mask))
        throw std::invalid_argument("solve_low_clique_R: G[B^F] is not bipartite");

    Bitset r_mask = make_mask(g.n(), cls.r);
    Bitset ball = bf_mask;
    ball |= r_mask;
    if (detail::is_bipartite_in(g, ball)) return detail::make_partition_21(g, ball, cls.c_f);

    // Shortest odd cycle of G[B^F union R]; every odd cycle there meets R
    // because G[B^F] is bipartite.
    VertexSet ball_vs = to_vertex_set(ball);
    auto [h, map_back] = induced_subgraph(g, ball_vs);
    VertexSet seeds;
    for (std::size_t i = 0; i < ball_vs.size(); ++i)
        if (r_mask.test(ball_vs[i])) seeds.push_back(static_cast<int>(i));
    auto cyc_h = shortest_odd_cycle_via(h, seeds);
    if (!cyc_h) throw std::logic_error("solve_low_clique_R: odd cycle not found");
    VertexSet cycle_r;  // cycle vertices in R, ascending
    Bitset on_cycle(g.n());
    for (int v : cyc_h->vertices) on_cycle.set(map_back[v]);
    for (int v = on_cycle.next(0); v >= 0; v = on_cycle.next(v + 1))
        if (r_mask.test(v)) cycle_r.push_back(v);

    long candidates_a = 0, candidates_b = 0;
    // Case (a): one cycle vertex joins the clique.
    for (int v : cycle_r) {
        ++candidates_a;
        if (!cf_mask.subset_of(g.row(v))) continue;
        Bitset b_mask = ball;
        b_mask.reset(v);
        if (!detail::is_bipartite_in(g, b_mask)) continue;
        VertexSet clique = cls.c_f;
        clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
        return detail::make_partition_21(g, b_mask, clique);
    }
    // Case (b): an R-R edge with an endpoint on the cycle joins the clique.
    std::set<Edge> tried;
    for (int u : cycle_r)
        for (int w : g.neighbors(u)) {
            if (!r_mask.test(w)) continue;
            Edge e{std::min(u, w), std::max(u, w)};
            if (!tried.insert(e).second) continue;
            ++candidates_b;
            if (!cf_mask.subset_of(g.row(u)) || !cf_mask.subset_of(g.row(w))) continue;
            Bitset b_mask = ball;
            b_mask.reset(u);
            b_mask.reset(w);
            if (!detail::is_bipartite_in(g, b_mask)) continue;
            VertexSet clique = set_union(cls.c_f, VertexSet{e.first, e.second});
            return detail::make_partition_21(g, b_mask, clique);
        }
    // A vertex off a shortest odd cycle of length >= 5 has at most two
    // neighbors on it, so the case (b) edges number at most
    // |C| + 2(n - |C|); a triangle cycle still yields at most 3n candidates
    // in total.
    long clen = static_cast<long>(cyc_h->vertices.size());
    if (clen >= 5 && candidates_b > clen + 2 * (g.n() - clen))
        throw std::logic_error("solve_low_clique_R: case (b) count exceeds the cycle-edge bound");
    if (candidates_a + candidates_b > 3L * g.n())
        throw std::logic_error("solve_low_clique_R: candidate count exceeds 3n");
    return std::nullopt;
}

inline std::optional<KLPartition> recognize_21(const Graph& g);

namespace detail {

// Shared front of both engines: classification, global checks, the R-empty
// accept, and the triangle branch. Sets done=false when the clique-poor
// completion is still needed.
inline std::optional<KLPartition> recognize_21_front(const Graph& g, TriClassification21& cls,
                                                     bool& done) {
    done = true;
    cls = classify_vertices_21(g);
    if (cls.reject_witness) return std::nullopt;
    Bitset cf_mask = make_mask(g.n(), cls.c_f);
    if (!is_clique_in(g, cf_mask)) return std::nullopt;
    Bitset bf_mask = make_mask(g.n(), cls.b_f);
    if (!is_bipartite_in(g, bf_mask)) return std::nullopt;
    if (cls.r.empty()) return make_partition_21(g, bf_mask, cls.c_f);
    // A triangle in G[R] puts one of its corners in any clique part; try all
    // three forced completions.
    if (auto tri = first_triangle_in(g, make_mask(g.n(), cls.r))) {
        for (int x : *tri)
            if (auto res = modify(g, x, cls)) return res;
        return std::nullopt;
    }
    done = false;
    return std::nullopt;
}

}  // namespace detail

inline std::optional<KLPartition> recognize_21(const Graph& g) {
    TriClassification21 cls;
    bool done;
    auto res = detail::recognize_21_front(g, cls, done);
    if (done) return res;
    return solve_low_clique_R(g, cls);
}

// Alternative completion engine: instead of scanning cycle candidates, use
// odd-cycle cores. With H = G[B^F union R] non-bipartite and R* the
// R-vertices adjacent to all of C^F, a valid clique is C^F plus one or two
// R*-vertices; one-vertex solutions are exactly core(H) intersect R*, and
// two-vertex ones are pairs (v, w adjacent) with w in core(H - v).
inline std::optional<KLPartition> recognize_21_oddcore(const Graph& g) {
    TriClassification21 cls;
    bool done;
    auto res = detail::recognize_21_front(g, cls, done);
    if (done) return res;

    Bitset cf_mask = make_mask(g.n(), cls.c_f);
    Bitset ball = make_mask(g.n(), set_union(cls.b_f, cls.r));
    if (detail::is_bipartite_in(g, ball)) return detail::make_partition_21(g, ball, cls.c_f);
    VertexSet rstar;
    for (int v : cls.r)
        if (cf_mask.subset_of(g.row(v))) rstar.push_back(v);
    if (rstar.empty()) return std::nullopt;
    Bitset rstar_mask = make_mask(g.n(), rstar);

    VertexSet ball_vs = to_vertex_set(ball);
    auto [h, map_back] = induced_subgraph(g, ball_vs);
    auto accept = [&](VertexSet extra) -> std::optional<KLPartition> {
        Bitset b_mask = ball;
        for (int v : extra) b_mask.reset(v);
        return detail::make_partition_21(g, b_mask, set_union(cls.c_f, extra));
    };
    for (int w_h : odd_cycle_core(h)) {
        int w = map_back[w_h];
        if (rstar_mask.test(w)) return accept({w});
    }
    for (int v : rstar) {
        VertexSet rest = ball_vs;
        rest.erase(std::lower_bound(rest.begin(), rest.end(), v));
        auto [h2, map2] = induced_subgraph(g, rest);
        for (int w_h : odd_cycle_core(h2)) {
            int w = map2[w_h];
            if (rstar_mask.test(w) && g.adjacent(v, w))
                return accept({std::min(v, w), std::max(v, w)});
        }
    }
    return std::nullopt;
}

// Complement duality: one clique plus two independent sets in G corresponds
// to the (2,1) structure of complement(G) with the part roles exchanged.
inline std::optional<KLPartition> recognize_12(const Graph& g) {
    auto res = recognize_21(complement(g));
    if (!res) return std::nullopt;
    KLPartition out = swap_parts(*res);
    if (verify_kl(g, out)) throw std::logic_error("recognize_12: swapped certificate invalid");
    return out;
}

inline std::optional<KLPartition> recognize_12_oddcore(const Graph& g) {
    auto res = recognize_21_oddcore(complement(g));
    if (!res) return std::nullopt;
    KLPartition out = swap_parts(*res);
    if (verify_kl(g, out)) throw std::logic_error("recognize_12: swapped certificate invalid");
    return out;
}

}  // namespace klgraph
