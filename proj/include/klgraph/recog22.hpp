#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <variant>
#include <vector>

#include "klgraph/basic.hpp"
#include "klgraph/certificates.hpp"
#include "klgraph/graph.hpp"
#include "klgraph/recog21.hpp"
#include "klgraph/sparse_dense.hpp"

namespace klgraph {

// The nine graphs on at most four vertices that are simultaneously bipartite
// and co-bipartite. Any vertex set inducing something else cannot sit inside
// both a two-coloring and a two-clique cover at once.
enum class SmallGraphKind { Empty, K1, K2, TwoK1, K1PlusK2, K1_2, TwoK2, P4, C4 };

inline const char* to_string(SmallGraphKind k) {
    switch (k) {
        case SmallGraphKind::Empty: return "Empty";
        case SmallGraphKind::K1: return "K1";
        case SmallGraphKind::K2: return "K2";
        case SmallGraphKind::TwoK1: return "2K1";
        case SmallGraphKind::K1PlusK2: return "K1+K2";
        case SmallGraphKind::K1_2: return "K1,2";
        case SmallGraphKind::TwoK2: return "2K2";
        case SmallGraphKind::P4: return "P4";
        case SmallGraphKind::C4: return "C4";
    }
    return "?";
}

// Exact classification of G[p] among the nine kinds; nullopt otherwise.
// Within four vertices the sorted degree sequence of the induced subgraph
// pins the isomorphism type down completely.
inline std::optional<SmallGraphKind> classify_small_kind(const Graph& g, const VertexSet& p) {
    if (p.size() > 4) return std::nullopt;
    std::vector<int> deg(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) ++deg[i], ++deg[j];
    std::sort(deg.begin(), deg.end());
    switch (p.size()) {
        case 0: return SmallGraphKind::Empty;
        case 1: return SmallGraphKind::K1;
        case 2: return deg[1] == 1 ? SmallGraphKind::K2 : SmallGraphKind::TwoK1;
        case 3:
            if (deg == std::vector<int>{0, 1, 1}) return SmallGraphKind::K1PlusK2;
            if (deg == std::vector<int>{1, 1, 2}) return SmallGraphKind::K1_2;
            return std::nullopt;
        default:
            if (deg == std::vector<int>{1, 1, 1, 1}) return SmallGraphKind::TwoK2;
            if (deg == std::vector<int>{1, 1, 2, 2}) return SmallGraphKind::P4;
            if (deg == std::vector<int>{2, 2, 2, 2}) return SmallGraphKind::C4;
            return std::nullopt;
    }
}

// Fast membership test for the nine-kind family: at most four vertices, no
// triangle (co-bipartite would need one clique of size 3) and no independent
// triple (bipartite side of the cover would need one).
inline bool is_small_bicobipartite(const Graph& g, const VertexSet& p) {
    if (p.size() > 4) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k) {
                int e = g.adjacent(p[i], p[j]) + g.adjacent(p[i], p[k]) + g.adjacent(p[j], p[k]);
                if (e == 3 || e == 0) return false;
            }
    return true;
}

namespace detail {

inline bool is_cobipartite_in(const Graph& g, const Bitset& mask) {
    auto [h, map_back] = induced_subgraph(g, to_vertex_set(mask));
    (void)map_back;
    Graph hc = complement(h);
    return is_bipartite_in(hc, hc.full_mask());
}

inline std::uint64_t pack_small_key(const VertexSet& p) {
    std::uint64_t key = 0;
    for (int v : p) key = (key << 16) | static_cast<std::uint64_t>(v + 1);
    return key;
}

// Enumerates the subsets p of ground with required within p and G[p] one of
// the nine kinds, invoking fn on each (sorted); fn returning true stops the
// walk. Every such p has at most four vertices, every three-vertex one
// contains an edge, and every four-vertex one contains two disjoint edges,
// so the structured generation below reaches them all; the seen filter
// removes duplicates among triples and quadruples built from different
// edges.
inline bool for_each_small_P(const Graph& g, const VertexSet& ground, const VertexSet& required,
                             const std::function<bool(const VertexSet&)>& fn) {
    for (int v : required)
        if (!std::binary_search(ground.begin(), ground.end(), v))
            throw std::invalid_argument("for_each_small_P: required not within ground");
    if (required.size() > 4) return false;
    std::unordered_set<std::uint64_t> seen;
    auto emit = [&](VertexSet p) -> bool {
        std::sort(p.begin(), p.end());
        if (!seen.insert(pack_small_key(p)).second) return false;
        if (!std::includes(p.begin(), p.end(), required.begin(), required.end())) return false;
        if (!is_small_bicobipartite(g, p)) return false;
        return fn(p);
    };
    if (emit({})) return true;
    for (int u : ground)
        if (emit({u})) return true;
    for (std::size_t i = 0; i < ground.size(); ++i)
        for (std::size_t j = i + 1; j < ground.size(); ++j)
            if (emit({ground[i], ground[j]})) return true;
    Bitset gm = make_mask(g.n(), ground);
    std::vector<Edge> inner;
    for (int u : ground)
        for (int v : g.neighbors(u))
            if (v > u && gm.test(v)) inner.push_back({u, v});
    for (const auto& [u, v] : inner)
        for (int w : ground) {
            if (w == u || w == v) continue;
            if (emit({u, v, w})) return true;
        }
    for (std::size_t i = 0; i < inner.size(); ++i)
        for (std::size_t j = i + 1; j < inner.size(); ++j) {
            auto [a, b] = inner[i];
            auto [c, d] = inner[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (emit({a, b, c, d})) return true;
        }
    return false;
}

}  // namespace detail

inline std::vector<VertexSet> enumerate_small_P(const Graph& g, const VertexSet& ground,
                                                const VertexSet& required) {
    std::vector<VertexSet> out;
    detail::for_each_small_P(g, ground, required, [&](const VertexSet& p) {
        out.push_back(p);
        return false;
    });
    return out;
}

// Per-vertex trichotomy for the two-independent-sets-plus-two-cliques class.
// A vertex inside an independent set sees only the other independent set and
// the two cliques, so its neighborhood must admit one independent set plus
// two cliques; a vertex inside a clique is adjacent to the rest of it, so
// its non-neighborhood must admit two independent sets plus one clique.
struct TriClassification22 {
    VertexSet c_f, b_f, r;
    std::optional<int> reject_witness;
};

inline TriClassification22 classify_vertices_22(const Graph& g) {
    TriClassification22 out;
    for (int v = 0; v < g.n(); ++v) {
        auto [hn, mn] = induced_subgraph(g, g.neighbors(v));
        (void)mn;
        bool sparse_ok = recognize_12(hn).has_value();
        Bitset non_nbh = g.full_mask();
        non_nbh.and_not(g.row(v));
        non_nbh.reset(v);
        auto [hc, mc] = induced_subgraph(g, to_vertex_set(non_nbh));
        (void)mc;
        bool dense_ok = recognize_21(hc).has_value();
        if (sparse_ok && dense_ok)
            out.r.push_back(v);
        else if (sparse_ok)
            out.b_f.push_back(v);
        else if (dense_ok)
            out.c_f.push_back(v);
        else if (!out.reject_witness)
            out.reject_witness = v;
    }
    return out;
}

namespace detail {

// Assembles and verifies the full certificate from the bipartite side.
inline KLPartition make_partition_22(const Graph& g, const Bitset& b_mask) {
    std::vector<signed char> color;
    if (two_color_in(g, b_mask, &color))
        throw std::logic_error("partition_22: bipartite side not bipartite");
    KLPartition out;
    out.independent_sets.assign(2, {});
    for (int v = b_mask.next(0); v >= 0; v = b_mask.next(v + 1))
        out.independent_sets[color[v] == 0 ? 0 : 1].push_back(v);
    Bitset d_mask = g.full_mask();
    d_mask.and_not(b_mask);
    auto [h, map_back] = induced_subgraph(g, to_vertex_set(d_mask));
    auto cover = cobipartite_check(h);
    auto* cc = std::get_if<CliqueCover2>(&cover);
    if (!cc) throw std::logic_error("partition_22: dense side not co-bipartite");
    out.cliques.assign(2, {});
    for (int v : cc->clique_x) out.cliques[0].push_back(map_back[v]);
    for (int v : cc->clique_y) out.cliques[1].push_back(map_back[v]);
    if (verify_kl(g, out)) throw std::logic_error("partition_22: certificate failed to verify");
    return out;
}

}  // namespace detail

// Six-part decomposition around a vertex v that passed both per-vertex
// tests: its neighborhood splits into cliques c1 (with v itself), c2 and
// independent set i3, its non-neighborhood into independent sets i1, i2 and
// clique c3.
struct Decomposition22 {
    int v = -1;
    VertexSet c1, c2, c3, i1, i2, i3;
};

inline Decomposition22 decompose_around_min_degree(const Graph& g,
                                                   const TriClassification22& cls) {
    if (cls.r.empty()) throw std::invalid_argument("decompose: R is empty");
    int v = cls.r[0];
    for (int u : cls.r)
        if (g.degree(u) < g.degree(v)) v = u;
    auto [hn, mn] = induced_subgraph(g, g.neighbors(v));
    auto nbh_cert = recognize_12(hn);
    if (!nbh_cert) throw std::logic_error("decompose: neighborhood certificate missing");
    Bitset non_nbh = g.full_mask();
    non_nbh.and_not(g.row(v));
    non_nbh.reset(v);
    auto [hc, mc] = induced_subgraph(g, to_vertex_set(non_nbh));
    auto rest_cert = recognize_21(hc);
    if (!rest_cert) throw std::logic_error("decompose: non-neighborhood certificate missing");

    Decomposition22 dec;
    dec.v = v;
    auto remap = [](const VertexSet& s, const VertexSet& back) {
        VertexSet out;
        for (int x : s) out.push_back(back[x]);
        return out;
    };
    dec.c1 = remap(nbh_cert->cliques[0], mn);
    dec.c1.insert(std::lower_bound(dec.c1.begin(), dec.c1.end(), v), v);
    dec.c2 = remap(nbh_cert->cliques[1], mn);
    dec.i3 = remap(nbh_cert->independent_sets[0], mn);
    dec.i1 = remap(rest_cert->independent_sets[0], mc);
    dec.i2 = remap(rest_cert->independent_sets[1], mc);
    dec.c3 = remap(rest_cert->cliques[0], mc);

    Bitset covered(g.n());
    long total = 0;
    for (const VertexSet* part : {&dec.c1, &dec.c2, &dec.c3, &dec.i1, &dec.i2, &dec.i3}) {
        total += static_cast<long>(part->size());
        covered |= make_mask(g.n(), *part);
    }
    if (total != g.n() || covered.count() != g.n())
        throw std::logic_error("decompose: parts do not partition the vertices");
    for (const VertexSet* c : {&dec.c1, &dec.c2, &dec.c3})
        if (!detail::is_clique_in(g, make_mask(g.n(), *c)))
            throw std::logic_error("decompose: clique part is not a clique");
    for (const VertexSet* i : {&dec.i1, &dec.i2, &dec.i3})
        if (!detail::is_independent_in(g, make_mask(g.n(), *i)))
            throw std::logic_error("decompose: independent part is not independent");
    return dec;
}

// Searches the largest bipartite seed of the form U minus a small removal,
// where U = i1 union i2 union i3. In any valid partition the dense side
// meets each independent part in at most two vertices, its trace on
// i1 union i2 induces one of the nine kinds, and forced vertices stay on
// their side; the candidate space below therefore contains U intersected
// with the bipartite side of every valid partition, so the maximum found is
// at most six short of any valid bipartite side.
inline std::optional<VertexSet> find_seed_B(const Graph& g, const TriClassification22& cls,
                                            const Decomposition22& dec) {
    VertexSet u12 = set_union(dec.i1, dec.i2);
    VertexSet u = set_union(u12, dec.i3);
    Bitset bf_mask = make_mask(g.n(), cls.b_f);
    Bitset cf_mask = make_mask(g.n(), cls.c_f);
    VertexSet ground, required;
    for (int x : u12) {
        if (!bf_mask.test(x)) ground.push_back(x);
        if (cf_mask.test(x)) required.push_back(x);
    }
    VertexSet ground3, required3;
    for (int x : dec.i3) {
        if (!bf_mask.test(x)) ground3.push_back(x);
        if (cf_mask.test(x)) required3.push_back(x);
    }
    if (required3.size() > 2) return std::nullopt;
    for (int x : required3)
        if (!std::binary_search(ground3.begin(), ground3.end(), x)) return std::nullopt;
    for (int x : required)
        if (!std::binary_search(ground.begin(), ground.end(), x)) return std::nullopt;

    std::vector<VertexSet> p3_candidates;
    {
        VertexSet cur = required3;
        p3_candidates.push_back(cur);
        if (required3.size() < 2)
            for (int x : ground3) {
                if (std::binary_search(required3.begin(), required3.end(), x)) continue;
                p3_candidates.push_back(set_union(required3, {x}));
            }
        if (required3.empty())
            for (std::size_t i = 0; i < ground3.size(); ++i)
                for (std::size_t j = i + 1; j < ground3.size(); ++j)
                    p3_candidates.push_back({ground3[i], ground3[j]});
    }

    Bitset u_mask = make_mask(g.n(), u);
    std::array<Bitset, 3> part_masks{make_mask(g.n(), dec.i1), make_mask(g.n(), dec.i2),
                                     make_mask(g.n(), dec.i3)};
    std::optional<VertexSet> best;
    auto consider = [&](const VertexSet& p, const VertexSet& p3) {
        Bitset removed = make_mask(g.n(), p);
        removed |= make_mask(g.n(), p3);
        Bitset b_mask = u_mask;
        b_mask.and_not(removed);
        for (const Bitset& pm : part_masks) {
            Bitset off = pm;
            off.and_not(b_mask);
            if (off.count() > 2) return;
        }
        if (!detail::is_cobipartite_in(g, removed)) return;
        if (!detail::is_bipartite_in(g, b_mask)) return;
        VertexSet b = to_vertex_set(b_mask);
        if (!best || b.size() > best->size() || (b.size() == best->size() && b < *best))
            best = std::move(b);
    };
    detail::for_each_small_P(g, ground, required, [&](const VertexSet& p) {
        for (const VertexSet& p3 : p3_candidates) consider(p, p3);
        return false;
    });
    return best;
}

namespace detail {

// Backtracking search for q_size vertices outside s_mask whose addition to
// the base two-coloring keeps it bipartite; on_full decides acceptance of
// each completed set. The final vertex is tested with the cheap feasibility
// check only, since no further extension needs the merged state.
inline bool grow_bipartite_rec(const ComponentBipartition& cb, const Graph& g,
                               const Bitset& s_mask, int start, int remaining, Bitset& cur,
                               const std::function<bool(const Bitset&)>& on_full) {
    if (remaining == 0) return on_full(cur);
    for (int q = start; q < g.n(); ++q) {
        if (s_mask.test(q) || cur.test(q)) continue;
        if (remaining == 1) {
            if (!cb.can_add(q)) continue;
            cur.set(q);
            bool done = on_full(cur);
            cur.reset(q);
            if (done) return true;
        } else {
            auto next = cb.try_add(q);
            if (!next) continue;
            cur.set(q);
            bool done = grow_bipartite_rec(*next, g, s_mask, q + 1, remaining - 1, cur, on_full);
            cur.reset(q);
            if (done) return true;
        }
    }
    return false;
}

}  // namespace detail

// First-improvement growth of a bipartite vertex set: repeatedly swap a
// nine-kind subset P of S for some larger outside set Q keeping G[S]
// bipartite. Capped at max_iters rounds; with the seed from find_seed_B six
// rounds suffice to match the largest bipartite side of any valid partition.
inline VertexSet phase1_22(const Graph& g, const VertexSet& s0, int max_iters = 6) {
    Bitset s_mask = make_mask(g.n(), s0);
    if (!detail::is_bipartite_in(g, s_mask)) throw std::invalid_argument("phase1_22: seed not bipartite");
    VertexSet s = s0;
    for (int iter = 0; iter < max_iters; ++iter) {
        s_mask = make_mask(g.n(), s);
        bool improved = false;
        detail::for_each_small_P(g, s, {}, [&](const VertexSet& p) {
            Bitset base_mask = s_mask;
            for (int x : p) base_mask.reset(x);
            auto cb = cb_init(g, to_vertex_set(base_mask));
            auto* state = std::get_if<ComponentBipartition>(&cb);
            if (!state) throw std::logic_error("phase1_22: base set lost bipartiteness");
            Bitset cur(g.n());
            bool found = detail::grow_bipartite_rec(
                *state, g, s_mask, 0, static_cast<int>(p.size()) + 1, cur,
                [&](const Bitset& q_mask) {
                    Bitset merged = base_mask;
                    merged |= q_mask;
                    s = to_vertex_set(merged);
                    return true;
                });
            improved = found;
            return found;
        });
        if (!improved) break;
    }
    return s;
}

// Exhausts the bounded exchanges around the grown set: for each nine-kind
// subset P of s_star and each outside Q no larger than P keeping the swap
// bipartite, accept as soon as the complement of the swapped set is
// co-bipartite. When s_star is at least as large as the bipartite side of
// some valid partition, that partition itself appears among the candidates.
inline std::optional<KLPartition> phase2_22(const Graph& g, const VertexSet& s_star) {
    Bitset s_mask = make_mask(g.n(), s_star);
    std::optional<KLPartition> result;
    detail::for_each_small_P(g, s_star, {}, [&](const VertexSet& p) {
        Bitset base_mask = s_mask;
        for (int x : p) base_mask.reset(x);
        auto cb = cb_init(g, to_vertex_set(base_mask));
        auto* state = std::get_if<ComponentBipartition>(&cb);
        if (!state) throw std::logic_error("phase2_22: base set lost bipartiteness");
        for (int q_size = 0; q_size <= static_cast<int>(p.size()); ++q_size) {
            Bitset cur(g.n());
            bool found = detail::grow_bipartite_rec(
                *state, g, s_mask, 0, q_size, cur, [&](const Bitset& q_mask) {
                    Bitset b_mask = base_mask;
                    b_mask |= q_mask;
                    Bitset d_mask = g.full_mask();
                    d_mask.and_not(b_mask);
                    if (!detail::is_cobipartite_in(g, d_mask)) return false;
                    result = detail::make_partition_22(g, b_mask);
                    return true;
                });
            if (found) return true;
        }
        return false;
    });
    return result;
}

inline std::optional<KLPartition> recognize_22(const Graph& g);

namespace detail {

inline std::optional<KLPartition> recognize_22_core(const Graph& g) {
    TriClassification22 cls = classify_vertices_22(g);
    if (cls.reject_witness) return std::nullopt;
    Bitset bf_mask = make_mask(g.n(), cls.b_f);
    if (!is_bipartite_in(g, bf_mask)) return std::nullopt;
    if (!is_cobipartite_in(g, make_mask(g.n(), cls.c_f))) return std::nullopt;
    if (cls.r.empty()) return make_partition_22(g, bf_mask);
    Decomposition22 dec = decompose_around_min_degree(g, cls);
    auto seed = find_seed_B(g, cls, dec);
    if (!seed) return std::nullopt;
    VertexSet s_star = phase1_22(g, *seed, 6);
    return phase2_22(g, s_star);
}

}  // namespace detail

// Two independent sets plus two cliques. The class is closed under
// complement with the part roles exchanged, so a graph denser than its
// complement is handled through the complement, keeping the per-vertex
// subproblems on the sparse side.
inline std::optional<KLPartition> recognize_22(const Graph& g) {
    if (g.complement_edge_count() < g.m()) {
        auto res = recognize_22(complement(g));
        if (!res) return std::nullopt;
        KLPartition out = swap_parts(*res);
        if (verify_kl(g, out)) throw std::logic_error("recognize_22: swapped certificate invalid");
        return out;
    }
    return detail::recognize_22_core(g);
}

// Reference engine built directly on the exchange framework: enumerate every
// partition into a bipartite and a co-bipartite side and take the first.
inline std::optional<KLPartition> recognize_22_generic(const Graph& g) {
    auto parts = all_sparse_dense_partitions(g, bipartite_cobipartite_problem());
    if (parts.empty()) return std::nullopt;
    return detail::make_partition_22(g, make_mask(g.n(), parts.front().v_s));
}

}  // namespace klgraph
