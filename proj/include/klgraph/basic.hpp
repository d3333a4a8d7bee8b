#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "klgraph/certificates.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

// Union of per-component 2-colorings: side_x collects the color-0 class of
// every component (BFS roots are the lowest unvisited ids and take color 0).
struct Bipartition {
    VertexSet side_x, side_y;
};

// Cover of V by two cliques.
struct CliqueCover2 {
    VertexSet clique_x, clique_y;
};

// clique_side is maximal: no independent_side vertex is adjacent to all of it.
struct SplitPartition {
    VertexSet clique_side, independent_side;
};

// Vertices in cyclic order; consecutive entries (wrapping) are adjacent, all
// distinct, odd count >= 3.
struct OddCycle {
    std::vector<int> vertices;
};

namespace detail {

// Walks BFS parent pointers from two same-level endpoints of a non-tree edge
// up to their lowest common ancestor and stitches the odd cycle together.
inline OddCycle extract_cycle(const std::vector<int>& parent, const std::vector<int>& level,
                              int u, int w) {
    std::vector<int> pu{u}, pw{w};
    int a = u, b = w;
    while (level[a] > level[b]) pu.push_back(a = parent[a]);
    while (level[b] > level[a]) pw.push_back(b = parent[b]);
    while (a != b) {
        pu.push_back(a = parent[a]);
        pw.push_back(b = parent[b]);
    }
    // pu ends at the common ancestor; append pw's path reversed, excluding it.
    std::vector<int> cyc(pu.begin(), pu.end());
    for (auto it = pw.rbegin(); it != pw.rend(); ++it)
        if (*it != a) cyc.push_back(*it);
    return OddCycle{cyc};
}

// 2-colors G[mask] by BFS (roots ascending, root color 0). On success fills
// color (0/1 inside the mask, -1 outside) and returns nullopt; otherwise
// returns an odd cycle of G[mask].
inline std::optional<OddCycle> two_color_in(const Graph& g, const Bitset& mask,
                                            std::vector<signed char>* color_out) {
    int n = g.n();
    std::vector<signed char> color(n, -1);
    std::vector<int> parent(n, -1), level(n, 0), queue;
    queue.reserve(n);
    for (int r = mask.next(0); r >= 0; r = mask.next(r + 1)) {
        if (color[r] >= 0) continue;
        color[r] = 0;
        queue.clear();
        queue.push_back(r);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (!mask.test(w)) continue;
                if (color[w] < 0) {
                    color[w] = static_cast<signed char>(1 - color[u]);
                    parent[w] = u;
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return extract_cycle(parent, level, u, w);
                }
            }
        }
    }
    if (color_out) *color_out = std::move(color);
    return std::nullopt;
}

inline bool is_bipartite_in(const Graph& g, const Bitset& mask) {
    return !two_color_in(g, mask, nullptr).has_value();
}

inline bool is_clique_in(const Graph& g, const Bitset& mask) {
    for (int u = mask.next(0); u >= 0; u = mask.next(u + 1)) {
        Bitset missing = mask;
        missing.and_not(g.row(u));
        missing.reset(u);
        if (missing.any()) return false;
    }
    return true;
}

inline bool is_independent_in(const Graph& g, const Bitset& mask) {
    for (int u = mask.next(0); u >= 0; u = mask.next(u + 1))
        if (g.row(u).intersects(mask)) return false;
    return true;
}

// Degree-sequence split test on G[mask]: with degrees d1 >= ... >= dq and
// h = max{i : d_i >= i-1}, the subgraph is split iff
// sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i; the h top-degree vertices then
// form a maximum clique and the rest an independent set.
inline std::optional<std::pair<VertexSet, VertexSet>> split_partition_in(const Graph& g,
                                                                         const Bitset& mask) {
    std::vector<std::pair<int, int>> deg;  // (-degree, vertex) for descending sort
    for (int v = mask.next(0); v >= 0; v = mask.next(v + 1))
        deg.emplace_back(-g.row(v).and_count(mask), v);
    std::sort(deg.begin(), deg.end());
    int q = static_cast<int>(deg.size());
    int h = 0;
    while (h < q && -deg[h].first >= h) ++h;
    long long top = 0, rest = 0;
    for (int i = 0; i < q; ++i) (i < h ? top : rest) += -deg[i].first;
    if (top != static_cast<long long>(h) * (h - 1) + rest) return std::nullopt;
    VertexSet clique, indep;
    for (int i = 0; i < q; ++i) (i < h ? clique : indep).push_back(deg[i].second);
    std::sort(clique.begin(), clique.end());
    std::sort(indep.begin(), indep.end());
    return std::make_pair(std::move(clique), std::move(indep));
}

inline bool is_split_in(const Graph& g, const Bitset& mask) {
    return split_partition_in(g, mask).has_value();
}

}  // namespace detail

inline std::variant<Bipartition, OddCycle> bipartite_check(const Graph& g) {
    std::vector<signed char> color;
    if (auto cyc = detail::two_color_in(g, g.full_mask(), &color)) return *cyc;
    Bipartition b;
    for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? b.side_x : b.side_y).push_back(v);
    return b;
}

// Success is a cover of V by two cliques; the witness odd cycle lives in
// complement(G).
inline std::variant<CliqueCover2, OddCycle> cobipartite_check(const Graph& g) {
    auto res = bipartite_check(complement(g));
    if (auto* cyc = std::get_if<OddCycle>(&res)) return *cyc;
    auto& b = std::get<Bipartition>(res);
    return CliqueCover2{std::move(b.side_x), std::move(b.side_y)};
}

inline std::optional<SplitPartition> split_check(const Graph& g) {
    auto sp = detail::split_partition_in(g, g.full_mask());
    if (!sp) return std::nullopt;
    KLPartition cert{{sp->second}, {sp->first}};
    if (verify_kl(g, cert)) throw std::logic_error("split_check: certificate failed to verify");
    return SplitPartition{std::move(sp->first), std::move(sp->second)};
}

// Shortest odd cycle of G, searched by BFS from each seed vertex. PROMISE:
// every odd cycle of G intersects seeds (then the minimum over seeds of the
// first same-level edge per BFS is exact). Returns nullopt iff G is
// bipartite. Ties: lowest seed in ascending order, then first same-level
// edge in BFS discovery order.
inline std::optional<OddCycle> shortest_odd_cycle_via(const Graph& g, const VertexSet& seeds) {
    int n = g.n();
    std::vector<int> parent(n), level(n), queue;
    std::vector<signed char> seen(n);
    std::optional<OddCycle> best;
    int best_len = n + 2;
    VertexSet roots = seeds;
    std::sort(roots.begin(), roots.end());
    for (int r : roots) {
        if (r < 0 || r >= n)
            throw std::invalid_argument("shortest_odd_cycle_via: seed out of range");
        if (best_len == 3) break;
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        seen[r] = 1;
        parent[r] = -1;
        level[r] = 0;
        queue.push_back(r);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            // A same-level edge found here closes a cycle of length
            // 2*level[u]+1; nothing shorter can follow for this root.
            if (2 * level[u] + 1 >= best_len) break;
            bool found = false;
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                } else if (level[w] == level[u]) {
                    int len = 2 * level[u] + 1;
                    if (len < best_len) {
                        best_len = len;
                        best = detail::extract_cycle(parent, level, u, w);
                    }
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return best;
}

// Vertices lying on every odd cycle: {w : G - w is bipartite}. Equals V when
// G is bipartite (vacuously).
inline VertexSet odd_cycle_core(const Graph& g) {
    VertexSet core;
    Bitset mask = g.full_mask();
    for (int w = 0; w < g.n(); ++w) {
        mask.reset(w);
        if (detail::is_bipartite_in(g, mask)) core.push_back(w);
        mask.set(w);
    }
    return core;
}

// Incremental bipartition of an induced subgraph, maintained per connected
// component. Values are immutable: try_add returns a fresh structure and the
// original stays usable. Keeps a reference to the graph; the caller must keep
// it alive.
class ComponentBipartition {
public:
    bool covers(int v) const { return covered_[v]; }
    int component(int v) const { return comp_[v]; }  // representative vertex id
    int color(int v) const { return color_[v]; }
    const Bitset& covered_mask() const { return mask_; }

    // Sizes of the two color classes of v's component.
    std::pair<int, int> side_sizes(int v) const {
        return {size0_[comp_[v]], size1_[comp_[v]]};
    }

    // O(deg q) conflict test: adding q fails iff q has neighbors in both
    // color classes of a single covered component.
    bool can_add(int q) const { return touched_components(q).has_value(); }

    std::optional<ComponentBipartition> try_add(int q) const {
        auto touched = touched_components(q);
        if (!touched) return std::nullopt;
        ComponentBipartition out = *this;
        int rep = q;
        for (auto& [r, col] : *touched) rep = std::min(rep, r);
        // q takes color 0 in the merged component; a touched component flips
        // when the side q sees is not color 1.
        out.covered_[q] = 1;
        out.mask_.set(q);
        out.comp_[q] = rep;
        out.color_[q] = 0;
        for (int v = 0; v < g_->n(); ++v) {
            if (!out.covered_[v] || v == q) continue;
            auto it = touched->find(comp_[v]);
            if (it == touched->end()) continue;
            if (it->second == 0) out.color_[v] = static_cast<signed char>(1 - out.color_[v]);
            out.comp_[v] = rep;
        }
        int s0 = 0, s1 = 0;
        for (int v = 0; v < g_->n(); ++v) {
            if (!out.covered_[v] || out.comp_[v] != rep) continue;
            (out.color_[v] == 0 ? s0 : s1)++;
        }
        out.size0_[rep] = s0;
        out.size1_[rep] = s1;
        return out;
    }

private:
    friend std::variant<ComponentBipartition, OddCycle> cb_init(const Graph&, const VertexSet&);

    // Color each touched component shows to q, keyed by representative;
    // nullopt when one component shows both colors (odd cycle through q).
    std::optional<std::unordered_map<int, signed char>> touched_components(int q) const {
        if (covered_[q]) throw std::invalid_argument("cb: vertex already covered");
        std::unordered_map<int, signed char> touched;
        for (int w : g_->neighbors(q)) {
            if (!covered_[w]) continue;
            auto [it, fresh] = touched.emplace(comp_[w], color_[w]);
            if (!fresh && it->second != color_[w]) return std::nullopt;
        }
        return touched;
    }

    const Graph* g_ = nullptr;
    std::vector<signed char> covered_, color_;
    std::vector<int> comp_, size0_, size1_;
    Bitset mask_;
};

// Builds the structure over G[b]; an odd cycle in G[b] is returned instead.
inline std::variant<ComponentBipartition, OddCycle> cb_init(const Graph& g, const VertexSet& b) {
    Bitset mask = make_mask(g.n(), b);
    std::vector<signed char> color;
    if (auto cyc = detail::two_color_in(g, mask, &color)) return *cyc;
    ComponentBipartition cb;
    cb.g_ = &g;
    cb.mask_ = mask;
    cb.covered_.assign(g.n(), 0);
    cb.color_ = std::move(color);
    cb.comp_.assign(g.n(), -1);
    cb.size0_.assign(g.n(), 0);
    cb.size1_.assign(g.n(), 0);
    // Component representatives via BFS over covered vertices, lowest id wins.
    std::vector<int> queue;
    for (int r : b) {
        if (cb.comp_[r] >= 0) continue;
        cb.comp_[r] = r;
        queue.clear();
        queue.push_back(r);
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : g.neighbors(queue[qi]))
                if (mask.test(w) && cb.comp_[w] < 0) {
                    cb.comp_[w] = r;
                    queue.push_back(w);
                }
    }
    for (int v : b) {
        cb.covered_[v] = 1;
        (cb.color_[v] == 0 ? cb.size0_ : cb.size1_)[cb.comp_[v]]++;
    }
    return cb;
}

inline std::optional<ComponentBipartition> cb_try_add(const ComponentBipartition& cb, int q) {
    return cb.try_add(q);
}

}  // namespace klgraph
