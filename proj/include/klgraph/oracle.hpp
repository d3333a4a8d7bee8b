#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klgraph/certificates.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

// Part indices for forced assignments: 0..k-1 independent sets, k..k+l-1
// cliques.
using ForcedAssignment = std::map<int, int>;

inline constexpr int kDefaultOracleCutoff = 18;

namespace detail {

// Exhaustive backtracking over part assignments. Vertices are ordered by
// descending degree (ties by id) so cliques and independent sets constrain
// early. Without forcing, among same-type parts only the first empty one is
// tried (they are interchangeable); forcing pins part indices, which breaks
// that symmetry, so the pruning is disabled then.
class KLBacktracker {
public:
    KLBacktracker(const Graph& g, int k, int l, const ForcedAssignment* forced, int cutoff)
        : g_(g), k_(k), l_(l) {
        if (k < 0 || l < 0) throw std::invalid_argument("oracle_kl: negative part count");
        if (cutoff < 0 || cutoff > 62)
            throw std::invalid_argument("oracle_kl: cutoff must be in [0, 62]");
        if (g.n() > cutoff)
            throw std::invalid_argument("oracle_kl: graph exceeds cutoff of " +
                                        std::to_string(cutoff));
        order_.resize(g.n());
        for (int v = 0; v < g.n(); ++v) order_[v] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        pos_.assign(g.n(), -1);
        for (int i = 0; i < g.n(); ++i) pos_[order_[i]] = i;
        adj_.assign(g.n(), 0);
        for (auto [u, v] : g.edges()) {
            adj_[pos_[u]] |= std::uint64_t{1} << pos_[v];
            adj_[pos_[v]] |= std::uint64_t{1} << pos_[u];
        }
        forced_part_.assign(g.n(), -1);
        if (forced) {
            use_symmetry_ = false;
            for (auto [v, p] : *forced) {
                if (v < 0 || v >= g.n())
                    throw std::invalid_argument("oracle_kl_forced: vertex out of range");
                if (p < 0 || p >= k + l)
                    throw std::invalid_argument("oracle_kl_forced: part index out of range");
                forced_part_[pos_[v]] = p;
            }
        }
        members_.assign(k + l, 0);
        assign_.assign(g.n(), -1);
    }

    std::optional<KLPartition> run() {
        if (k_ + l_ == 0) {
            if (g_.n() > 0) return std::nullopt;
            return KLPartition{};
        }
        if (!search(0)) return std::nullopt;
        KLPartition out;
        out.independent_sets.assign(k_, {});
        out.cliques.assign(l_, {});
        for (int i = 0; i < g_.n(); ++i) {
            int p = assign_[i];
            auto& part = p < k_ ? out.independent_sets[p] : out.cliques[p - k_];
            part.push_back(order_[i]);
        }
        for (auto& s : out.independent_sets) std::sort(s.begin(), s.end());
        for (auto& s : out.cliques) std::sort(s.begin(), s.end());
        return out;
    }

private:
    bool feasible(int i, int p) const {
        if (p < k_) return (members_[p] & adj_[i]) == 0;
        return (members_[p] & ~adj_[i]) == 0;
    }

    bool search(int i) {
        if (i == g_.n()) return true;
        std::uint64_t bit = std::uint64_t{1} << i;
        int lo = 0, hi = k_ + l_;
        if (forced_part_[i] >= 0) {
            lo = forced_part_[i];
            hi = lo + 1;
        }
        for (int p = lo; p < hi; ++p) {
            if (use_symmetry_ && members_[p] == 0 && p != 0 && p != k_ &&
                members_[p - 1] == 0)
                continue;  // interchangeable with the previous empty part
            if (!feasible(i, p)) continue;
            members_[p] |= bit;
            assign_[i] = p;
            if (search(i + 1)) return true;
            members_[p] &= ~bit;
            assign_[i] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_, l_;
    bool use_symmetry_ = true;
    std::vector<int> order_, pos_, forced_part_, assign_;
    std::vector<std::uint64_t> adj_, members_;
};

}  // namespace detail

// Ground-truth membership for the (k,l) class by exhaustive backtracking.
inline std::optional<KLPartition> oracle_kl(const Graph& g, int k, int l,
                                            int cutoff = kDefaultOracleCutoff) {
    return detail::KLBacktracker(g, k, l, nullptr, cutoff).run();
}

// Same search with some vertices pinned to specific parts; contradictory
// forcing simply yields none.
inline std::optional<KLPartition> oracle_kl_forced(const Graph& g, int k, int l,
                                                   const ForcedAssignment& forced,
                                                   int cutoff = kDefaultOracleCutoff) {
    return detail::KLBacktracker(g, k, l, &forced, cutoff).run();
}

}  // namespace klgraph
