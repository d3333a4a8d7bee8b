#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klgraph/generators.hpp"
#include "klgraph/io.hpp"
#include "klgraph/recog21.hpp"
#include "klgraph/recog22.hpp"
#include "klgraph/sparse_dense.hpp"

namespace klgraph {

struct BenchRow {
    std::string instance;
    int n = 0;
    int m = 0;
    std::string engine;
    double ms = 0.0;
    bool member = false;
};

namespace detail {

template <typename Fn>
inline BenchRow time_engine(const std::string& instance, const Graph& g, const std::string& engine,
                            Fn&& recognizer) {
    auto t0 = std::chrono::steady_clock::now();
    bool member = recognizer(g);
    auto t1 = std::chrono::steady_clock::now();
    BenchRow row;
    row.instance = instance;
    row.n = g.n();
    row.m = g.m();
    row.engine = engine;
    row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.member = member;
    return row;
}

// All labeled graphs on n vertices, one per subset of the lexicographic
// pair list.
inline Graph labeled_graph(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return Graph(n, edges);
}

inline std::string graph6_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g, GraphFormat::Graph6);
    std::string s = os.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace detail

// Fixed measurement suites. r21-scaling doubles n on sparse random inputs,
// r22-scaling grows planted members, engines-compare runs every engine pair
// on all labeled graphs with at most six vertices and insists on identical
// verdicts.
inline std::vector<BenchRow> bench_run(const std::string& suite) {
    std::vector<BenchRow> rows;
    if (suite == "r21-scaling") {
        for (int n : {250, 500, 1000, 2000}) {
            Graph g = gnp(n, 8.0 / n, 9000 + static_cast<std::uint64_t>(n));
            std::string id = "gnp-n" + std::to_string(n);
            rows.push_back(detail::time_engine(id, g, "main", [](const Graph& h) {
                return recognize_21(h).has_value();
            }));
            rows.push_back(detail::time_engine(id, g, "oddcore", [](const Graph& h) {
                return recognize_21_oddcore(h).has_value();
            }));
            if (rows[rows.size() - 2].member != rows.back().member)
                throw std::logic_error("bench: r21 engines disagree on " + id);
        }
    } else if (suite == "r22-scaling") {
        for (int n : {10, 14, 18, 22}) {
            int a = n / 4, b = (n - a) / 3, c = (n - a - b) / 2, d = n - a - b - c;
            auto [g, planted] = planted_kl({a, b}, {c, d}, 0.5, 7000 + static_cast<std::uint64_t>(n));
            (void)planted;
            std::string id = "planted-n" + std::to_string(n);
            rows.push_back(detail::time_engine(id, g, "main", [](const Graph& h) {
                return recognize_22(h).has_value();
            }));
        }
    } else if (suite == "engines-compare") {
        for (int n = 0; n <= 6; ++n) {
            std::uint64_t graphs = 1ULL << (n * (n - 1) / 2);
            for (std::uint64_t mask = 0; mask < graphs; ++mask) {
                Graph g = detail::labeled_graph(n, mask);
                std::string id = "g6:" + detail::graph6_string(g);
                rows.push_back(detail::time_engine(id, g, "r21:main", [](const Graph& h) {
                    return recognize_21(h).has_value();
                }));
                rows.push_back(detail::time_engine(id, g, "r21:oddcore", [](const Graph& h) {
                    return recognize_21_oddcore(h).has_value();
                }));
                if (rows[rows.size() - 2].member != rows.back().member)
                    throw std::logic_error("bench: r21 engines disagree on " + id);
                rows.push_back(detail::time_engine(id, g, "r22:main", [](const Graph& h) {
                    return recognize_22(h).has_value();
                }));
                rows.push_back(detail::time_engine(id, g, "r22:generic-framework", [](const Graph& h) {
                    return recognize_22_generic(h).has_value();
                }));
                if (rows[rows.size() - 2].member != rows.back().member)
                    throw std::logic_error("bench: r22 engines disagree on " + id);
            }
        }
    } else {
        throw std::invalid_argument("bench: unknown suite '" + suite + "'");
    }
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,n,m,engine,ms,member\n";
    for (const auto& r : rows)
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.engine << ',' << r.ms << ','
            << (r.member ? "true" : "false") << '\n';
}

}  // namespace klgraph
