#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "klgraph/certificates.hpp"
#include "klgraph/generators.hpp"
#include "klgraph/graph.hpp"

namespace klgraph {

enum class GraphFormat { EdgeList, Dimacs, Graph6 };

inline GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "graph6") return GraphFormat::Graph6;
    throw std::invalid_argument("unknown format: " + name);
}

namespace detail {

inline Graph parse_edgelist(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edgelist: malformed header");
    if (m < 0) throw std::invalid_argument("edgelist: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edgelist: truncated edge list");
        edges.push_back({u, v});
    }
    return Graph(static_cast<int>(n), edges);
}

inline Graph parse_dimacs(std::istream& in) {
    std::string line;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (have_header || !(ls >> kind >> n >> m) || kind != "edge")
                throw std::invalid_argument("dimacs: malformed header");
            have_header = true;
        } else if (tag == "e") {
            int u, v;
            if (!have_header || !(ls >> u >> v))
                throw std::invalid_argument("dimacs: edge line before header or malformed");
            edges.push_back({u - 1, v - 1});
        } else {
            throw std::invalid_argument("dimacs: unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("dimacs: missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("dimacs: edge count mismatch with header");
    return Graph(static_cast<int>(n), edges);
}

// Standard 6-bit encoding: the vertex count, then the upper-triangle
// adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed msb-first into
// 6-bit groups offset by 63.
inline Graph parse_graph6(std::istream& in) {
    std::string s, tok;
    while (in >> tok) s += tok;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() < 4 || s[1] == '~') throw std::invalid_argument("graph6: malformed header");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(s[i]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: malformed header");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("graph6: malformed header");
        pos = 1;
    }
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
        throw std::invalid_argument("bad graph6 checksum-length");
    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(s[pos + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 checksum-length");
            if ((c >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    for (; bit < nbytes * 6; ++bit) {
        int c = static_cast<unsigned char>(s[pos + bit / 6]) - 63;
        if ((c >> (5 - bit % 6)) & 1) throw std::invalid_argument("bad graph6 checksum-length");
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::EdgeList: return detail::parse_edgelist(in);
        case GraphFormat::Dimacs: return detail::parse_dimacs(in);
        default: return detail::parse_graph6(in);
    }
}

inline Graph parse_graph_file(const std::string& path, GraphFormat fmt) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return parse_graph(in, fmt);
}

inline void write_graph(std::ostream& out, const Graph& g, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::EdgeList:
            out << g.n() << ' ' << g.m() << '\n';
            for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
            break;
        case GraphFormat::Dimacs:
            out << "p edge " << g.n() << ' ' << g.m() << '\n';
            for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
            break;
        default: {
            std::string s;
            if (g.n() <= 62) {
                s.push_back(static_cast<char>(g.n() + 63));
            } else {
                s.push_back('~');
                for (int shift = 12; shift >= 0; shift -= 6)
                    s.push_back(static_cast<char>(((g.n() >> shift) & 63) + 63));
            }
            long long nbits = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
            std::string body((nbits + 5) / 6, 0);
            long long bit = 0;
            for (int j = 1; j < g.n(); ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (g.adjacent(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
            for (char& c : body) c = static_cast<char>(c + 63);
            out << s << body << '\n';
        }
    }
}

inline void write_graph_file(const std::string& path, const Graph& g, GraphFormat fmt) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_graph(out, g, fmt);
}

// Compact generator descriptions: "gnp:n=100,p=0.5,seed=42",
// "planted:ind=3/3,cliques=4/4,p=0.5,seed=7", "named:cycle(5)".
inline GenSpec parse_genspec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("genspec: missing kind prefix");
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    GenSpec spec;
    if (kind == "named") {
        spec.kind = GenSpec::Kind::Named;
        spec.name = rest;
        if (rest.empty()) throw std::invalid_argument("genspec: empty name");
        return spec;
    }
    if (kind == "gnp")
        spec.kind = GenSpec::Kind::Gnp;
    else if (kind == "planted")
        spec.kind = GenSpec::Kind::Planted;
    else
        throw std::invalid_argument("genspec: unknown kind '" + kind + "'");
    auto parse_sizes = [](const std::string& v) {
        std::vector<int> out;
        std::string tok;
        std::istringstream vs(v);
        while (std::getline(vs, tok, '/')) out.push_back(std::stoi(tok));
        return out;
    };
    std::istringstream rs(rest);
    std::string item;
    while (std::getline(rs, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("genspec: expected key=value");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "n")
                spec.n = std::stoi(val);
            else if (key == "p")
                spec.p = std::stod(val);
            else if (key == "seed")
                spec.seed = std::stoull(val);
            else if (key == "ind")
                spec.independent_sizes = parse_sizes(val);
            else if (key == "cliques")
                spec.clique_sizes = parse_sizes(val);
            else
                throw std::invalid_argument("genspec: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("genspec: bad value for '" + key + "'");
        }
    }
    return spec;
}

// Outcome of one recognition run as surfaced by the command line: the class,
// the verdict, the verified certificate when the graph is a member, wall
// times per stage, and which engine produced the answer.
struct RecognitionReport {
    int k = 0;
    int l = 0;
    bool member = false;
    std::optional<KLPartition> certificate;
    std::vector<std::pair<std::string, double>> timings_ms;
    std::string engine = "main";
};

inline std::string report_to_json(const RecognitionReport& rep, bool include_certificate = true) {
    nlohmann::ordered_json j;
    j["k"] = rep.k;
    j["l"] = rep.l;
    j["member"] = rep.member;
    j["engine"] = rep.engine;
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : rep.timings_ms) t[stage] = ms;
    j["timings_ms"] = t;
    if (rep.member && include_certificate && rep.certificate) {
        j["independent_sets"] = rep.certificate->independent_sets;
        j["cliques"] = rep.certificate->cliques;
    }
    return j.dump(2);
}

}  // namespace klgraph
