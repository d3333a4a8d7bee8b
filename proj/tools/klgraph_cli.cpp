#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "klgraph/klgraph.hpp"

namespace {

using namespace klgraph;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::pair<int, int> parse_class(const std::string& text) {
    auto sep = text.find_first_of(",x");
    if (sep == std::string::npos) throw std::invalid_argument("class must look like K,L");
    int k, l;
    try {
        k = std::stoi(text.substr(0, sep));
        l = std::stoi(text.substr(sep + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("class must look like K,L");
    }
    if (k < 0 || l < 0) throw std::invalid_argument("class parts must be nonnegative");
    return {k, l};
}

Graph read_input(const std::string& path, const std::string& format) {
    GraphFormat fmt = parse_format(format);
    if (path == "-") return parse_graph(std::cin, fmt);
    return parse_graph_file(path, fmt);
}

std::optional<KLPartition> run_engine(const Graph& g, int k, int l, const std::string& engine) {
    if (k == 2 && l == 1) {
        if (engine == "main") return recognize_21(g);
        if (engine == "oddcore") return recognize_21_oddcore(g);
    } else if (k == 1 && l == 2) {
        if (engine == "main") return recognize_12(g);
        if (engine == "oddcore") return recognize_12_oddcore(g);
    } else if (k == 2 && l == 2) {
        if (engine == "main") return recognize_22(g);
        if (engine == "generic-framework") return recognize_22_generic(g);
    } else if (engine == "main") {
        KLPartition cert;
        if (k == 2 && l == 0) {
            auto res = bipartite_check(g);
            auto* bp = std::get_if<Bipartition>(&res);
            if (!bp) return std::nullopt;
            cert.independent_sets = {bp->side_x, bp->side_y};
            return cert;
        }
        if (k == 0 && l == 2) {
            auto res = cobipartite_check(g);
            auto* cc = std::get_if<CliqueCover2>(&res);
            if (!cc) return std::nullopt;
            cert.cliques = {cc->clique_x, cc->clique_y};
            return cert;
        }
        if (k == 1 && l == 1) {
            auto res = split_check(g);
            if (!res) return std::nullopt;
            cert.independent_sets = {res->independent_side};
            cert.cliques = {res->clique_side};
            return cert;
        }
        throw std::invalid_argument("unsupported class (" + std::to_string(k) + "," +
                                    std::to_string(l) + "); supported: 1,1 2,0 0,2 2,1 1,2 2,2");
    }
    throw std::invalid_argument("engine '" + engine + "' not available for class (" +
                                std::to_string(k) + "," + std::to_string(l) + ")");
}

int cmd_recognize(const std::string& cls, const std::string& input, const std::string& format,
                  const std::string& engine, bool include_cert) {
    auto [k, l] = parse_class(cls);
    RecognitionReport rep;
    rep.k = k;
    rep.l = l;
    rep.engine = engine;
    auto t0 = Clock::now();
    Graph g = read_input(input, format);
    rep.timings_ms.push_back({"parse", ms_since(t0)});
    t0 = Clock::now();
    rep.certificate = run_engine(g, k, l, engine);
    rep.member = rep.certificate.has_value();
    rep.timings_ms.push_back({"recognize", ms_since(t0)});
    t0 = Clock::now();
    if (rep.certificate && verify_kl(g, *rep.certificate))
        throw std::logic_error("recognize: produced certificate fails verification");
    rep.timings_ms.push_back({"verify", ms_since(t0)});
    std::cout << report_to_json(rep, include_cert) << '\n';
    return 0;
}

int oracle_cutoff_default() {
    if (const char* env = std::getenv("KLGRAPH_ORACLE_CUTOFF")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("KLGRAPH_ORACLE_CUTOFF is not an integer");
        }
    }
    return kDefaultOracleCutoff;
}

int cmd_oracle(const std::string& cls, const std::string& input, const std::string& format,
               std::optional<int> cutoff_flag, bool include_cert) {
    auto [k, l] = parse_class(cls);
    int cutoff = cutoff_flag ? *cutoff_flag : oracle_cutoff_default();
    RecognitionReport rep;
    rep.k = k;
    rep.l = l;
    rep.engine = "oracle";
    auto t0 = Clock::now();
    Graph g = read_input(input, format);
    rep.timings_ms.push_back({"parse", ms_since(t0)});
    t0 = Clock::now();
    rep.certificate = oracle_kl(g, k, l, cutoff);
    rep.member = rep.certificate.has_value();
    rep.timings_ms.push_back({"recognize", ms_since(t0)});
    t0 = Clock::now();
    if (rep.certificate && verify_kl(g, *rep.certificate))
        throw std::logic_error("oracle: produced certificate fails verification");
    rep.timings_ms.push_back({"verify", ms_since(t0)});
    std::cout << report_to_json(rep, include_cert) << '\n';
    return 0;
}

int cmd_gen(const std::string& spec_text, const std::string& out,
            std::optional<std::uint64_t> seed) {
    GenSpec spec = parse_genspec(spec_text);
    if (seed) spec.seed = *seed;
    Graph g = generate(spec);
    if (out == "-") {
        write_graph(std::cout, g, GraphFormat::EdgeList);
    } else {
        write_graph_file(out, g, GraphFormat::EdgeList);
    }
    return 0;
}

int cmd_bench(const std::string& suite, const std::string& out) {
    auto rows = bench_run(suite);
    if (out == "-") {
        write_bench_csv(std::cout, rows);
    } else {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot open output file: " + out);
        write_bench_csv(f, rows);
    }
    std::cerr << "bench: " << rows.size() << " rows (" << suite << ")\n";
    return 0;
}

int cmd_selftest(int max_n) {
    if (max_n < 0 || max_n > 6) throw std::invalid_argument("selftest: max-n must be in [0,6]");
    long checked = 0;
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t graphs = 1ULL << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            Graph g = klgraph::detail::labeled_graph(n, mask);
            auto expect = [&](const char* what, bool got, int k, int l) {
                bool want = oracle_kl(g, k, l).has_value();
                if (got != want)
                    throw std::logic_error(std::string("selftest: ") + what +
                                           " disagrees with oracle on n=" + std::to_string(n) +
                                           " mask=" + std::to_string(mask));
            };
            expect("bipartite_check", std::holds_alternative<Bipartition>(bipartite_check(g)), 2, 0);
            expect("cobipartite_check", std::holds_alternative<CliqueCover2>(cobipartite_check(g)),
                   0, 2);
            expect("split_check", split_check(g).has_value(), 1, 1);
            expect("recognize_21", recognize_21(g).has_value(), 2, 1);
            expect("recognize_12", recognize_12(g).has_value(), 1, 2);
            expect("recognize_22", recognize_22(g).has_value(), 2, 2);
            ++checked;
        }
        std::cerr << "selftest: n=" << n << " done (" << graphs << " graphs)\n";
    }
    std::cout << "selftest: OK (" << checked << " graphs, all verdicts match the oracle)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognition of graphs partitionable into independent sets and cliques"};
    app.require_subcommand(1);

    std::string cls, input, format = "edgelist", engine = "main";
    bool include_cert = true;
    auto* rec = app.add_subcommand("recognize", "decide membership and print a JSON report");
    rec->add_option("--class", cls, "target class as K,L (e.g. 2,1)")->required();
    rec->add_option("--input", input, "input path, - for stdin")->required();
    rec->add_option("--format", format, "edgelist | dimacs | graph6");
    rec->add_option("--engine", engine, "main | oddcore | generic-framework");
    rec->add_flag("--certificate,!--no-certificate", include_cert,
                  "embed the partition in the JSON report (default on)");

    std::string o_cls, o_input, o_format = "edgelist";
    std::optional<int> o_cutoff;
    bool o_cert = true;
    auto* orc = app.add_subcommand("oracle", "exhaustive reference decision for small graphs");
    orc->add_option("--class", o_cls, "target class as K,L; any nonnegative pair")->required();
    orc->add_option("--input", o_input, "input path, - for stdin")->required();
    orc->add_option("--format", o_format, "edgelist | dimacs | graph6");
    orc->add_option("--cutoff", o_cutoff, "largest n the oracle accepts (default 18)");
    orc->add_flag("--certificate,!--no-certificate", o_cert,
                  "embed the partition in the JSON report (default on)");

    std::string g_spec, g_out = "-";
    std::optional<std::uint64_t> g_seed;
    auto* gen = app.add_subcommand("gen", "generate an instance and emit it as an edge list");
    gen->add_option("--spec", g_spec,
                    "gnp:n=..,p=..,seed=.. | planted:ind=a/b,cliques=c/d,p=..,seed=.. | named:..")
        ->required();
    gen->add_option("--out", g_out, "output path, - for stdout");
    gen->add_option("--seed", g_seed, "override the seed in --spec");

    std::string b_suite, b_out = "-";
    auto* ben = app.add_subcommand("bench", "run a measurement suite and write CSV");
    ben->add_option("--suite", b_suite, "r21-scaling | r22-scaling | engines-compare")->required();
    ben->add_option("--out", b_out, "output path, - for stdout");

    int st_max_n = 6;
    auto* st = app.add_subcommand("selftest", "compare every recognizer with the oracle on all "
                                              "graphs with at most --max-n vertices");
    st->add_option("--max-n", st_max_n, "largest vertex count to sweep (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rec->parsed()) return cmd_recognize(cls, input, format, engine, include_cert);
        if (orc->parsed()) return cmd_oracle(o_cls, o_input, o_format, o_cutoff, o_cert);
        if (gen->parsed()) return cmd_gen(g_spec, g_out, g_seed);
        if (ben->parsed()) return cmd_bench(b_suite, b_out);
        if (st->parsed()) return cmd_selftest(st_max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
