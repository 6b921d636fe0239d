#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pturan/circuit_graph.hpp"
#include "pturan/constructions.hpp"
#include "pturan/extract.hpp"
#include "pturan/patterns.hpp"
#include "pturan/plane_graph.hpp"
#include "pturan/search.hpp"
#include "pturan/theta_extract.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 74;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

pturan::PlaneGraph load_plg(const std::string& path) { return pturan::parse_plg(read_file(path)); }

// theta and the oracle want a designated outer face; default to the unique
// non-triangular face when the file does not set one
pturan::PlaneGraph ensure_outer(const pturan::PlaneGraph& g) {
    if (g.has_outer()) return g;
    const pturan::FaceSet& fs = g.faces();
    int pick = -1;
    for (int i = 0; i < fs.size(); ++i)
        if (fs.walks[i].size() != 3) {
            if (pick >= 0) throw pturan::Error("no outer face designated and several candidates");
            pick = i;
        }
    if (pick < 0) pick = 0;  // full triangulation: any face works
    return g.with_outer(fs.walks[pick]);
}

pturan::Budget make_budget(double max_seconds, std::uint64_t max_nodes) {
    if (max_seconds > 0) return pturan::Budget::with_seconds(max_seconds, max_nodes);
    pturan::Budget b;
    b.max_nodes = max_nodes;
    return b;
}

int cmd_gen(const std::string& construction, int t, int iterations, const std::string& host_path,
            const std::string& block_path, const std::string& out) {
    pturan::PlaneGraph result({{}});
    if (construction == "figure2") {
        result = pturan::figure2_fixture();
    } else if (construction == "kleetope") {
        pturan::PlaneGraph base =
            block_path.empty() ? pturan::k4_fixture() : load_plg(block_path);
        result = pturan::kleetope(base, iterations);
    } else if (construction == "chain") {
        result = pturan::sharp_chain(t, iterations).graph();
    } else if (construction == "substitute") {
        if (host_path.empty() || block_path.empty())
            throw pturan::Error("substitute needs --host and --block");
        pturan::PlaneGraph host = load_plg(host_path);
        pturan::PlaneGraph block = load_plg(block_path);
        const pturan::FaceSet& fs = block.faces();
        int pick = -1;
        for (int i = 0; i < fs.size() && pick < 0; ++i)
            if (fs.walks[i].size() == 3) pick = i;
        if (pick < 0) throw pturan::Error("block has no triangular face");
        result = pturan::substitute(host, block, fs.walks[pick]);
    } else {
        std::cerr << "unknown construction: " << construction << "\n";
        return kExitUsage;
    }
    write_file(out, result.serialize());
    std::cout << "wrote " << out << " (v=" << result.vertex_count()
              << ", e=" << result.edge_count() << ")\n";
    return 0;
}

int cmd_verify(const std::string& input, const std::string& pattern_text, double max_seconds,
               std::uint64_t max_nodes) {
    pturan::PlaneGraph g = load_plg(input);
    const pturan::FaceSet& fs = g.faces();
    std::cout << "valid plane graph: v=" << g.vertex_count() << " e=" << g.edge_count()
              << " f=" << fs.size() << "\n";
    if (g.has_outer()) {
        std::cout << "outer face:";
        for (int v : g.outer_walk()) std::cout << " " << v;
        std::cout << "\n";
        auto checked = pturan::check_circuit_graph(g, g.outer_walk());
        if (std::holds_alternative<pturan::CircuitGraph>(checked)) {
            auto& cg = std::get<pturan::CircuitGraph>(checked);
            std::cout << "circuit graph: yes, m=" << pturan::deficiency_m(cg) << "\n";
        } else {
            std::cout << "circuit graph: no ("
                      << std::get<pturan::CircuitViolation>(checked).describe() << ")\n";
        }
        std::cout << "near triangulation: " << (pturan::is_near_triangulation(g) ? "yes" : "no")
                  << "\n";
    }
    if (!pattern_text.empty()) {
        pturan::Pattern p = pturan::Pattern::parse(pattern_text);
        pturan::Budget budget = make_budget(max_seconds, max_nodes);
        auto r = pturan::matches(g, p, &budget);
        std::cout << "pattern " << p.name() << ": " << (r.matched ? "present" : "absent") << "\n";
        if (r.theta) {
            std::cout << "  cycle:";
            for (int v : r.theta->cycle) std::cout << " " << v;
            std::cout << "\n  chord: " << r.theta->chord.first << " " << r.theta->chord.second
                      << "\n";
        } else if (r.cycle) {
            std::cout << "  cycle:";
            for (int v : *r.cycle) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

void print_witness(const pturan::NtWitness& w) {
    std::cout << "# near triangulation witness, v=" << w.subgraph.vertex_count() << "\n";
    std::cout << "# host labels:";
    for (int v : w.embedding_map) std::cout << " " << v;
    std::cout << "\n" << w.subgraph.serialize();
}

int cmd_extract(int t, const std::string& input, bool oracle, double max_seconds,
                std::uint64_t max_nodes) {
    pturan::PlaneGraph g = ensure_outer(load_plg(input));
    pturan::Budget budget = make_budget(max_seconds, max_nodes);
    if (oracle) {
        auto w = pturan::oracle_near_triangulation(g, t, &budget);
        if (!w) {
            std::cout << "oracle: no near triangulation on >= " << t << " vertices\n";
            return 3;
        }
        print_witness(*w);
        return 0;
    }
    pturan::CircuitGraph cg = pturan::validate_circuit_graph(g, g.outer_walk());
    try {
        auto [w, trace] = pturan::find_near_triangulation(cg, t);
        int step = 0;
        for (const auto& s : trace.steps) {
            std::cout << "step " << ++step << ": case " << s.tag << " m " << s.m_before << " -> "
                      << s.m_after << " face";
            for (int v : s.face) std::cout << " " << v;
            if (!s.note.empty()) std::cout << " (" << s.note << ")";
            std::cout << "\n";
        }
        print_witness(w);
        return 0;
    } catch (const pturan::PreconditionViolated& e) {
        std::cout << e.what() << "\n";
        return 2;
    }
}

int cmd_theta(int k, const std::string& input, double max_seconds, std::uint64_t max_nodes) {
    pturan::PlaneGraph g = ensure_outer(load_plg(input));
    pturan::Budget budget = make_budget(max_seconds, max_nodes);
    try {
        pturan::ThetaWitness w = pturan::find_theta(g, k, std::nullopt, &budget);
        std::cout << "cycle:";
        for (int v : w.cycle) std::cout << " " << v;
        std::cout << "\nchord: " << w.chord.first << " " << w.chord.second << "\n";
        return 0;
    } catch (const pturan::NoLongCycle& e) {
        std::cout << e.what() << "\n";
        return 2;
    }
}

int cmd_search(int n, const std::string& pattern_text, int jobs, const std::string& out,
               double max_seconds, std::uint64_t max_nodes) {
    pturan::Pattern p = pturan::Pattern::parse(pattern_text);
    pturan::Budget budget = make_budget(max_seconds, max_nodes);
    pturan::SearchReport report = pturan::ex_p(n, p, jobs, &budget);
    report.bounds = pturan::bound_rows_for(n, p.k, p, report.max_edges);

    std::string stem = out;
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") stem.resize(stem.size() - 4);
    std::string witness_path = stem + ".witness.plg";
    write_file(witness_path, report.witness.serialize());
    write_file(out, pturan::report_csv(report, witness_path));

    bool violated = false;
    for (const auto& b : report.bounds)
        if (b.status == pturan::BoundRow::Status::Violated) violated = true;
    std::cout << "n=" << n << " pattern=" << p.name() << " max_edges=" << report.max_edges
              << " (" << report.graphs_enumerated << " graphs)\n";
    if (violated) {
        std::cout << "BOUND VIOLATION, witness:\n" << report.witness.serialize();
        return 4;
    }
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out) {
    std::ostringstream table;
    table << "n,pattern,max_edges,bound_name,bound_value,satisfied\n";
    bool violated = false;
    for (const auto& path : inputs) {
        std::istringstream is(read_file(path));
        std::string line;
        bool first = true;
        while (std::getline(is, line)) {
            if (first) {
                first = false;
                if (line.rfind("n,", 0) == 0) continue;
            }
            std::vector<std::string> cols;
            std::istringstream ls(line);
            std::string tok;
            while (std::getline(ls, tok, ',')) cols.push_back(tok);
            if (cols.size() != 7) continue;
            table << cols[0] << "," << cols[1] << "," << cols[2] << "," << cols[4] << ","
                  << cols[5] << "," << cols[6] << "\n";
            if (cols[6] == "no") violated = true;
        }
    }
    if (out.empty())
        std::cout << table.str();
    else
        write_file(out, table.str());
    if (violated) {
        std::cout << "bound violations present\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar Turan workbench"};
    app.require_subcommand(1);

    std::string construction, host_path, block_path, out, input, pattern_text;
    std::vector<std::string> inputs;
    int t = 4, iterations = 1, k = 4, n = 4, jobs = 1;
    bool oracle = false;
    double max_seconds = 0;
    std::uint64_t max_nodes = 500'000'000ULL;

    auto* gen = app.add_subcommand("gen", "emit a construction as PLG");
    gen->add_option("--construction", construction, "kleetope|chain|substitute|figure2")
        ->required();
    gen->add_option("--t", t, "chain parameter t");
    gen->add_option("--iterations", iterations, "iteration count");
    gen->add_option("--host", host_path, "host PLG for substitute");
    gen->add_option("--block", block_path, "triangulation PLG (kleetope base / substitute block)");
    gen->add_option("--out", out, "output PLG path")->required();

    auto* verify = app.add_subcommand("verify", "validate a PLG file and run pattern checks");
    verify->add_option("--input", input, "PLG file")->required();
    verify->add_option("--pattern", pattern_text, "pattern (c<k>, theta<k>, theta<k>.<d>, circ<k>)");
    verify->add_option("--max-seconds", max_seconds, "time budget");
    verify->add_option("--max-nodes", max_nodes, "search node budget");

    auto* extract = app.add_subcommand("extract", "extract a near-triangulation subgraph");
    extract->add_option("--t", t, "minimum vertex count")->required();
    extract->add_option("--input", input, "PLG file (circuit graph with outer face)")->required();
    extract->add_flag("--oracle", oracle, "run the brute-force oracle instead");
    extract->add_option("--max-seconds", max_seconds, "time budget");
    extract->add_option("--max-nodes", max_nodes, "search node budget");

    auto* theta = app.add_subcommand("theta", "extract a theta_k subgraph");
    theta->add_option("--k", k, "cycle length")->required();
    theta->add_option("--input", input, "PLG file (near triangulation)")->required();
    theta->add_option("--max-seconds", max_seconds, "time budget");
    theta->add_option("--max-nodes", max_nodes, "search node budget");

    auto* search = app.add_subcommand("search", "exhaustive planar Turan search");
    search->add_option("--n", n, "vertex count")->required();
    search->add_option("--pattern", pattern_text, "forbidden pattern")->required();
    search->add_option("--jobs", jobs, "worker threads");
    search->add_option("--out", out, "output CSV path")->required();
    search->add_option("--max-seconds", max_seconds, "time budget");
    search->add_option("--max-nodes", max_nodes, "search node budget");

    auto* report = app.add_subcommand("report", "aggregate search CSVs");
    report->add_option("--input", inputs, "CSV files")->required();
    report->add_option("--out", out, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(construction, t, iterations, host_path, block_path, out);
        if (verify->parsed()) return cmd_verify(input, pattern_text, max_seconds, max_nodes);
        if (extract->parsed()) return cmd_extract(t, input, oracle, max_seconds, max_nodes);
        if (theta->parsed()) return cmd_theta(k, input, max_seconds, max_nodes);
        if (search->parsed())
            return cmd_search(n, pattern_text, jobs, out, max_seconds, max_nodes);
        if (report->parsed()) return cmd_report(inputs, out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const pturan::BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const pturan::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitData;
    } catch (const pturan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
