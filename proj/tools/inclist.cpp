// inclist: command-line front end for the incidence list coloring library.
//
//   inclist solve <graph> [--lists F | --uniform K] [--pin U EID CU CV] [-o F]
//   inclist oracle <graph> chi | check [--lists F | --uniform K] | badlists K UNIVERSE
//   inclist strong <bipartite> [--lists F | --uniform K] [-o F]
//   inclist gen <kind> [arg] [--seed S]
//   inclist lists <graph> [--k K] [--universe U] [--seed S] [--edges]
//   inclist verify <graph> <coloring> [--lists F]
//   inclist bench <suite>... [--seed S] [--count N] [--universe U] [--cases]
//
// Exit codes: 0 ok, 1 a checked result failed, 2 parse error, 3 precondition
// error, 4 internal failure, 5 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "inclist/bench.hpp"
#include "inclist/bridge.hpp"
#include "inclist/colorist.hpp"
#include "inclist/generate.hpp"
#include "inclist/io.hpp"
#include "inclist/oracle.hpp"

using namespace inclist;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kInternal = 4, kBudget = 5 };

struct Common {
    std::string lists_file;
    int uniform = 0;
    std::string out_file;
    std::uint64_t nodes = SearchBudget{}.node_limit;
    double seconds = SearchBudget{}.time_limit_seconds;

    SearchBudget budget() const { return {nodes, seconds}; }
};

std::vector<Color> first_colors(int k) {
    std::vector<Color> out(k);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

ListAssignment lists_for(const Multigraph& g, const Common& c) {
    if (!c.lists_file.empty()) return load_lists(c.lists_file);
    if (c.uniform <= 0) throw PreconditionError("give --lists or --uniform");
    return ListAssignment::uniform(g, first_colors(c.uniform));
}

// Writes to the -o file, or standard output.
template <class F>
void emit(const std::string& path, F write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    write(out);
}

void report(const std::string& instance, const std::string& mode, bool success, std::size_t colors, double secs,
            const std::string& verification) {
    std::cerr << "instance\tmode\tsuccess\tcolors\tseconds\tverification\n"
              << instance << '\t' << mode << '\t' << (success ? 1 : 0) << '\t' << colors << '\t' << secs << '\t'
              << verification << '\n';
}

double since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int cmd_solve(const std::string& graph_file, const Common& c, const std::vector<int>& pin) {
    Multigraph g = load_graph(graph_file);
    ListAssignment lists = lists_for(g, c);
    if (!lists.covers(g)) throw PreconditionError("lists do not cover every incidence");
    auto start = std::chrono::steady_clock::now();
    IncidenceColoring phi;
    std::string mode = "solve";
    if (!pin.empty()) {
        if (!g.has_edge(pin[1])) throw PreconditionError("pinned edge does not exist");
        PinnedEdge p{pin[1], pin[0], g.other_end(pin[1], pin[0]), pin[2], pin[3]};
        phi = solve_pinned_pendent(g, lists, p);
        mode = "pinned";
    } else {
        phi = solve(g, lists);
    }
    double secs = since(start);
    auto v = verify_coloring(g, &lists, phi);
    report(graph_file, mode, !v, phi.distinct_color_count(), secs, v ? v->message() : "ok");
    if (v) return kInternal;
    emit(c.out_file, [&](std::ostream& out) { write_coloring(out, phi); });
    return kOk;
}

int cmd_oracle(const std::string& graph_file, const std::string& what, const std::vector<int>& args,
               const Common& c) {
    Multigraph g = load_graph(graph_file);
    if (what == "chi") {
        if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
        std::cout << "chi_i\t" << incidence_chromatic_number(g, c.budget()) << '\n';
        return kOk;
    }
    if (what == "check") {
        ListAssignment lists = lists_for(g, c);
        auto r = backtrack(g, lists, nullptr, c.budget());
        if (r.status == SearchStatus::BudgetExhausted) {
            std::cout << "budget-exhausted\t" << r.nodes << '\n';
            return kBudget;
        }
        std::cout << (r.status == SearchStatus::Found ? "colorable" : "none") << '\t' << r.nodes << '\n';
        if (r.status == SearchStatus::Found && !c.out_file.empty())
            emit(c.out_file, [&](std::ostream& out) { write_coloring(out, r.coloring); });
        return kOk;
    }
    if (what == "badlists") {
        if (args.size() != 2) throw PreconditionError("badlists needs K and UNIVERSE");
        auto r = find_bad_lists(g, args[0], args[1], c.budget());
        if (r.status == BadListsStatus::BudgetExhausted) {
            std::cout << "budget-exhausted\t" << r.tried << '\n';
            return kBudget;
        }
        if (r.status == BadListsStatus::NoneFound) {
            std::cout << "none-found\t" << r.tried << '\n';
            return kOk;
        }
        std::cout << "found\t" << r.tried << '\n';
        emit(c.out_file, [&](std::ostream& out) { write_lists(out, r.lists); });
        return kOk;
    }
    throw PreconditionError("oracle mode must be chi, check or badlists");
}

int cmd_strong(const std::string& file, const Common& c) {
    BipartiteText text = load_bipartite(file);
    BipartiteGraph b{text.graph, text.side};
    EdgeLists lists;
    if (!c.lists_file.empty()) {
        lists = load_edge_lists(c.lists_file);
    } else if (c.uniform > 0) {
        for (const Edge& e : b.graph.edges()) lists[e.id] = first_colors(c.uniform);
    } else {
        throw PreconditionError("give --lists or --uniform");
    }
    auto start = std::chrono::steady_clock::now();
    EdgeColoring psi = strong_list_color(b, lists);
    double secs = since(start);
    std::string why = check_strong_coloring(b.graph, &lists, psi);
    std::set<Color> used;
    for (const auto& [e, col] : psi) used.insert(col);
    report(file, "strong", why.empty(), used.size(), secs, why.empty() ? "ok" : why);
    if (!why.empty()) return kInternal;
    emit(c.out_file, [&](std::ostream& out) { write_edge_coloring(out, psi); });
    return kOk;
}

int cmd_gen(const std::string& kind, const std::string& arg, std::uint64_t seed, const std::string& out_file) {
    Rng rng(seed);
    auto number = [&]() {
        try {
            std::size_t used = 0;
            int v = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return v;
        } catch (const std::logic_error&) {
            throw PreconditionError("'" + kind + "' needs an integer argument");
        }
    };
    if (kind == "bipartite23") {
        BipartiteGraph b = random_bipartite23(number(), rng);
        emit(out_file, [&](std::ostream& out) { write_bipartite(out, b.graph, b.side); });
        return kOk;
    }
    Multigraph g;
    if (kind == "named") g = named_graph(arg);
    else if (kind == "cubic") g = random_cubic(number(), rng);
    else if (kind == "cubic-multi") g = random_cubic_multigraph(number(), rng);
    else if (kind == "subcubic-multi") g = random_subcubic_multigraph(number(), 0.1, rng);
    else if (kind == "bridged") g = random_bridged_cubic(number(), rng);
    else if (kind == "semicubic") g = random_semicubic(number(), rng);
    else if (kind == "cycle") g = make_cycle(number());
    else throw PreconditionError("unknown kind '" + kind + "'");
    emit(out_file, [&](std::ostream& out) { write_graph(out, g); });
    return kOk;
}

int cmd_lists(const std::string& file, int k, int universe, std::uint64_t seed, bool edges, bool bipartite,
              const std::string& out_file) {
    Rng rng(seed);
    Multigraph g = bipartite ? load_bipartite(file).graph : load_graph(file);
    if (edges) {
        EdgeLists l = random_edge_lists(g, k, universe, rng);
        emit(out_file, [&](std::ostream& out) { write_edge_lists(out, l); });
    } else {
        ListAssignment l = random_lists(g, k, universe, rng);
        emit(out_file, [&](std::ostream& out) { write_lists(out, l); });
    }
    return kOk;
}

int cmd_verify(const std::string& graph_file, const std::string& coloring_file, const std::string& lists_file) {
    Multigraph g = load_graph(graph_file);
    IncidenceColoring phi = load_coloring(coloring_file);
    std::optional<ListAssignment> lists;
    if (!lists_file.empty()) lists = load_lists(lists_file);
    auto v = verify_coloring(g, lists ? &*lists : nullptr, phi);
    std::cout << (v ? v->message() : "ok") << '\n';
    return v ? kFailed : kOk;
}

int cmd_bench(const std::vector<std::string>& suites, const SuiteOptions& o, bool cases) {
    std::vector<SuiteResult> results;
    for (const std::string& s : suites) {
        results.push_back(run_suite(s, o));
        if (cases) write_case_table(std::cout, results.back());
    }
    write_summary_table(std::cout, results);
    for (const SuiteResult& r : results)
        if (!r.ok()) return kFailed;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Incidence list coloring of subcubic multigraphs"};
    app.require_subcommand(1);
    Common common;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--nodes", common.nodes, "Search node limit");
        sub->add_option("--seconds", common.seconds, "Search time limit");
    };
    auto add_lists = [&](CLI::App* sub) {
        auto* l = sub->add_option("--lists", common.lists_file, "Lists file")->check(CLI::ExistingFile);
        sub->add_option("--uniform", common.uniform, "Use {0..K-1} on every incidence")->excludes(l);
    };

    std::string graph_file;
    std::vector<int> pin;
    auto* solve_cmd = app.add_subcommand("solve", "Color a graph from lists of size at least 6");
    solve_cmd->add_option("graph", graph_file, "Graph file")->required();
    add_lists(solve_cmd);
    solve_cmd->add_option("--pin", pin, "U EID CU CV: prescribe a pendent edge")->expected(4);
    solve_cmd->add_option("-o,--out", common.out_file, "Coloring output file");

    std::string oracle_mode;
    std::vector<int> oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact search");
    oracle_cmd->add_option("graph", graph_file, "Graph file")->required();
    oracle_cmd->add_option("mode", oracle_mode, "chi | check | badlists")->required();
    oracle_cmd->add_option("args", oracle_args, "badlists: K UNIVERSE");
    add_lists(oracle_cmd);
    add_budget(oracle_cmd);
    oracle_cmd->add_option("-o,--out", common.out_file, "Output file for colorings or lists");

    std::string bip_file;
    auto* strong_cmd = app.add_subcommand("strong", "Strong list edge coloring of a (2,3)-bipartite graph");
    strong_cmd->add_option("bipartite", bip_file, "Bipartite file")->required();
    add_lists(strong_cmd);
    strong_cmd->add_option("-o,--out", common.out_file, "Strong coloring output file");

    std::string kind, kind_arg;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("kind", kind,
                        "cubic | cubic-multi | subcubic-multi | bridged | semicubic | cycle | named | bipartite23")
        ->required();
    gen_cmd->add_option("arg", kind_arg, "Size, chain length, or name");
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_option("-o,--out", common.out_file, "Output file");

    int k = 6, universe = 12;
    bool edge_lists = false, bipartite_input = false;
    auto* lists_cmd = app.add_subcommand("lists", "Random lists for a graph");
    lists_cmd->add_option("graph", graph_file, "Graph file")->required();
    lists_cmd->add_option("--k", k, "List size");
    lists_cmd->add_option("--universe", universe, "Colors are drawn from [0, universe)");
    lists_cmd->add_option("--seed", seed, "Random seed");
    lists_cmd->add_flag("--edges", edge_lists, "Edge lists (le records) instead of incidence lists");
    lists_cmd->add_flag("--bipartite", bipartite_input, "Input is a bipartite file");
    lists_cmd->add_option("-o,--out", common.out_file, "Output file");

    std::string coloring_file;
    auto* verify_cmd = app.add_subcommand("verify", "Check an incidence coloring file");
    verify_cmd->add_option("graph", graph_file, "Graph file")->required();
    verify_cmd->add_option("coloring", coloring_file, "Coloring file")->required();
    verify_cmd->add_option("--lists", common.lists_file, "Lists file")->check(CLI::ExistingFile);

    std::vector<std::string> suites;
    SuiteOptions bench_opts;
    bool show_cases = false;
    auto* bench_cmd = app.add_subcommand("bench", "Run seeded suites and print TSV");
    bench_cmd->add_option("suite", suites, "theorem13 | freechoice | equivalence | cycles | strong | petersen")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    bench_cmd->add_option("--seed", bench_opts.seed, "Base seed");
    bench_cmd->add_option("--count", bench_opts.count, "Instances per suite");
    bench_cmd->add_option("--universe", bench_opts.universe, "Color universe for random lists");
    bench_cmd->add_flag("--cases", show_cases, "Also print one row per case");
    add_budget(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*solve_cmd) return cmd_solve(graph_file, common, pin);
        if (*oracle_cmd) return cmd_oracle(graph_file, oracle_mode, oracle_args, common);
        if (*strong_cmd) return cmd_strong(bip_file, common);
        if (*gen_cmd) return cmd_gen(kind, kind_arg, seed, common.out_file);
        if (*lists_cmd) return cmd_lists(graph_file, k, universe, seed, edge_lists, bipartite_input, common.out_file);
        if (*verify_cmd) return cmd_verify(graph_file, coloring_file, common.lists_file);
        if (*bench_cmd) {
            bench_opts.budget = common.budget();
            return cmd_bench(suites, bench_opts, show_cases);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const GraphError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const InternalError& e) {
        std::cerr << "internal failure: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}
