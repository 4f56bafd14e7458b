#include "inclist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <set>

#include "inclist/bridge.hpp"
#include "inclist/generate.hpp"
#include "inclist/structure.hpp"

namespace inclist {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t case_seed(std::uint64_t seed, int i) { return seed * 1'000'003ULL + static_cast<std::uint64_t>(i); }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool has_parallel(const Multigraph& g) { return !g.is_simple(); }

// Runs `body` with timing and turns exceptions into failed reports.
CaseReport timed(const std::string& instance, const std::string& mode, std::uint64_t seed,
                 const std::function<void(CaseReport&)>& body) {
    CaseReport r;
    r.instance = instance;
    r.mode = mode;
    r.seed = seed;
    auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.success = false;
        r.verification = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

// Solve and check with the independent verifier.
void solve_and_verify(const Multigraph& g, const ListAssignment& lists, CaseReport& r, SolveStats& stats) {
    IncidenceColoring phi = solve(g, lists, &stats);
    auto v = verify_coloring(g, &lists, phi);
    r.success = !v;
    r.verification = v ? v->message() : "ok";
    r.colors_used = static_cast<int>(phi.distinct_color_count());
}

SuiteResult subcubic_suite(const SuiteOptions& o) {
    SuiteResult out;
    const int count = o.count > 0 ? o.count : 500;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = case_seed(o.seed, i);
        Rng rng(seed);
        Multigraph g;
        std::string kind;
        switch (i % 5) {
            case 0: g = random_cubic(2 * pick(rng, 2, 20), rng); kind = "cubic"; break;
            case 1: g = random_cubic_multigraph(2 * pick(rng, 2, 20), rng); kind = "cubic-multi"; break;
            case 2: g = random_subcubic_multigraph(pick(rng, 4, 40), 0.1, rng); kind = "subcubic-multi"; break;
            case 3: g = random_bridged_cubic(1, rng); kind = "bridged"; break;
            default: g = random_subcubic_multigraph(pick(rng, 4, 40), 0.3, rng); kind = "sparse-multi"; break;
        }
        ListAssignment lists = random_lists(g, 6, o.universe, rng);
        auto r = timed("t13-" + std::to_string(i), "solve", seed,
                       [&](CaseReport& c) { solve_and_verify(g, lists, c, out.stats); });
        r.has_parallel_edges = has_parallel(g);
        r.vertices = g.vertex_count();
        r.connected = is_connected(g);
        r.detail = kind + " n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
        out.cases.push_back(std::move(r));
    }
    return out;
}

SuiteResult petersen(const SuiteOptions& o) {
    SuiteResult out;
    const int count = o.count > 0 ? o.count : 100;
    const Multigraph g = named_graph("petersen");
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = case_seed(o.seed, i);
        Rng rng(seed);
        ListAssignment lists = random_lists(g, 6, o.universe, rng);
        out.cases.push_back(timed("petersen-" + std::to_string(i), "solve", seed,
                                  [&](CaseReport& c) { solve_and_verify(g, lists, c, out.stats); }));
    }
    return out;
}

SuiteResult freechoice(const SuiteOptions& o) {
    SuiteResult out;
    const int count = o.count > 0 ? o.count : 50;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = case_seed(o.seed, i);
        Rng rng(seed);
        Multigraph g = i == 0 ? make_star(3) : i == 1 ? make_star(1) : random_semicubic(2 * pick(rng, 2, 6), rng);
        ListAssignment lists = random_lists(g, 6, o.universe, rng);
        std::vector<EdgeId> pendent;
        for (const Edge& e : g.edges())
            if (g.degree(e.u) == 1 || g.degree(e.v) == 1) pendent.push_back(e.id);
        const Edge e = g.edge(pendent[pick(rng, 0, static_cast<int>(pendent.size()) - 1)]);

        auto r = timed("free-" + std::to_string(i), "pinned", seed, [&](CaseReport& c) {
            int pins = 0, good = 0;
            std::string first_bad;
            for (Color a : lists.at({e.u, e.id}))
                for (Color b : lists.at({e.v, e.id})) {
                    if (a == b) continue;
                    ++pins;
                    try {
                        IncidenceColoring phi = solve_pinned_pendent(g, lists, {e.id, e.u, e.v, a, b}, &out.stats);
                        auto v = verify_coloring(g, &lists, phi);
                        if (!v && phi.at({e.u, e.id}) == a && phi.at({e.v, e.id}) == b) ++good;
                        else if (first_bad.empty()) first_bad = v ? v->message() : "pin not honored";
                    } catch (const std::exception& ex) {
                        if (first_bad.empty()) first_bad = ex.what();
                    }
                }
            c.success = pins == good;
            c.verification = c.success ? "ok" : first_bad;
            c.detail = "n=" + std::to_string(g.vertex_count()) + " edge=" + std::to_string(e.id) +
                       " pins=" + std::to_string(pins) + " extended=" + std::to_string(good);
        });
        out.cases.push_back(std::move(r));
    }
    return out;
}

SuiteResult equivalence(const SuiteOptions& o) {
    SuiteResult out;
    const int count = o.count > 0 ? o.count : 50;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = case_seed(o.seed, i);
        Rng rng(seed);
        Multigraph g = random_subcubic_multigraph(pick(rng, 2, 8), 0.2, rng);
        auto r = timed("equiv-" + std::to_string(i), "oracle", seed, [&](CaseReport& c) {
            int chi = incidence_chromatic_number(g, o.budget);
            int chis = strong_chromatic_index(subdivide(g).graph, o.budget);
            c.success = chi == chis;
            c.colors_used = chi;
            c.verification = c.success ? "ok" : "mismatch";
            c.detail = "n=" + std::to_string(g.vertex_count()) + " chi_i=" + std::to_string(chi) +
                       " chi_s(S)=" + std::to_string(chis);
        });
        r.has_parallel_edges = has_parallel(g);
        out.cases.push_back(std::move(r));
    }
    return out;
}

SuiteResult cycles(const SuiteOptions& o) {
    SuiteResult out;
    for (int n = 3; n <= 12; ++n) {
        std::uint64_t seed = case_seed(o.seed, n);
        auto r = timed("C" + std::to_string(n), "oracle", seed, [&](CaseReport& c) {
            Multigraph g = make_cycle(n);
            int chi = incidence_chromatic_number(g, o.budget);
            int expected = n % 3 == 0 ? 3 : 4;
            auto bad = find_bad_lists(g, 4, 8, o.budget, 200, seed);
            const char* status = bad.status == BadListsStatus::NoneFound ? "none-found"
                                 : bad.status == BadListsStatus::Found ? "found"
                                                                       : "budget-exhausted";
            c.success = chi == expected && bad.status == BadListsStatus::NoneFound;
            c.colors_used = chi;
            c.verification = c.success ? "ok" : "unexpected";
            c.detail = "chi_i=" + std::to_string(chi) + " expected=" + std::to_string(expected) +
                       " badlists4=" + status + " tried=" + std::to_string(bad.tried);
        });
        out.cases.push_back(std::move(r));
    }
    return out;
}

SuiteResult strong(const SuiteOptions& o) {
    SuiteResult out;
    const int count = o.count > 0 ? o.count : 100;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = case_seed(o.seed, i);
        Rng rng(seed);
        BipartiteGraph b = random_bipartite23(pick(rng, 3, 20), rng);
        EdgeLists lists = random_edge_lists(b.graph, 6, o.universe, rng);
        auto r = timed("strong-" + std::to_string(i), "strong", seed, [&](CaseReport& c) {
            EdgeColoring psi = strong_list_color(b, lists);
            std::string why = check_strong_coloring(b.graph, &lists, psi);
            c.success = why.empty();
            c.verification = c.success ? "ok" : why;
            std::set<Color> used;
            for (const auto& [e, col] : psi) used.insert(col);
            c.colors_used = static_cast<int>(used.size());
            c.detail = "vertices=" + std::to_string(b.graph.vertex_count()) +
                       " edges=" + std::to_string(b.graph.edge_count());
        });
        out.cases.push_back(std::move(r));
    }
    return out;
}

}  // namespace

int SuiteResult::successes() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) { return c.success; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem13", "freechoice", "equivalence", "cycles", "strong",
                                                "petersen"};
    return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
    auto start = Clock::now();
    SuiteResult r;
    if (name == "theorem13") r = subcubic_suite(options);
    else if (name == "freechoice") r = freechoice(options);
    else if (name == "equivalence") r = equivalence(options);
    else if (name == "cycles") r = cycles(options);
    else if (name == "strong") r = strong(options);
    else if (name == "petersen") r = petersen(options);
    else throw PreconditionError("unknown suite '" + std::string(name) + "'");
    r.suite = std::string(name);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

void write_case_table(std::ostream& out, const SuiteResult& r) {
    out << "instance\tmode\tsuccess\tcolors\tseconds\tverification\tseed\tdetail\n";
    for (const CaseReport& c : r.cases)
        out << c.instance << '\t' << c.mode << '\t' << (c.success ? 1 : 0) << '\t' << c.colors_used << '\t'
            << c.seconds << '\t' << c.verification << '\t' << c.seed << '\t' << c.detail << '\n';
}

void write_summary_table(std::ostream& out, const std::vector<SuiteResult>& results) {
    out << "suite\tinstances\tsuccesses\tmean_seconds\tmax_seconds\n";
    for (const SuiteResult& r : results) {
        double total = 0, worst = 0;
        for (const CaseReport& c : r.cases) {
            total += c.seconds;
            worst = std::max(worst, c.seconds);
        }
        double mean = r.cases.empty() ? 0 : total / static_cast<double>(r.cases.size());
        out << r.suite << '\t' << r.cases.size() << '\t' << r.successes() << '\t' << mean << '\t' << worst << '\n';
    }
}

}  // namespace inclist
