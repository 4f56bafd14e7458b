#include <set>

#include "doctest.h"
#include "inclist/colorist.hpp"
#include "inclist/generate.hpp"
#include "inclist/oracle.hpp"
#include "inclist/structure.hpp"
#include "support.hpp"

using namespace inclist;

namespace {

std::vector<Color> range(int lo, int hi) {
    std::vector<Color> out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

void check_solves(const Multigraph& g, const ListAssignment& l) {
    IncidenceColoring phi = solve(g, l);
    auto v = verify_coloring(g, &l, phi);
    CHECK_MESSAGE(!v, (v ? v->message() : ""));
}

int pendent_count(const Multigraph& g) {
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v) n += g.degree(v) == 1;
    return n;
}

}  // namespace

TEST_SUITE("colorist") {
    TEST_CASE("triangle multigraph uses six distinct colors") {
        Multigraph g = named_graph("tri-multi");
        ListAssignment l = ListAssignment::uniform(g, range(1, 6));
        IncidenceColoring phi = solve(g, l);
        CHECK_FALSE(verify_coloring(g, &l, phi));
        CHECK(phi.distinct_color_count() == 6);
    }

    TEST_CASE("K4 coloring uses at least the chromatic number") {
        Multigraph g = named_graph("k4");
        ListAssignment l = ListAssignment::uniform(g, range(1, 6));
        IncidenceColoring phi = solve(g, l);
        CHECK_FALSE(verify_coloring(g, &l, phi));
        CHECK(phi.distinct_color_count() >= static_cast<std::size_t>(incidence_chromatic_number(g)));
        CHECK(incidence_chromatic_number(g) == 4);
        CHECK(ref::k_colorable(g, 4));
        CHECK_FALSE(ref::k_colorable(g, 3));
    }

    TEST_CASE("preconditions") {
        Multigraph g = named_graph("tri-multi");
        CHECK_THROWS_AS(solve(g, ListAssignment::uniform(g, range(1, 5))), PreconditionError);
        Multigraph quartic = ref::graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        CHECK_THROWS_AS(solve(quartic, ListAssignment::uniform(quartic, range(0, 5))), PreconditionError);
        ListAssignment partial;
        partial.set({0, 0}, range(0, 5));
        CHECK_THROWS_AS(solve(named_graph("k4"), partial), PreconditionError);
    }

    TEST_CASE("small and degenerate graphs") {
        check_solves(Multigraph(3, {}), ListAssignment{});
        for (int n = 2; n <= 9; ++n) {
            Multigraph c = make_cycle(n);
            check_solves(c, ListAssignment::uniform(c, range(0, 5)));
        }
        Multigraph two = ref::graph(2, {{0, 1}, {0, 1}});
        check_solves(two, ListAssignment::uniform(two, range(0, 5)));
        check_solves(make_star(3), ListAssignment::uniform(make_star(3), range(0, 5)));
    }

    TEST_CASE("random subcubic multigraphs with random lists") {
        Rng rng(42);
        for (int t = 0; t < 150; ++t) {
            Multigraph g;
            switch (t % 4) {
                case 0: g = random_cubic(4 + 2 * (t % 12), rng); break;
                case 1: g = random_cubic_multigraph(4 + 2 * (t % 12), rng); break;
                case 2: g = random_bridged_cubic(1 + t % 3, rng); break;
                default: g = random_subcubic_multigraph(2 + t % 30, 0.2, rng); break;
            }
            check_solves(g, random_lists(g, 6, t % 2 ? 12 : 7, rng));
        }
    }

    TEST_CASE("lists larger than six are accepted") {
        Rng rng(1);
        Multigraph g = named_graph("petersen");
        check_solves(g, random_lists(g, 9, 15, rng));
    }

    TEST_CASE("degree-at-most-two extension") {
        Rng rng(9);
        for (int t = 0; t < 60; ++t) {
            Multigraph g = random_subcubic_multigraph(4 + t % 10, 0.3, rng);
            ListAssignment l = random_lists(g, 6, 9, rng);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) == 0 || g.degree(v) > 2) continue;
                IncidenceColoring sub = solve(g, l);
                for (EdgeId e : g.incident_edges(v)) {
                    sub.erase({v, e});
                    sub.erase({g.other_end(e, v), e});
                }
                IncidenceColoring full = reduce_degree_le2(g, l, v, sub);
                CHECK_FALSE(verify_coloring(g, &l, full));
                for (const auto& [inc, c] : sub) CHECK(full.at(inc) == c);
                break;
            }
        }
        // v with a parallel pair to the same neighbour
        Multigraph g = ref::graph(3, {{0, 1}, {0, 1}, {1, 2}});
        ListAssignment l = ListAssignment::uniform(g, range(0, 5));
        IncidenceColoring sub;
        sub.set({1, 2}, 0);
        sub.set({2, 2}, 1);
        CHECK_FALSE(verify_coloring(g, &l, reduce_degree_le2(g, l, 0, sub)));
    }

    TEST_CASE("parallel pair extension from arbitrary valid colorings") {
        // u=0, v=1 joined twice; u-2, v-3; a 4-cycle-ish tail so the
        // outside has real constraints.
        Multigraph g = ref::graph(6, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {2, 5}, {3, 4}});
        Rng rng(17);
        int runs = 0;
        for (int t = 0; t < 200; ++t) {
            ListAssignment l = random_lists(g, 6, 8 + t % 6, rng);
            // A valid coloring of the rest from the exact oracle, so the
            // start is not the solver's own choice.
            SearchResult r = backtrack(g, l);
            REQUIRE(r.status == SearchStatus::Found);
            IncidenceColoring sub;
            for (const auto& [inc, c] : r.coloring)
                if (inc.edge >= 4) sub.set(inc, c);
            IncidenceColoring full = reduce_parallel_pair(g, l, 0, 1, sub);
            CHECK_FALSE(verify_coloring(g, &l, full));
            for (const auto& [inc, c] : sub) CHECK(full.at(inc) == c);
            ++runs;
        }
        CHECK(runs == 200);
    }

    TEST_CASE("greedy edge extension uses the sixth color") {
        // e = 0 joins u=0 and v=1; u has edges to 2, 3; v to 4 and 5.
        Multigraph g = ref::graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        ListAssignment l = ListAssignment::uniform(g, range(0, 5));
        IncidenceColoring phi;
        phi.set({0, 1}, 0);
        phi.set({2, 1}, 1);
        phi.set({0, 2}, 2);
        phi.set({3, 2}, 3);
        phi.set({1, 3}, 4);
        greedy_extend_edge(g, l, phi, 0);
        CHECK(phi.at({0, 0}) == 5);
        IncidenceColoring empty;
        greedy_extend_edge(g, l, empty, 0);
        CHECK(empty.at({0, 0}) == 0);
        CHECK(empty.at({1, 0}) == 1);

        // No uncolored incident edge.
        Multigraph p = ref::graph(3, {{0, 1}, {1, 2}});
        ListAssignment lp = ListAssignment::uniform(p, range(0, 5));
        IncidenceColoring cp;
        cp.set({1, 1}, 0);
        CHECK_THROWS_AS(greedy_extend_edge(p, lp, cp, 0), PreconditionError);
    }

    TEST_CASE("five-color selection on identical lists") {
        SelectionLists s{range(1, 6), range(1, 6), range(1, 6), range(1, 6), range(1, 6), range(1, 6), range(1, 6)};
        FiveColorSelection f = select_five_colors(s);
        CHECK(satisfies_selection(s, f));
        CHECK(f.beta == 1);
        CHECK(f.gamma == 1);
        CHECK(f.eta == 1);
        CHECK(f.alpha == f.delta);
    }

    TEST_CASE("five-color selection with disjoint B, C, E") {
        SelectionLists s{range(1, 6), range(1, 6), range(7, 12), range(1, 6), range(13, 18), range(1, 6), range(1, 6)};
        FiveColorSelection f = select_five_colors(s);
        CHECK(satisfies_selection(s, f));
        int hits = 0;
        for (Color c : {f.beta, f.gamma, f.eta}) hits += std::count(s.l_v1.begin(), s.l_v1.end(), c) > 0;
        CHECK(hits <= 1);
    }

    TEST_CASE("five-color selection with A' and D' disjoint") {
        SelectionLists s{range(1, 6), range(20, 25), range(20, 25), range(7, 12), range(20, 25), range(1, 6),
                         range(20, 25)};
        FiveColorSelection f = select_five_colors(s);
        CHECK(satisfies_selection(s, f));
    }

    TEST_CASE("pinned pendent edges: base cases") {
        Multigraph k2 = make_star(1);
        ListAssignment l = ListAssignment::uniform(k2, range(0, 5));
        for (Color a = 0; a < 6; ++a)
            for (Color b = 0; b < 6; ++b) {
                if (a == b) continue;
                IncidenceColoring phi = solve_pinned_pendent(k2, l, {0, 0, 1, a, b});
                CHECK(phi.at({0, 0}) == a);
                CHECK(phi.at({1, 0}) == b);
            }
        Multigraph k13 = make_star(3);
        Rng rng(3);
        for (int t = 0; t < 20; ++t) {
            ListAssignment lr = random_lists(k13, 6, 9, rng);
            for (EdgeId e = 0; e < 3; ++e) {
                const Edge& x = k13.edge(e);
                for (Color a : lr.at({x.u, e}))
                    for (Color b : lr.at({x.v, e})) {
                        if (a == b) continue;
                        IncidenceColoring phi = solve_pinned_pendent(k13, lr, {e, x.u, x.v, a, b});
                        CHECK_FALSE(verify_coloring(k13, &lr, phi));
                        CHECK(phi.at({x.u, e}) == a);
                    }
            }
        }
    }

    TEST_CASE("pinned pendent edges: every pin on generated instances") {
        Rng rng(77);
        SolveStats stats;
        for (int t = 0; t < 25; ++t) {
            Multigraph g = random_semicubic(4 + 2 * (t % 5), rng);
            ListAssignment l = random_lists(g, 6, 10, rng);
            for (const Edge& e : g.edges()) {
                if (g.degree(e.u) != 1 && g.degree(e.v) != 1) continue;
                for (Color a : l.at({e.u, e.id}))
                    for (Color b : l.at({e.v, e.id})) {
                        if (a == b) continue;
                        IncidenceColoring phi = solve_pinned_pendent(g, l, {e.id, e.u, e.v, a, b}, &stats);
                        REQUIRE_FALSE(verify_coloring(g, &l, phi));
                        REQUIRE(phi.at({e.u, e.id}) == a);
                        REQUIRE(phi.at({e.v, e.id}) == b);
                    }
                break;
            }
        }
        CHECK(stats.deferred_violations == 0);
        CHECK(stats.deferred_max_forbidden <= 5);
    }

    TEST_CASE("pin rejects unsuitable input") {
        Multigraph k4 = named_graph("k4");
        ListAssignment l = ListAssignment::uniform(k4, range(0, 5));
        CHECK_THROWS_AS(solve_pinned_pendent(k4, l, {0, k4.edge(0).u, k4.edge(0).v, 0, 1}), PreconditionError);
        Multigraph k2 = make_star(1);
        ListAssignment l2 = ListAssignment::uniform(k2, range(0, 5));
        CHECK_THROWS_AS(solve_pinned_pendent(k2, l2, {0, 0, 1, 2, 2}), PreconditionError);
        CHECK_THROWS_AS(solve_pinned_pendent(k2, l2, {0, 0, 1, 2, 9}), PreconditionError);
    }

    TEST_CASE("split on cut edges") {
        Rng rng(5);
        for (int t = 0; t < 20; ++t) {
            Multigraph g = random_bridged_cubic(1 + t % 3, rng);
            ComponentPlan plan = split_on_cut_edges(g);
            CHECK(plan.cut_edges == ref::bridges(g));
            std::set<VertexId> seen;
            for (const auto& c : plan.components)
                for (VertexId v : c) CHECK(seen.insert(v).second);
            CHECK(static_cast<int>(seen.size()) == g.vertex_count());
            CHECK(plan.components.size() == plan.cut_edges.size() + 1);
            CHECK(plan.entry_edge[0] == -1);
            for (std::size_t i = 1; i < plan.components.size(); ++i) {
                CHECK(plan.entry_from[i] >= 0);
                CHECK(plan.entry_from[i] < static_cast<int>(i));
                CHECK(plan.cut_edges.contains(plan.entry_edge[i]));
            }
        }
        CHECK_THROWS_AS(split_on_cut_edges(named_graph("petersen")), PreconditionError);
    }

    TEST_CASE("gadget attachment") {
        Rng rng(19);
        for (int t = 0; t < 40; ++t) {
            Multigraph g = random_semicubic(4 + 2 * (t % 5), rng);
            int p = pendent_count(g);
            std::optional<EdgeId> keep;
            for (const Edge& e : g.edges())
                if (g.degree(e.u) == 1 || g.degree(e.v) == 1) keep = e.id;
            GadgetAttachment a = attach_gadgets(g, keep);
            CHECK(a.gadgets.size() == static_cast<std::size_t>(p / 2));
            CHECK(pendent_count(a.graph) == p % 2);
            CHECK(a.graph.is_simple());
            CHECK(a.graph.max_degree() <= 3);
            if (p % 2) CHECK(a.surviving_pendent == keep);
            for (const Gadget& gd : a.gadgets) {
                // x1..x6 is a 6-cycle with chords x2x4 and x3x5.
                for (int i = 0; i < 6; ++i) CHECK(a.graph.are_neighbors(gd.x[i], gd.x[(i + 1) % 6]));
                CHECK(a.graph.are_neighbors(gd.x[1], gd.x[3]));
                CHECK(a.graph.are_neighbors(gd.x[2], gd.x[4]));
            }
        }
        Multigraph k4 = named_graph("k4");
        CHECK_THROWS_AS(attach_gadgets(k4, std::nullopt), PreconditionError);
    }

    TEST_CASE("stats show every stage is exercised") {
        Rng rng(23);
        SolveStats s;
        for (int t = 0; t < 100; ++t) {
            Multigraph g = t % 2 ? random_cubic_multigraph(10 + 2 * (t % 10), rng) : random_bridged_cubic(1, rng);
            ListAssignment l = random_lists(g, 6, 12, rng);
            CHECK_FALSE(verify_coloring(g, &l, solve(g, l, &s)));
        }
        CHECK(s.cycle_tree_runs > 0);
        CHECK(s.bridged_components > 0);
        CHECK(s.pinned_pendent_runs > 0);
        CHECK(s.parallel_pair_extensions > 0);
        CHECK(s.deferred_checks > 0);
        CHECK(s.deferred_violations == 0);
    }
}
