#include "doctest.h"
#include "inclist/generate.hpp"
#include "inclist/structure.hpp"
#include "support.hpp"

using namespace inclist;

TEST_SUITE("structure") {
    TEST_CASE("cut edges") {
        CHECK(cut_edges(ref::graph(4, {{0, 1}, {1, 2}, {2, 3}})).size() == 3);
        CHECK(cut_edges(make_cycle(7)).empty());
        Multigraph two = ref::graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
        CHECK(cut_edges(two) == std::set<EdgeId>{6});
        // A parallel pair is never a bridge.
        CHECK(cut_edges(ref::graph(3, {{0, 1}, {0, 1}, {1, 2}})) == std::set<EdgeId>{2});
    }

    TEST_CASE("cut edges and 2-connectivity agree with deletion tests") {
        Rng rng(21);
        for (int t = 0; t < 60; ++t) {
            Multigraph g = t % 3 == 0 ? random_bridged_cubic(1 + t % 2, rng)
                                      : random_subcubic_multigraph(3 + t % 12, 0.15, rng);
            CHECK(cut_edges(g) == ref::bridges(g));
            CHECK(is_two_connected(g) == ref::two_connected(g));
        }
    }

    TEST_CASE("2-connectivity examples") {
        CHECK(is_two_connected(named_graph("k4")));
        CHECK_FALSE(is_two_connected(ref::graph(3, {{0, 1}, {1, 2}})));
        CHECK(is_two_connected(named_graph("petersen")));
        CHECK(ref::two_connected(named_graph("petersen")));
    }

    TEST_CASE("maximum matching") {
        CHECK(maximum_matching(named_graph("k4")).is_perfect(named_graph("k4")));
        Matching p = maximum_matching(named_graph("petersen"));
        CHECK(p.size() == 5);
        CHECK(ref::max_matching_size(named_graph("petersen")) == 5);
        Matching star = maximum_matching(make_star(3));
        CHECK(star.size() == 1);
        CHECK_FALSE(star.is_perfect(make_star(3)));

        Rng rng(4);
        for (int t = 0; t < 60; ++t) {
            Multigraph g = random_subcubic_multigraph(2 + t % 14, 0.25, rng);
            Matching m = maximum_matching(g);
            CHECK(is_matching(g, m.edges));
            CHECK(static_cast<int>(m.size()) == ref::max_matching_size(g));
        }
    }

    TEST_CASE("one-two decomposition") {
        for (const char* name : {"k4", "prism", "petersen", "k33"}) {
            Multigraph g = named_graph(name);
            OneTwoDecomposition d = one_two_decomposition(g);
            CHECK_MESSAGE(check_decomposition(g, d).empty(), name);
            CHECK(d.e1.size() * 2 == static_cast<std::size_t>(g.vertex_count()));
            CHECK(d.e1.size() + d.e2.size() == static_cast<std::size_t>(g.edge_count()));
        }
        // Prism whose rungs are the matching: two triangles remain.
        Multigraph prism = named_graph("prism");
        std::vector<EdgeId> rungs;
        for (const Edge& e : prism.edges()) {
            bool in_triangle = false;
            for (EdgeId f : prism.incident_edges(e.u))
                for (EdgeId h : prism.incident_edges(e.v))
                    if (f != e.id && h != e.id && prism.other_end(f, e.u) == prism.other_end(h, e.v))
                        in_triangle = true;
            if (!in_triangle) rungs.push_back(e.id);
        }
        REQUIRE(rungs.size() == 3);
        OneTwoDecomposition d = decomposition_from_matching(prism, rungs);
        CycleGraph cg = cycle_graph(prism, d);
        CHECK(cg.size() == 2);
        CHECK(cg.cycles[0].size() == 3);
        CHECK(cg.connecting(0, 1).size() == 3);

        CycleTree t = dfs_cycle_tree(cg, 0);
        CHECK(t.m() == 1);
        EdgeId chosen = t.cut_edge[1];
        CycleTree t2 = dfs_cycle_tree(cg, 0, std::nullopt, chosen);
        CHECK(t2.cut_edge[1] != chosen);
        CHECK(check_cycle_tree(prism, d, cg, t2).empty());
    }

    TEST_CASE("decomposition rejects bad input") {
        CHECK_THROWS_AS(one_two_decomposition(make_cycle(5)), PreconditionError);
        Rng rng(2);
        CHECK_THROWS_AS(one_two_decomposition(random_bridged_cubic(1, rng)), PreconditionError);
    }

    TEST_CASE("Hamiltonian decomposition gives one node") {
        Multigraph k4 = named_graph("k4");
        OneTwoDecomposition d = one_two_decomposition(k4);
        CycleGraph cg = cycle_graph(k4, d);
        CHECK(cg.size() == 1);
        CHECK(cg.neighbors(0).empty());
        CHECK(dfs_cycle_tree(cg, 0).m() == 0);
    }

    TEST_CASE("decompositions and cycle trees on random cubic graphs") {
        Rng rng(8);
        int checked = 0;
        for (int t = 0; t < 80; ++t) {
            Multigraph g = random_cubic(8 + 2 * (t % 10), rng);
            if (!is_two_connected(g)) continue;
            ++checked;
            OneTwoDecomposition d = one_two_decomposition(g);
            REQUIRE(check_decomposition(g, d).empty());
            CycleGraph cg = cycle_graph(g, d);
            for (int root = 0; root < cg.size(); ++root) {
                CycleTree tr = dfs_cycle_tree(cg, root);
                CHECK(tr.order.size() == cg.cycles.size());
                CHECK(check_cycle_tree(g, d, cg, tr).empty());
            }
        }
        CHECK(checked > 40);
    }

    TEST_CASE("triples on a unique cycle satisfy their conditions") {
        Rng rng(13);
        for (int t = 0; t < 50; ++t) {
            Multigraph g = random_cubic(8 + 2 * (t % 6), rng);
            if (!is_two_connected(g)) continue;
            OneTwoDecomposition d = one_two_decomposition(g);
            CycleGraph cg = cycle_graph(g, d);
            CycleTree tr = dfs_cycle_tree(cg, 0);
            for (int c = 0; c < cg.size(); ++c) {
                if (tr.m() > 0 && !tr.is_pendent(c)) continue;
                Triple x = find_triple(g, d, cg, tr, c, std::nullopt, PinCase::None);
                CHECK(check_triple(g, d, cg.cycles[c], x, std::nullopt).empty());
                if (tr.is_pendent(c)) CHECK(x.v2 == tr.attach_vertex[c]);
            }
        }
    }
}
