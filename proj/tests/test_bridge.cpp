#include <sstream>

#include "doctest.h"
#include "inclist/bridge.hpp"
#include "inclist/colorist.hpp"
#include "inclist/generate.hpp"
#include "inclist/io.hpp"
#include "inclist/oracle.hpp"
#include "support.hpp"

using namespace inclist;

TEST_SUITE("bridge") {
    TEST_CASE("subdivision sizes") {
        SubdividedGraph t = subdivide(named_graph("tri-multi"));
        CHECK(t.graph.vertex_count() == 5);
        CHECK(t.graph.edge_count() == 6);
        CHECK(t.graph.is_simple());
        SubdividedGraph k = subdivide(named_graph("k4"));
        CHECK(k.graph.vertex_count() == 10);
        CHECK(k.graph.edge_count() == 12);
    }

    TEST_CASE("incidence adjacency is distance-one in the subdivision") {
        Rng rng(12);
        for (int t = 0; t < 20; ++t) {
            Multigraph g = random_subcubic_multigraph(3 + t % 6, 0.2, rng);
            SubdividedGraph s = subdivide(g);
            for (auto a : incidences(g))
                for (auto b : incidences(g)) {
                    if (a == b) continue;
                    const Edge& x = s.graph.edge(s.edge_of.at(a));
                    const Edge& y = s.graph.edge(s.edge_of.at(b));
                    bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
                    bool bridged = s.graph.are_neighbors(x.u, y.u) || s.graph.are_neighbors(x.u, y.v) ||
                                   s.graph.are_neighbors(x.v, y.u) || s.graph.are_neighbors(x.v, y.v);
                    CHECK(ref::adjacent(g, a, b) == (share || bridged));
                }
        }
    }

    TEST_CASE("transfer keeps validity both ways") {
        Multigraph k4 = named_graph("k4");
        ListAssignment l = ListAssignment::uniform(k4, {0, 1, 2, 3, 4, 5});
        IncidenceColoring phi = solve(k4, l);
        SubdividedGraph s = subdivide(k4);
        EdgeColoring psi = transfer_coloring(s, phi);
        CHECK(check_strong_coloring(s.graph, nullptr, psi).empty());
        CHECK(transfer_back(s, psi) == phi);

        IncidenceColoring broken = phi;
        auto inc = incidences(k4);
        broken.set(inc[0], phi.at(inc[1]));
        CHECK_FALSE(check_strong_coloring(s.graph, nullptr, transfer_coloring(s, broken)).empty());

        Multigraph tri = named_graph("tri-multi");
        IncidenceColoring p;
        Color c = 0;
        for (auto a : incidences(tri)) p.set(a, c++);
        SubdividedGraph st = subdivide(tri);
        CHECK(transfer_back(st, transfer_coloring(st, p)) == p);
    }

    TEST_CASE("(2,3)-bipartite recognition and suppression") {
        BipartiteGraph b = subdivision_as_bipartite(named_graph("k4"));
        CHECK(is_ab_bipartite(b, 2, 3));
        Suppression s = suppress_23(b);
        CHECK(s.graph.vertex_count() == 4);
        CHECK(s.graph.edge_count() == 6);
        CHECK(s.padding.empty());

        BipartiteGraph wrong = b;
        wrong.side[0] = Side::A;
        CHECK_FALSE(is_ab_bipartite(wrong, 2, 3));
        CHECK_THROWS_AS(suppress_23(wrong), PreconditionError);
    }

    TEST_CASE("strong list coloring of S(K4) and random (2,3) graphs") {
        BipartiteGraph b = subdivision_as_bipartite(named_graph("k4"));
        EdgeLists l;
        for (const Edge& e : b.graph.edges()) l[e.id] = {0, 1, 2, 3, 4, 5};
        CHECK(check_strong_coloring(b.graph, &l, strong_list_color(b, l)).empty());

        Rng rng(14);
        for (int t = 0; t < 40; ++t) {
            BipartiteGraph r = random_bipartite23(3 + t % 15, rng);
            REQUIRE(is_ab_bipartite(r, 2, 3));
            EdgeLists lr = random_edge_lists(r.graph, 6, 12, rng);
            CHECK(check_strong_coloring(r.graph, &lr, strong_list_color(r, lr)).empty());
        }
    }

    TEST_CASE("short lists are rejected") {
        BipartiteGraph b = subdivision_as_bipartite(named_graph("k4"));
        EdgeLists l;
        for (const Edge& e : b.graph.edges()) l[e.id] = {0, 1, 2, 3, 4};
        CHECK_THROWS_AS(strong_list_color(b, l), PreconditionError);
    }
}

TEST_SUITE("generate") {
    TEST_CASE("named graphs") {
        Multigraph p = named_graph("petersen");
        CHECK(p.vertex_count() == 10);
        CHECK(p.edge_count() == 15);
        CHECK(ref::girth(p) == 5);
        CHECK(named_graph("k33").edge_count() == 9);
        CHECK(ref::girth(named_graph("k33")) == 4);
        CHECK(named_graph("prism").vertex_count() == 6);
        CHECK_THROWS_AS(named_graph("dodecahedron"), PreconditionError);
    }

    TEST_CASE("random cubic graphs") {
        Rng rng(1);
        Multigraph g = random_cubic(12, rng);
        CHECK(g.is_simple());
        CHECK(is_connected(g));
        for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
        CHECK_THROWS_AS(random_cubic(7, rng), PreconditionError);
        Multigraph m = random_cubic_multigraph(10, rng);
        CHECK(is_connected(m));
        for (int v = 0; v < 10; ++v) CHECK(m.degree(v) == 3);
    }

    TEST_CASE("fixed seed gives identical output") {
        auto text = [](std::uint64_t seed) {
            Rng rng(seed);
            std::ostringstream out;
            write_graph(out, random_subcubic_multigraph(20, 0.1, rng));
            write_lists(out, random_lists(random_cubic(10, rng), 6, 12, rng));
            return out.str();
        };
        CHECK(text(5) == text(5));
        CHECK(text(5) != text(6));
    }

    TEST_CASE("semicubic instances have a suitable core") {
        Rng rng(4);
        for (int t = 0; t < 30; ++t) {
            Multigraph g = random_semicubic(4 + 2 * (t % 5), rng);
            CHECK(g.is_simple());
            std::vector<VertexId> core;
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK((g.degree(v) == 1 || g.degree(v) == 3));
                if (g.degree(v) == 3) core.push_back(v);
            }
            CHECK(ref::two_connected(induced_subgraph(g, core).graph));
        }
    }

    TEST_CASE("cubic enumeration counts") {
        CHECK(connected_cubic_graphs(4).size() == 1);
        CHECK(connected_cubic_graphs(6).size() == 2);
        CHECK(connected_cubic_graphs(8).size() == 5);
    }
}
