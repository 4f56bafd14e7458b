#include "doctest.h"
#include "inclist/bridge.hpp"
#include "inclist/colorist.hpp"
#include "inclist/generate.hpp"
#include "inclist/oracle.hpp"
#include "support.hpp"

using namespace inclist;

TEST_SUITE("oracle") {
    TEST_CASE("triangle multigraph") {
        Multigraph g = named_graph("tri-multi");
        auto five = backtrack(g, ListAssignment::uniform(g, {1, 2, 3, 4, 5}));
        CHECK(five.status == SearchStatus::None);
        auto six = backtrack(g, ListAssignment::uniform(g, {1, 2, 3, 4, 5, 6}));
        REQUIRE(six.status == SearchStatus::Found);
        CHECK_FALSE(verify_coloring(g, nullptr, six.coloring));
        CHECK(incidence_chromatic_number(g) == 6);
        auto bad = find_bad_lists(g, 5, 5);
        CHECK(bad.status == BadListsStatus::Found);
        CHECK(bad.lists.covers(g));
    }

    TEST_CASE("cycles") {
        CHECK(incidence_chromatic_number(make_cycle(6)) == 3);
        CHECK(incidence_chromatic_number(make_cycle(5)) == 4);
        CHECK(find_bad_lists(make_cycle(6), 3, 6, {}, 100).status == BadListsStatus::NoneFound);
        // C4 is not 3-choosable even with identical lists.
        CHECK(find_bad_lists(make_cycle(4), 3, 6).status == BadListsStatus::Found);
    }

    TEST_CASE("chromatic number agrees with plain enumeration") {
        Rng rng(31);
        for (int t = 0; t < 25; ++t) {
            Multigraph g = random_subcubic_multigraph(2 + t % 5, 0.2, rng);
            if (g.edge_count() == 0) continue;
            int chi = incidence_chromatic_number(g);
            CHECK(ref::k_colorable(g, chi));
            CHECK_FALSE(ref::k_colorable(g, chi - 1));
        }
    }

    TEST_CASE("a solver output fixed in full is accepted at once") {
        Rng rng(2);
        Multigraph g = named_graph("petersen");
        ListAssignment l = random_lists(g, 6, 12, rng);
        IncidenceColoring phi = solve(g, l);
        auto r = backtrack(g, l, &phi);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.coloring == phi);
    }

    TEST_CASE("fixed colors are honored") {
        Multigraph g = make_cycle(6);
        ListAssignment l = ListAssignment::uniform(g, {0, 1, 2});
        IncidenceColoring fixed;
        fixed.set(incidences(g)[0], 2);
        auto r = backtrack(g, l, &fixed);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.coloring.at(incidences(g)[0]) == 2);
    }

    TEST_CASE("budget exhaustion is distinct from none") {
        Multigraph g = named_graph("petersen");
        auto r = backtrack(g, ListAssignment::uniform(g, {0, 1, 2, 3}), nullptr, {5, 10});
        CHECK(r.status == SearchStatus::BudgetExhausted);
        CHECK_THROWS_AS(incidence_chromatic_number(g, {3, 10}), BudgetExhausted);
        CHECK(find_bad_lists(g, 4, 6, {5, 10}).status == BadListsStatus::BudgetExhausted);
    }

    TEST_CASE("strong backtracking") {
        Multigraph p3 = ref::graph(3, {{0, 1}, {1, 2}});
        auto r = strong_backtrack(p3, {{0, {1}}, {1, {2}}});
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.coloring.at(0) == 1);
        CHECK(strong_backtrack(p3, {{0, {1}}, {1, {1}}}).status == SearchStatus::None);
        CHECK(strong_chromatic_index(ref::graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 3);
        CHECK(strong_chromatic_index(subdivide(named_graph("k4")).graph) ==
              incidence_chromatic_number(named_graph("k4")));
    }

    TEST_CASE("cubic graphs on six vertices with random lists") {
        auto six = connected_cubic_graphs(6);
        REQUIRE(six.size() == 2);
        Rng rng(6);
        for (const Multigraph& g : six)
            for (int t = 0; t < 10; ++t) {
                ListAssignment l = random_lists(g, 6, 12, rng);
                IncidenceColoring phi = base_small_graph(g, l, std::nullopt);
                CHECK_FALSE(verify_coloring(g, &l, phi));
            }
    }
}
