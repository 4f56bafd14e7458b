#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "inclist/graph.hpp"
#include "inclist/structure.hpp"

// Constructive incidence list coloring of loopless subcubic multigraphs from
// lists of size six.
//
// The solver peels off vertices of degree at most two and pairs of vertices
// joined by a double edge, colors what is left (a simple cubic graph) one
// component at a time, and then puts the peeled vertices back, extending the
// coloring at each step. A 2-connected cubic component is colored along a DFS
// cycle-tree of a (1,2)-decomposition. A component with bridges is split at
// its bridges and the pieces are colored one after another, each piece
// receiving the two colors already fixed on the bridge that enters it.

namespace inclist {

/// An edge whose two incidences are prescribed.
struct PinnedEdge {
    EdgeId edge = -1;
    VertexId u = -1;
    VertexId v = -1;
    Color color_u = 0;
    Color color_v = 0;
};

/// Colors for the five incidences of a triple, in the order
/// (u0,e_v0), (v0,e_v0), (u1,e_v1), (v1,e_v1), (v2,v1v2).
struct FiveColorSelection {
    Color alpha = 0, beta = 0, gamma = 0, delta = 0, eta = 0;

    friend bool operator==(const FiveColorSelection&, const FiveColorSelection&) = default;
};

/// Candidate colors for the five incidences plus the lists of the two
/// incidences on v0v1 that are colored last.
struct SelectionLists {
    std::vector<Color> a, b, c, d, e;  // for alpha .. eta
    std::vector<Color> l_v0;           // L(v0, v0v1)
    std::vector<Color> l_v1;           // L(v1, v0v1)
};

/// Counters filled in by the solver when a SolveStats is supplied.
struct SolveStats {
    int low_degree_extensions = 0;
    int parallel_pair_extensions = 0;
    int triple_edge_components = 0;
    int cubic_components = 0;
    int bridged_components = 0;
    int pinned_pendent_runs = 0;
    int small_base_cases = 0;
    int cycle_tree_runs = 0;
    std::array<int, 4> pin_cases{};  // indexed by PinCase
    int gadgets_attached = 0;
    int gadget_rematches = 0;
    int triples_touching_pin = 0;
    // The two incidences on v0v1 colored last in each cycle schedule.
    int deferred_checks = 0;
    int deferred_max_forbidden = 0;
    int deferred_violations = 0;

    void merge(const SolveStats& other);
};

/// Colors every incidence of g from `lists`. Requires a loopless graph with
/// maximum degree at most 3 and lists of size at least 6 on every
/// incidence (larger lists are cut down to six colors). Throws
/// PreconditionError on bad input and InternalError if a step that must succeed
/// on valid input fails.
IncidenceColoring solve(const Multigraph& g, const ListAssignment& lists, SolveStats* stats = nullptr);

/// Colors g with the pinned colors on a pendent edge. Requires g simple,
/// every degree 1 or 3, and g minus its pendent vertices equal to K1 or
/// 2-connected.
IncidenceColoring solve_pinned_pendent(const Multigraph& g, const ListAssignment& lists, const PinnedEdge& pin,
                                       SolveStats* stats = nullptr);

/// Extends `sub` (a coloring of g - v) over the edges at v, where
/// deg(v) <= 2: first the far incidences, then the incidences at v.
IncidenceColoring reduce_degree_le2(const Multigraph& g, const ListAssignment& lists, VertexId v,
                                    const IncidenceColoring& sub);

/// Extends `sub` (a coloring of g - {u, v}) over the eight incidences at u
/// and v, where u and v are joined by exactly two parallel edges and each
/// has one more edge.
IncidenceColoring reduce_parallel_pair(const Multigraph& g, const ListAssignment& lists, VertexId u, VertexId v,
                                       const IncidenceColoring& sub);

/// Bridge decomposition of a simple connected cubic graph that is not
/// 2-connected.
struct ComponentPlan {
    std::set<EdgeId> cut_edges;
    // Vertex sets of the components of G - K in processing order.
    std::vector<std::vector<VertexId>> components;
    // Bridges incident to each component.
    std::vector<std::vector<EdgeId>> attached;
    // Bridge into each component from an earlier one; -1 for the first.
    std::vector<EdgeId> entry_edge;
    // Index of the earlier component across entry_edge; -1 for the first.
    std::vector<int> entry_from;

    /// The component plus its bridges, vertices renumbered.
    Subgraph star(const Multigraph& g, std::size_t i) const;
};

ComponentPlan split_on_cut_edges(const Multigraph& g);

/// A gadget is a 6-cycle x1..x6 with chords x2x4 and x3x5; x1 and x6 are
/// identified with two pendent vertices of the host graph.
struct Gadget {
    std::array<VertexId, 6> x{};     // x1..x6
    std::array<EdgeId, 8> edges{};   // x1x2 x2x3 x3x4 x4x5 x5x6 x6x1 x2x4 x3x5
    EdgeId pendent_x1 = -1;          // host edge at x1
    EdgeId pendent_x6 = -1;          // host edge at x6
};

struct GadgetAttachment {
    Multigraph graph;
    std::vector<Gadget> gadgets;
    std::optional<EdgeId> surviving_pendent;
    int original_vertex_count = 0;
};

/// Pairs up the pendent vertices of g and joins each pair through a gadget,
/// until at most one pendent vertex is left. When `keep` is given and the
/// number of pendent vertices is odd, keep's pendent vertex is the survivor;
/// when it is even, keep's pendent vertex is paired first.
GadgetAttachment attach_gadgets(const Multigraph& g, std::optional<EdgeId> keep);

/// The five-color selection on full lists for the triple (v0, v1, v2).
FiveColorSelection select_for_triple(const Multigraph& g, const ListAssignment& lists, VertexId v0, VertexId v1,
                                  VertexId v2, EdgeId e_v0, EdgeId e_v1);

/// Same selection on explicit candidate sets (which may be smaller than six
/// once prescribed neighbours are removed). Throws InternalError when the
/// sets are too small for the construction.
FiveColorSelection select_five_colors(const SelectionLists& s);

/// All five constraints of a selection, checked directly.
bool satisfies_selection(const SelectionLists& s, const FiveColorSelection& f);

/// Colors both incidences of edge e, which must be uncolored and incident to
/// an edge with no colored incidence. Picks the lexicographically smallest
/// valid pair.
void greedy_extend_edge(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& coloring, EdgeId e);

/// Colors an almost cubic connected simple graph with at least 7 vertices
/// along the cycle-tree `t`, honoring `pin` as dictated by `pin_case`.
IncidenceColoring color_cycle_tree(const Multigraph& g, const ListAssignment& lists, const OneTwoDecomposition& d,
                                   const CycleGraph& cg, const CycleTree& t, PinCase pin_case,
                                   const std::optional<PinnedEdge>& pin, SolveStats* stats = nullptr);

/// Exact search for graphs on at most six vertices, pinned incidences fixed.
IncidenceColoring base_small_graph(const Multigraph& g, const ListAssignment& lists,
                                   const std::optional<PinnedEdge>& pin);

}  // namespace inclist
