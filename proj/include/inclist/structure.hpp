#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inclist/graph.hpp"

namespace inclist {

// ---------------------------------------------------------------------------
// Connectivity

/// Bridges of g. Parallel edges are never bridges.
std::set<EdgeId> cut_edges(const Multigraph& g);

/// Articulation vertices of g, sorted.
std::vector<VertexId> cut_vertices(const Multigraph& g);

/// At least three vertices, connected, and no cut vertex.
bool is_two_connected(const Multigraph& g);

/// Edge sets of the biconnected blocks (a bridge is a block of its own).
/// Isolated vertices contribute nothing.
std::vector<std::vector<EdgeId>> biconnected_blocks(const Multigraph& g);

// ---------------------------------------------------------------------------
// Matchings and (1,2)-decompositions

struct Matching {
    std::vector<EdgeId> edges;  // sorted by id

    std::size_t size() const noexcept { return edges.size(); }
    bool is_perfect(const Multigraph& g) const { return 2 * edges.size() == static_cast<std::size_t>(g.vertex_count()); }
};

bool is_matching(const Multigraph& g, const std::vector<EdgeId>& edges);

/// Maximum-cardinality matching by Edmonds' blossom contraction.
/// Among parallel edges the one with the smallest id is used.
Matching maximum_matching(const Multigraph& g);

/// Partition of E(G) into a perfect matching `e1` and a 2-regular rest `e2`.
struct OneTwoDecomposition {
    std::set<EdgeId> e1;
    std::set<EdgeId> e2;
    std::map<VertexId, EdgeId> matched_edge;  // e_v: the e1 edge at v

    EdgeId matched(VertexId v) const { return matched_edge.at(v); }
};

/// Builds the decomposition whose e1 is `perfect_matching`; throws
/// PreconditionError when the complement is not 2-regular on the vertices
/// it touches.
OneTwoDecomposition decomposition_from_matching(const Multigraph& g, const std::vector<EdgeId>& perfect_matching);

/// Empty string when valid, otherwise the first reason it is not.
std::string check_decomposition(const Multigraph& g, const OneTwoDecomposition& d);

/// Requires g connected and either 2-connected cubic, or degree 3 everywhere
/// except one pendent vertex v with g - v 2-connected. Throws
/// PreconditionError otherwise, and InternalError if no perfect matching is
/// found (which the hypotheses rule out).
OneTwoDecomposition one_two_decomposition(const Multigraph& g);

// ---------------------------------------------------------------------------
// Cycle graph and DFS cycle-trees

/// Cycles of G[E2] as nodes, joined when some edge of G runs between them.
struct CycleGraph {
    // Each cycle starts at its smallest vertex and continues toward the
    // smaller of that vertex's two cycle neighbours. Cycles are sorted by
    // their first vertex.
    std::vector<std::vector<VertexId>> cycles;
    // cycle_edges[c][k] joins cycles[c][k] and cycles[c][k+1 mod len].
    std::vector<std::vector<EdgeId>> cycle_edges;
    std::vector<int> cycle_of;  // per vertex; -1 when not on a cycle
    // Key (i, j) with i < j; value sorted by edge id.
    std::map<std::pair<int, int>, std::vector<EdgeId>> connections;
    // Endpoints of every connecting edge.
    std::map<EdgeId, std::pair<VertexId, VertexId>> connector_ends;

    int size() const noexcept { return static_cast<int>(cycles.size()); }
    const std::vector<EdgeId>& connecting(int i, int j) const;
    std::vector<int> neighbors(int i) const;
};

CycleGraph cycle_graph(const Multigraph& g, const OneTwoDecomposition& d);

/// A DFS spanning tree of a cycle graph with one chosen connecting edge per
/// tree edge. All per-cycle vectors are indexed by cycle index.
struct CycleTree {
    int root = 0;
    std::vector<int> order;               // DFS ordering C(0), ..., C(m)
    std::vector<int> parent;              // -1 for the root
    std::vector<EdgeId> cut_edge;         // tree edge to the parent; -1 for the root
    std::vector<VertexId> parent_vertex;  // p(C): endpoint of cut_edge on the parent
    std::vector<VertexId> attach_vertex;  // endpoint of cut_edge on the cycle itself
    std::vector<std::vector<int>> children;  // in DFS order

    int m() const noexcept { return static_cast<int>(order.size()) - 1; }
    bool is_root(int c) const noexcept { return c == root; }
    // A non-root leaf of the tree.
    bool is_pendent(int c) const { return c != root && children.at(c).empty(); }
    std::set<EdgeId> tree_edges() const;
};

class CycleTreeInfeasible : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// DFS over the cycle graph from `root`. Neighbours are explored by
/// increasing index, except that `prefer_first` is explored first whenever it
/// is reachable from the current cycle. The connecting edge for a tree edge is
/// the smallest candidate other than `forbidden_cut_edge`; a cycle pair joined
/// only by the forbidden edge is not used as a tree edge. Throws
/// CycleTreeInfeasible if some cycle cannot be reached that way.
CycleTree dfs_cycle_tree(const CycleGraph& cg, int root, std::optional<int> prefer_first = std::nullopt,
                         std::optional<EdgeId> forbidden_cut_edge = std::nullopt);

/// Checks that the cycles plus the tree edges form a cycle-tree: every block
/// a cycle or a single edge, and no two pendent edges adjacent. Also checks
/// that parent vertices lie on earlier cycles. Empty string when valid.
std::string check_cycle_tree(const Multigraph& g, const OneTwoDecomposition& d, const CycleGraph& cg,
                             const CycleTree& t);

// ---------------------------------------------------------------------------
// Triples on a cycle

/// Which freely-choosable configuration the root carries.
enum class PinCase {
    None,        // no prescribed edge
    RootChord,   // e* = x0x1 on the root cycle, with chords x2x4, x3x5, x1x6
    Pendent,     // e* is a pendent edge at the root cycle
    GadgetLeaf,  // e* enters a non-root pendent 6-cycle with chords x2x4, x3x5
};

struct Triple {
    VertexId v0 = -1, v1 = -1, v2 = -1;  // consecutive along the cycle
    EdgeId e_v0 = -1, e_v1 = -1;         // their matching edges
    EdgeId v0v1 = -1, v1v2 = -1;         // the two cycle edges
    VertexId u0 = -1, u1 = -1;           // far ends of e_v0 and e_v1
    // True when e_v0 or e_v1 meets an endpoint of e*; the caller must treat
    // the prescribed colors as extra constraints on the selection.
    bool touches_pin = false;

    /// I_C in the order (u0,e_v0), (v0,e_v0), (u1,e_v1), (v1,e_v1), (v2,v1v2).
    std::array<Incidence, 5> incidences() const;
};

/// Labels the root cycle x0, ..., x_{n-1} so that e* = x0x1 and x2x4, x3x5,
/// x1x6 are edges of g. Throws PreconditionError if no labelling exists.
std::vector<VertexId> root_chord_labelling(const Multigraph& g, const std::vector<VertexId>& cycle, EdgeId e_star);

/// Labels a 6-cycle x1..x6 (returned as x[0..5]) so that x1 is an endpoint of
/// e* and x2x4, x3x5 are edges. Throws PreconditionError otherwise.
std::vector<VertexId> gadget_labelling(const Multigraph& g, const std::vector<VertexId>& cycle, EdgeId e_star);

/// Chooses a triple on cycle `c`, which must be the only cycle of the tree or
/// a non-root pendent cycle. The unique cycle takes (x4,x5,x6) under
/// RootChord and otherwise the first admissible window avoiding e*; a
/// pendent cycle takes v2 = its attachment vertex.
Triple find_triple(const Multigraph& g, const OneTwoDecomposition& d, const CycleGraph& cg, const CycleTree& t,
                   int c, std::optional<EdgeId> e_star, PinCase pin_case);

/// Checks (A1)-(A3) and u1 != v2. On a triangle (A1) reduces to e_v0 not
/// joining v0 and v2, since v0v2 is then a cycle edge. `ignore_pin` skips the
/// e*-related parts of (A2) and (A3). Empty string when satisfied.
std::string check_triple(const Multigraph& g, const OneTwoDecomposition& d, const std::vector<VertexId>& cycle,
                         const Triple& tr, std::optional<EdgeId> e_star, bool ignore_pin = false);

}  // namespace inclist
