#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inclist/graph.hpp"
#include "inclist/io.hpp"

// Incidences of G are the edges of its subdivision S(G), and two incidences
// are adjacent exactly when the matching edges of S(G) are within distance
// one. This turns incidence colorings into strong edge colorings and back.

namespace inclist {

struct SubdividedGraph {
    Multigraph graph;              // S(G); original vertices keep their ids
    int original_vertex_count = 0;
    std::map<EdgeId, VertexId> midpoint;      // edge of G -> its midpoint
    std::map<Incidence, EdgeId> edge_of;      // incidence of G -> edge of S(G)
    std::map<EdgeId, Incidence> incidence_of; // edge of S(G) -> incidence of G
};

/// Midpoints get ids n, n+1, ... in edge id order; S(G) edge ids follow
/// the sorted incidence order of G.
SubdividedGraph subdivide(const Multigraph& g);

EdgeColoring transfer_coloring(const SubdividedGraph& s, const IncidenceColoring& phi);
IncidenceColoring transfer_back(const SubdividedGraph& s, const EdgeColoring& psi);

/// Checks that every edge is colored, colors lie in the lists (when given)
/// and edges within distance one differ. Empty string when valid.
std::string check_strong_coloring(const Multigraph& h, const EdgeLists* lists, const EdgeColoring& psi);

struct BipartiteGraph {
    Multigraph graph;
    std::vector<Side> side;
};

/// Simple, every edge between the sides, degrees at most a on side A and
/// at most b on side B.
bool is_ab_bipartite(const BipartiteGraph& b, int a_max, int b_max);

/// S(G) with the midpoints on side A.
BipartiteGraph subdivision_as_bipartite(const Multigraph& g);

struct Suppression {
    Multigraph graph;                          // H
    std::vector<VertexId> vertex_of;           // B-side vertex of the input -> vertex of H; -1 for side A
    std::map<EdgeId, Incidence> incidence_of;  // edge of the input -> incidence of H
    std::vector<Incidence> padding;            // incidences of H on added pendent vertices
};

/// Gives every degree-1 vertex of side A a new pendent neighbour, then
/// suppresses side A: each A-vertex becomes an edge of H between its two
/// neighbours. Requires a (2,3)-bipartite input.
Suppression suppress_23(const BipartiteGraph& b);

/// Strong list edge coloring of a (2,3)-bipartite graph from lists of size
/// at least 6, through the incidence solver on the suppressed graph.
EdgeColoring strong_list_color(const BipartiteGraph& b, const EdgeLists& lists);

}  // namespace inclist
