#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "inclist/errors.hpp"

namespace inclist {

using VertexId = int;
using EdgeId = int;
using Color = int;

struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// A pair (vertex, edge) with `vertex` an endpoint of `edge`.
// Ordered by edge id first, then vertex id.
struct Incidence {
    VertexId vertex = 0;
    EdgeId edge = 0;

    friend bool operator==(const Incidence&, const Incidence&) = default;
    friend std::strong_ordering operator<=>(const Incidence& a, const Incidence& b) {
        if (auto c = a.edge <=> b.edge; c != 0) return c;
        return a.vertex <=> b.vertex;
    }
};

std::string to_string(const Incidence& inc);

/// Loopless multigraph with stable edge identities.
///
/// Vertices are 0..vertex_count()-1. Parallel edges are distinct edges that
/// happen to share endpoints. Edges are kept sorted by id and every
/// incidence list is sorted by edge id, so all iteration is deterministic.
/// Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;

    /// Throws GraphError on a loop, a duplicate edge id, or an endpoint
    /// outside [0, vertex_count).
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(EdgeId id) const { return index_.contains(id); }
    const Edge& edge(EdgeId id) const;

    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[check_vertex(v)]; }
    int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }
    int max_degree() const noexcept { return max_degree_; }

    bool is_endpoint(VertexId v, EdgeId e) const;
    VertexId other_end(EdgeId e, VertexId v) const;
    // True iff edge e has endpoints exactly {a, b}.
    bool joins(EdgeId e, VertexId a, VertexId b) const;
    std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;
    bool are_neighbors(VertexId a, VertexId b) const;

    bool is_simple() const;
    // Largest edge id, or -1 for an edgeless graph.
    EdgeId max_edge_id() const noexcept { return edges_.empty() ? -1 : edges_.back().id; }

private:
    std::size_t check_vertex(VertexId v) const;

    int vertex_count_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::unordered_map<EdgeId, std::size_t> index_;
    std::vector<std::vector<EdgeId>> incident_;
};

Multigraph build_multigraph(int vertex_count, std::vector<Edge> edges);

/// A graph carved out of a parent, with vertices renumbered 0..k-1 in the
/// order given and edge ids preserved.
struct Subgraph {
    Multigraph graph;
    std::vector<VertexId> to_parent;
    std::unordered_map<VertexId, VertexId> from_parent;

    VertexId local(VertexId parent_vertex) const { return from_parent.at(parent_vertex); }
};

// Subgraph induced by `vertices` (all edges with both ends inside).
Subgraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);
// Subgraph formed by `edges` and their endpoints; vertices ordered by id.
Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges);

// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// All incidences, two per edge, sorted by (edge id, vertex id).
std::vector<Incidence> incidences(const Multigraph& g);
bool is_incidence(const Multigraph& g, const Incidence& inc);

/// Incidence adjacency: shared vertex, shared edge, or one of the two edges
/// joins the two vertices. Throws GraphError if either argument is not an
/// incidence of g. Irreflexive.
bool adjacent(const Multigraph& g, const Incidence& a, const Incidence& b);

/// Every incidence adjacent to `inc`, sorted. At most 3*deg - 2 entries.
std::vector<Incidence> neighborhood(const Multigraph& g, const Incidence& inc);

/// Color lists per incidence. Lists are stored sorted and deduplicated.
class ListAssignment {
public:
    using Map = std::map<Incidence, std::vector<Color>>;

    void set(const Incidence& inc, std::vector<Color> colors);
    const std::vector<Color>& at(const Incidence& inc) const;
    bool contains(const Incidence& inc) const { return lists_.contains(inc); }
    bool allows(const Incidence& inc, Color c) const;
    std::size_t size() const noexcept { return lists_.size(); }
    // Smallest list size over the assignment (0 when empty).
    std::size_t min_list_size() const;
    // True iff every incidence of g has a list.
    bool covers(const Multigraph& g) const;

    Map::const_iterator begin() const { return lists_.begin(); }
    Map::const_iterator end() const { return lists_.end(); }

    // Same list `colors` on every incidence of g.
    static ListAssignment uniform(const Multigraph& g, std::vector<Color> colors);

private:
    Map lists_;
};

/// Partial map from incidences to colors.
class IncidenceColoring {
public:
    using Map = std::map<Incidence, Color>;

    void set(const Incidence& inc, Color c) { colors_[inc] = c; }
    std::optional<Color> get(const Incidence& inc) const;
    Color at(const Incidence& inc) const;
    bool contains(const Incidence& inc) const { return colors_.contains(inc); }
    void erase(const Incidence& inc) { colors_.erase(inc); }
    std::size_t size() const noexcept { return colors_.size(); }
    bool empty() const noexcept { return colors_.empty(); }
    std::size_t distinct_color_count() const;

    Map::const_iterator begin() const { return colors_.begin(); }
    Map::const_iterator end() const { return colors_.end(); }

    friend bool operator==(const IncidenceColoring&, const IncidenceColoring&) = default;

private:
    Map colors_;
};

struct Violation {
    enum class Kind {
        Incomplete,     // an incidence of G has no color
        Foreign,        // a colored pair is not an incidence of G
        Conflict,       // two adjacent incidences share a color
        NotInList,      // a color outside the incidence's list
    };
    Kind kind;
    Incidence first;
    std::optional<Incidence> second;

    std::string message() const;
};

/// Independent checker. Scans in deterministic order and reports the first
/// problem: completeness first, then list membership and conflicts in
/// incidence order. `lists` may be null for an unconstrained check.
std::optional<Violation> verify_coloring(const Multigraph& g, const ListAssignment* lists,
                                         const IncidenceColoring& coloring);

}  // namespace inclist
