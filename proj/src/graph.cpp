#include "inclist/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace inclist {

std::string to_string(const Incidence& inc) {
    return "(" + std::to_string(inc.vertex) + "," + std::to_string(inc.edge) + ")";
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw GraphError("negative vertex count");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    incident_.resize(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw GraphError("edge " + std::to_string(e.id) + " has an endpoint out of range");
        if (e.u == e.v) throw GraphError("edge " + std::to_string(e.id) + " is a loop");
        if (!index_.emplace(e.id, i).second)
            throw GraphError("duplicate edge id " + std::to_string(e.id));
        incident_[e.u].push_back(e.id);
        incident_[e.v].push_back(e.id);
    }
    for (const auto& inc : incident_) max_degree_ = std::max(max_degree_, static_cast<int>(inc.size()));
}

std::size_t Multigraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

const Edge& Multigraph::edge(EdgeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("no edge with id " + std::to_string(id));
    return edges_[it->second];
}

bool Multigraph::is_endpoint(VertexId v, EdgeId e) const {
    const Edge& ed = edge(e);
    return ed.u == v || ed.v == v;
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw GraphError("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

bool Multigraph::joins(EdgeId e, VertexId a, VertexId b) const {
    const Edge& ed = edge(e);
    return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
}

std::vector<EdgeId> Multigraph::edges_between(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    for (EdgeId e : incident_edges(a))
        if (other_end(e, a) == b) out.push_back(e);
    return out;
}

bool Multigraph::are_neighbors(VertexId a, VertexId b) const {
    const auto& inc = incident_edges(a);
    return std::any_of(inc.begin(), inc.end(), [&](EdgeId e) { return other_end(e, a) == b; });
}

bool Multigraph::is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges_)
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
    return true;
}

Multigraph build_multigraph(int vertex_count, std::vector<Edge> edges) {
    return Multigraph(vertex_count, std::move(edges));
}

Subgraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices) {
    Subgraph sub;
    sub.to_parent.assign(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        if (!sub.from_parent.emplace(sub.to_parent[i], static_cast<VertexId>(i)).second)
            throw GraphError("repeated vertex in induced subgraph");
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto iu = sub.from_parent.find(e.u);
        auto iv = sub.from_parent.find(e.v);
        if (iu != sub.from_parent.end() && iv != sub.from_parent.end())
            edges.push_back({e.id, iu->second, iv->second});
    }
    sub.graph = Multigraph(static_cast<int>(vertices.size()), std::move(edges));
    return sub;
}

Subgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edge_ids) {
    std::set<VertexId> verts;
    for (EdgeId id : edge_ids) {
        verts.insert(g.edge(id).u);
        verts.insert(g.edge(id).v);
    }
    Subgraph sub;
    sub.to_parent.assign(verts.begin(), verts.end());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        sub.from_parent.emplace(sub.to_parent[i], static_cast<VertexId>(i));
    std::vector<Edge> edges;
    for (EdgeId id : edge_ids) {
        const Edge& e = g.edge(id);
        edges.push_back({e.id, sub.from_parent.at(e.u), sub.from_parent.at(e.v)});
    }
    sub.graph = Multigraph(static_cast<int>(sub.to_parent.size()), std::move(edges));
    return sub;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<VertexId> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (EdgeId e : g.incident_edges(x)) {
                VertexId y = g.other_end(e, x);
                if (comp[y] == -1) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Multigraph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::vector<Incidence> incidences(const Multigraph& g) {
    std::vector<Incidence> out;
    out.reserve(2 * g.edges().size());
    for (const Edge& e : g.edges()) {
        out.push_back({std::min(e.u, e.v), e.id});
        out.push_back({std::max(e.u, e.v), e.id});
    }
    return out;
}

bool is_incidence(const Multigraph& g, const Incidence& inc) {
    return g.has_edge(inc.edge) && g.is_endpoint(inc.vertex, inc.edge);
}

namespace {

void require_incidence(const Multigraph& g, const Incidence& inc) {
    if (!is_incidence(g, inc)) throw GraphError(to_string(inc) + " is not an incidence of the graph");
}

}  // namespace

bool adjacent(const Multigraph& g, const Incidence& a, const Incidence& b) {
    require_incidence(g, a);
    require_incidence(g, b);
    if (a == b) return false;
    if (a.vertex == b.vertex || a.edge == b.edge) return true;
    // The edge joining the two vertices is one of the two incidence edges.
    return g.joins(a.edge, a.vertex, b.vertex) || g.joins(b.edge, a.vertex, b.vertex);
}

std::vector<Incidence> neighborhood(const Multigraph& g, const Incidence& inc) {
    require_incidence(g, inc);
    const VertexId u = inc.vertex;
    const VertexId v = g.other_end(inc.edge, u);
    std::vector<Incidence> out;
    for (EdgeId f : g.incident_edges(u)) {
        if (f == inc.edge) continue;
        out.push_back({u, f});
        out.push_back({g.other_end(f, u), f});
    }
    for (EdgeId f : g.incident_edges(v)) out.push_back({v, f});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void ListAssignment::set(const Incidence& inc, std::vector<Color> colors) {
    if (colors.empty()) throw GraphError("empty list for incidence " + to_string(inc));
    for (Color c : colors)
        if (c < 0) throw GraphError("negative color in list for incidence " + to_string(inc));
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists_[inc] = std::move(colors);
}

const std::vector<Color>& ListAssignment::at(const Incidence& inc) const {
    auto it = lists_.find(inc);
    if (it == lists_.end()) throw GraphError("no list for incidence " + to_string(inc));
    return it->second;
}

bool ListAssignment::allows(const Incidence& inc, Color c) const {
    auto it = lists_.find(inc);
    return it != lists_.end() && std::binary_search(it->second.begin(), it->second.end(), c);
}

std::size_t ListAssignment::min_list_size() const {
    std::size_t best = 0;
    bool first = true;
    for (const auto& [inc, colors] : lists_) {
        if (first || colors.size() < best) best = colors.size();
        first = false;
    }
    return best;
}

bool ListAssignment::covers(const Multigraph& g) const {
    for (const Incidence& inc : incidences(g))
        if (!contains(inc)) return false;
    return true;
}

ListAssignment ListAssignment::uniform(const Multigraph& g, std::vector<Color> colors) {
    ListAssignment out;
    for (const Incidence& inc : incidences(g)) out.set(inc, colors);
    return out;
}

std::optional<Color> IncidenceColoring::get(const Incidence& inc) const {
    auto it = colors_.find(inc);
    if (it == colors_.end()) return std::nullopt;
    return it->second;
}

Color IncidenceColoring::at(const Incidence& inc) const {
    auto it = colors_.find(inc);
    if (it == colors_.end()) throw GraphError("incidence " + to_string(inc) + " is uncolored");
    return it->second;
}

std::size_t IncidenceColoring::distinct_color_count() const {
    std::set<Color> seen;
    for (const auto& [inc, c] : colors_) seen.insert(c);
    return seen.size();
}

std::string Violation::message() const {
    switch (kind) {
    case Kind::Incomplete: return "incomplete: " + to_string(first) + " has no color";
    case Kind::Foreign: return "foreign: " + to_string(first) + " is not an incidence of the graph";
    case Kind::NotInList: return "list violation: color of " + to_string(first) + " is not in its list";
    case Kind::Conflict:
        return "conflict: adjacent incidences " + to_string(first) + " and " + to_string(*second) +
               " share a color";
    }
    return "unknown violation";
}

std::optional<Violation> verify_coloring(const Multigraph& g, const ListAssignment* lists,
                                         const IncidenceColoring& coloring) {
    const std::vector<Incidence> all = incidences(g);
    for (const Incidence& inc : all)
        if (!coloring.contains(inc)) return Violation{Violation::Kind::Incomplete, inc, std::nullopt};
    for (const auto& [inc, c] : coloring)
        if (!is_incidence(g, inc)) return Violation{Violation::Kind::Foreign, inc, std::nullopt};

    // Pairwise scan written straight from the definition, not via neighborhood().
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Incidence& a = all[i];
        if (lists && !lists->allows(a, coloring.at(a)))
            return Violation{Violation::Kind::NotInList, a, std::nullopt};
        const Edge& ea = g.edge(a.edge);
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const Incidence& b = all[j];
            const Edge& eb = g.edge(b.edge);
            auto joins = [](const Edge& e, VertexId x, VertexId y) {
                return (e.u == x && e.v == y) || (e.u == y && e.v == x);
            };
            const bool adj = a.vertex == b.vertex || a.edge == b.edge ||
                             joins(ea, a.vertex, b.vertex) || joins(eb, a.vertex, b.vertex);
            if (adj && coloring.at(a) == coloring.at(b))
                return Violation{Violation::Kind::Conflict, a, b};
        }
    }
    return std::nullopt;
}

}  // namespace inclist
