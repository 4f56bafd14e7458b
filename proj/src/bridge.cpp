#include "inclist/bridge.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "inclist/colorist.hpp"

namespace inclist {

SubdividedGraph subdivide(const Multigraph& g) {
    SubdividedGraph s;
    s.original_vertex_count = g.vertex_count();
    int n = g.vertex_count();
    for (const Edge& e : g.edges()) s.midpoint[e.id] = n++;
    std::vector<Edge> edges;
    for (const Incidence& inc : incidences(g)) {
        EdgeId id = static_cast<EdgeId>(edges.size());
        edges.push_back({id, inc.vertex, s.midpoint.at(inc.edge)});
        s.edge_of[inc] = id;
        s.incidence_of[id] = inc;
    }
    s.graph = Multigraph(n, std::move(edges));
    return s;
}

EdgeColoring transfer_coloring(const SubdividedGraph& s, const IncidenceColoring& phi) {
    EdgeColoring out;
    for (const auto& [inc, c] : phi) out[s.edge_of.at(inc)] = c;
    return out;
}

IncidenceColoring transfer_back(const SubdividedGraph& s, const EdgeColoring& psi) {
    IncidenceColoring out;
    for (const auto& [e, c] : psi) out.set(s.incidence_of.at(e), c);
    return out;
}

std::string check_strong_coloring(const Multigraph& h, const EdgeLists* lists, const EdgeColoring& psi) {
    for (const Edge& e : h.edges()) {
        auto it = psi.find(e.id);
        if (it == psi.end()) return "edge " + std::to_string(e.id) + " is uncolored";
        if (lists) {
            auto l = lists->find(e.id);
            if (l == lists->end() || std::find(l->second.begin(), l->second.end(), it->second) == l->second.end())
                return "edge " + std::to_string(e.id) + " has a color outside its list";
        }
    }
    for (const auto& [e, c] : psi)
        if (!h.has_edge(e)) return "color on unknown edge " + std::to_string(e);
    // Edges within distance one: for each vertex, all edges at it and at its
    // neighbours.
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        std::set<EdgeId> near;
        for (EdgeId e : h.incident_edges(v)) {
            near.insert(e);
            for (EdgeId f : h.incident_edges(h.other_end(e, v))) near.insert(f);
        }
        for (EdgeId e : h.incident_edges(v))
            for (EdgeId f : near)
                if (e != f && psi.at(e) == psi.at(f))
                    return "edges " + std::to_string(e) + " and " + std::to_string(f) + " share color " +
                           std::to_string(psi.at(e));
    }
    return {};
}

bool is_ab_bipartite(const BipartiteGraph& b, int a_max, int b_max) {
    const Multigraph& g = b.graph;
    if (b.side.size() != static_cast<std::size_t>(g.vertex_count()) || !g.is_simple()) return false;
    for (const Edge& e : g.edges())
        if (b.side[e.u] == b.side[e.v]) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > (b.side[v] == Side::A ? a_max : b_max)) return false;
    return true;
}

BipartiteGraph subdivision_as_bipartite(const Multigraph& g) {
    SubdividedGraph s = subdivide(g);
    BipartiteGraph out;
    out.side.assign(s.graph.vertex_count(), Side::B);
    for (VertexId v = s.original_vertex_count; v < s.graph.vertex_count(); ++v) out.side[v] = Side::A;
    out.graph = std::move(s.graph);
    return out;
}

Suppression suppress_23(const BipartiteGraph& b) {
    if (!is_ab_bipartite(b, 2, 3)) throw PreconditionError("input is not (2,3)-bipartite");
    const Multigraph& g = b.graph;
    Suppression out;
    out.vertex_of.assign(g.vertex_count(), -1);
    int n = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (b.side[v] == Side::B) out.vertex_of[v] = n++;

    std::vector<Edge> edges;
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        if (b.side[a] != Side::A || g.degree(a) == 0) continue;
        EdgeId id = static_cast<EdgeId>(edges.size());
        const auto& at = g.incident_edges(a);
        VertexId x = out.vertex_of[g.other_end(at[0], a)];
        VertexId y;
        if (at.size() == 2) {
            y = out.vertex_of[g.other_end(at[1], a)];
            out.incidence_of[at[1]] = {y, id};
        } else {
            y = n++;
            out.padding.push_back({y, id});
        }
        out.incidence_of[at[0]] = {x, id};
        edges.push_back({id, x, y});
    }
    out.graph = Multigraph(n, std::move(edges));
    return out;
}

EdgeColoring strong_list_color(const BipartiteGraph& b, const EdgeLists& lists) {
    Suppression s = suppress_23(b);
    ListAssignment l;
    for (const auto& [e, inc] : s.incidence_of) {
        auto it = lists.find(e);
        if (it == lists.end()) throw PreconditionError("no list for edge " + std::to_string(e));
        if (std::set<Color>(it->second.begin(), it->second.end()).size() < 6)
            throw PreconditionError("list of edge " + std::to_string(e) + " has fewer than 6 colors");
        l.set(inc, it->second);
    }
    std::vector<Color> full(6);
    std::iota(full.begin(), full.end(), 0);
    for (const Incidence& inc : s.padding) l.set(inc, full);

    IncidenceColoring phi = solve(s.graph, l);
    EdgeColoring out;
    for (const auto& [e, inc] : s.incidence_of) out[e] = phi.at(inc);
    if (auto why = check_strong_coloring(b.graph, &lists, out); !why.empty())
        throw InternalError("strong coloring check failed: " + why);
    return out;
}

}  // namespace inclist
