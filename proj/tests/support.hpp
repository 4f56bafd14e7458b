#pragma once

// Brute-force references for the tests. These deliberately share no code
// with the library beyond the Multigraph container.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "inclist/graph.hpp"

namespace ref {

using namespace inclist;

inline Multigraph graph(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) edges.push_back({i, pairs[i].first, pairs[i].second});
    return Multigraph(n, std::move(edges));
}

// Adjacency straight from the definition: same vertex, same edge, or the
// two vertices are the ends of one of the two edges.
inline bool adjacent(const Multigraph& g, const Incidence& a, const Incidence& b) {
    if (a == b) return false;
    if (a.vertex == b.vertex || a.edge == b.edge) return true;
    for (EdgeId e : {a.edge, b.edge}) {
        const Edge& x = g.edge(e);
        if ((x.u == a.vertex && x.v == b.vertex) || (x.v == a.vertex && x.u == b.vertex)) return true;
    }
    return false;
}

inline std::vector<Incidence> all_incidences(const Multigraph& g) {
    std::vector<Incidence> out;
    for (const Edge& e : g.edges()) {
        out.push_back({e.u, e.id});
        out.push_back({e.v, e.id});
    }
    return out;
}

// Connectivity after dropping some vertices and/or edges.
inline bool connected_without(const Multigraph& g, std::set<VertexId> gone_v, std::set<EdgeId> gone_e) {
    std::vector<int> parent(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Edge& e : g.edges())
        if (!gone_e.contains(e.id) && !gone_v.contains(e.u) && !gone_v.contains(e.v)) parent[find(e.u)] = find(e.v);
    std::set<int> roots;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone_v.contains(v)) roots.insert(find(v));
    return roots.size() <= 1;
}

inline std::set<EdgeId> bridges(const Multigraph& g) {
    std::set<EdgeId> out;
    for (const Edge& e : g.edges())
        if (!connected_without(g, {}, {e.id})) out.insert(e.id);
    return out;
}

inline bool two_connected(const Multigraph& g) {
    if (g.vertex_count() < 3 || !connected_without(g, {}, {})) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!connected_without(g, {v}, {})) return false;
    return true;
}

// Size of a maximum matching by exhaustive search over edges.
inline int max_matching_size(const Multigraph& g) {
    const auto& es = g.edges();
    std::vector<bool> used(g.vertex_count(), false);
    std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
        if (i == es.size()) return 0;
        int best = go(i + 1);
        const Edge& e = es[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            best = std::max(best, 1 + go(i + 1));
            used[e.u] = used[e.v] = false;
        }
        return best;
    };
    return go(0);
}

// Is there a proper incidence coloring from {0..k-1}? Plain DFS, tiny graphs only.
inline bool k_colorable(const Multigraph& g, int k) {
    auto inc = all_incidences(g);
    std::vector<int> col(inc.size(), -1);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == inc.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (col[j] == c && ref::adjacent(g, inc[i], inc[j])) ok = false;
            if (!ok) continue;
            col[i] = c;
            if (go(i + 1)) return true;
        }
        col[i] = -1;
        return false;
    };
    return go(0);
}

inline int girth(const Multigraph& g) {
    int best = 1 << 30;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int x = q[h];
            for (EdgeId e : g.incident_edges(x)) {
                if (e == via[x]) continue;
                int y = g.other_end(e, x);
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    via[y] = e;
                    q.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace ref
