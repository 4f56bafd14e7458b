#include "inclist/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "inclist/structure.hpp"

namespace inclist {

namespace {

std::vector<Edge> numbered(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> out;
    for (const auto& [u, v] : pairs) out.push_back({static_cast<EdgeId>(out.size()), u, v});
    return out;
}

// One pairing-model attempt; empty when it produced a loop (or a parallel
// edge with `simple`).
std::optional<std::vector<std::pair<int, int>>> pairing(const std::vector<int>& degree, bool simple, Rng& rng) {
    std::vector<int> points;
    for (std::size_t v = 0; v < degree.size(); ++v) points.insert(points.end(), degree[v], static_cast<int>(v));
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
        int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
        if (u == v) return std::nullopt;
        if (simple && !seen.insert({u, v}).second) return std::nullopt;
        pairs.push_back({u, v});
    }
    return pairs;
}

Multigraph pairing_graph(const std::vector<int>& degree, bool simple, Rng& rng) {
    for (;;) {
        auto pairs = pairing(degree, simple, rng);
        if (!pairs) continue;
        Multigraph g(static_cast<int>(degree.size()), numbered(*pairs));
        if (is_connected(g)) return g;
    }
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Color> k_subset(int k, int universe, Rng& rng) {
    if (k > universe) throw PreconditionError("list size exceeds the universe");
    std::vector<Color> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Color> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Multigraph named_graph(std::string_view name) {
    if (name == "k4") return Multigraph(4, numbered({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    if (name == "k33")
        return Multigraph(6, numbered({{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    if (name == "prism")
        return Multigraph(6, numbered({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
    if (name == "petersen")
        return Multigraph(10, numbered({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                        {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}}));
    if (name == "tri-multi") return Multigraph(2, numbered({{0, 1}, {0, 1}, {0, 1}}));
    throw PreconditionError("unknown named graph '" + std::string(name) + "'");
}

Multigraph make_cycle(int n) {
    if (n < 2) throw PreconditionError("a cycle needs at least 2 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
    return Multigraph(n, numbered(pairs));
}

Multigraph make_star(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) pairs.push_back({0, i});
    return Multigraph(k + 1, numbered(pairs));
}

Multigraph random_cubic(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("a simple cubic graph needs an even n >= 4");
    return pairing_graph(std::vector<int>(n, 3), true, rng);
}

Multigraph random_cubic_multigraph(int n, Rng& rng) {
    if (n < 2 || n % 2 != 0) throw PreconditionError("a cubic multigraph needs an even n >= 2");
    return pairing_graph(std::vector<int>(n, 3), false, rng);
}

Multigraph random_subcubic_multigraph(int n, double drop, Rng& rng) {
    if (n < 2) throw PreconditionError("need at least 2 vertices");
    std::vector<int> degree(n, 3);
    if (n % 2 == 1) degree.back() = 2;
    std::bernoulli_distribution dropped(drop);
    for (;;) {
        auto pairs = pairing(degree, false, rng);
        if (!pairs) continue;
        std::vector<std::pair<int, int>> kept;
        for (const auto& p : *pairs)
            if (!dropped(rng)) kept.push_back(p);
        Multigraph g(n, numbered(kept));
        if (is_connected(g)) return g;
    }
}

Multigraph random_bridged_cubic(int chain_length, Rng& rng) {
    if (chain_length < 1) throw PreconditionError("chains need at least one block");
    std::vector<std::pair<int, int>> pairs;
    int n = 1;  // vertex 0 is the hub
    auto add_block = [&](const Multigraph& b, int skip) {
        int base = n;
        for (const Edge& e : b.edges())
            if (e.id != skip) pairs.push_back({base + e.u, base + e.v});
        n += b.vertex_count();
        return base;
    };
    for (int chain = 0; chain < 3; ++chain) {
        int port = 0;
        for (int k = 0; k + 1 < chain_length; ++k) {
            Multigraph b = random_cubic(2 * pick(rng, 2, 5), rng);
            const Edge& cut = b.edges()[pick(rng, 0, b.edge_count() - 1)];
            int base = add_block(b, cut.id);
            pairs.push_back({port, base + cut.u});
            port = base + cut.v;
        }
        Multigraph b = random_cubic(2 * pick(rng, 2, 5), rng);
        const Edge& split = b.edges()[pick(rng, 0, b.edge_count() - 1)];
        int base = add_block(b, split.id);
        int w = n++;
        pairs.push_back({base + split.u, w});
        pairs.push_back({w, base + split.v});
        pairs.push_back({port, w});
    }
    return Multigraph(n, numbered(pairs));
}

Multigraph random_semicubic(int core_n, Rng& rng) {
    for (;;) {
        Multigraph h = random_cubic(core_n, rng);
        if (!is_two_connected(h)) continue;
        int subdivisions = pick(rng, 0, 2);
        int removals = pick(rng, subdivisions == 0 ? 1 : 0, 2);
        std::vector<EdgeId> ids(h.edge_count());
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);

        std::set<EdgeId> subdivided, removed;
        std::set<VertexId> used;
        for (EdgeId e : ids) {
            const Edge& ed = h.edge(e);
            if (static_cast<int>(removed.size()) < removals && !used.contains(ed.u) && !used.contains(ed.v)) {
                removed.insert(e);
                used.insert(ed.u);
                used.insert(ed.v);
            } else if (static_cast<int>(subdivided.size()) < subdivisions) {
                subdivided.insert(e);
            }
        }
        std::vector<std::pair<int, int>> pairs;
        int n = h.vertex_count();
        std::vector<VertexId> needs_pendent;
        for (const Edge& e : h.edges()) {
            if (removed.contains(e.id)) {
                needs_pendent.push_back(e.u);
                needs_pendent.push_back(e.v);
            } else if (subdivided.contains(e.id)) {
                int w = n++;
                pairs.push_back({e.u, w});
                pairs.push_back({w, e.v});
                needs_pendent.push_back(w);
            } else {
                pairs.push_back({e.u, e.v});
            }
        }
        int core_size = n;
        for (VertexId v : needs_pendent) pairs.push_back({v, n++});
        Multigraph g(n, numbered(pairs));
        std::vector<VertexId> core(core_size);
        std::iota(core.begin(), core.end(), 0);
        if (g.is_simple() && is_two_connected(induced_subgraph(g, core).graph)) return g;
    }
}

BipartiteGraph random_bipartite23(int n, Rng& rng) {
    Multigraph h = random_subcubic_multigraph(n, 0.1, rng);
    SubdividedGraph s = subdivide(h);
    std::bernoulli_distribution cut(0.15);
    std::set<EdgeId> gone;
    for (const auto& [e, m] : s.midpoint) {
        (void)e;
        if (cut(rng)) gone.insert(s.graph.incident_edges(m)[pick(rng, 0, 1)]);
    }
    const int total = s.graph.vertex_count();
    std::vector<VertexId> relabel(total);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : s.graph.edges())
        if (!gone.contains(e.id)) pairs.push_back({relabel[e.u], relabel[e.v]});
    BipartiteGraph out;
    out.graph = Multigraph(total, numbered(pairs));
    out.side.assign(total, Side::B);
    for (VertexId v = s.original_vertex_count; v < total; ++v) out.side[relabel[v]] = Side::A;
    return out;
}

ListAssignment random_lists(const Multigraph& g, int k, int universe, Rng& rng) {
    ListAssignment out;
    for (const Incidence& inc : incidences(g)) out.set(inc, k_subset(k, universe, rng));
    return out;
}

EdgeLists random_edge_lists(const Multigraph& g, int k, int universe, Rng& rng) {
    EdgeLists out;
    for (const Edge& e : g.edges()) out[e.id] = k_subset(k, universe, rng);
    return out;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto matrix = [n](const Multigraph& g) {
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (const Edge& e : g.edges()) {
            ++m[e.u][e.v];
            ++m[e.v][e.u];
        }
        return m;
    };
    auto ma = matrix(a), mb = matrix(b);
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> taken(n, false);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (taken[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = ma[v][u] == mb[w][map[u]];
            if (!ok) continue;
            map[v] = w;
            taken[w] = true;
            if (self(self, v + 1)) return true;
            taken[w] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

std::vector<Multigraph> connected_cubic_graphs(int n) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("cubic graphs need an even n >= 4");
    std::vector<Multigraph> found;
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> pairs;

    // Vertex by vertex, each vertex picks its remaining neighbours among
    // later vertices.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            Multigraph g(n, numbered(pairs));
            if (!is_connected(g)) return;
            for (const auto& h : found)
                if (isomorphic(g, h)) return;
            found.push_back(std::move(g));
            return;
        }
        int need = 3 - deg[v];
        if (need == 0) {
            self(self, v + 1);
            return;
        }
        std::vector<int> cand;
        for (int w = v + 1; w < n; ++w)
            if (deg[w] < 3) cand.push_back(w);
        if (static_cast<int>(cand.size()) < need) return;
        std::vector<bool> choose(cand.size(), false);
        std::fill(choose.begin(), choose.begin() + need, true);
        do {
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (choose[i]) {
                    pairs.push_back({v, cand[i]});
                    ++deg[v];
                    ++deg[cand[i]];
                }
            self(self, v + 1);
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (choose[i]) {
                    pairs.pop_back();
                    --deg[v];
                    --deg[cand[i]];
                }
        } while (std::prev_permutation(choose.begin(), choose.end()));
    };
    rec(rec, 0);
    return found;
}

}  // namespace inclist
