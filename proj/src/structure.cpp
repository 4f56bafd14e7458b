#include "inclist/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace inclist {

namespace {

// One iterative DFS pass computing entry times and low-links. The callbacks
// see tree edges as they finish and non-tree edges toward ancestors.
struct LowLink {
    std::vector<int> tin, low;
    std::vector<EdgeId> parent_edge;
    std::vector<VertexId> parent;
};

template <class OnTreeFinish, class OnBack, class OnTreeEnter>
LowLink run_lowlink(const Multigraph& g, OnTreeEnter on_enter, OnBack on_back, OnTreeFinish on_finish) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    LowLink ll{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<EdgeId>(n, -1),
               std::vector<VertexId>(n, -1)};
    int timer = 0;
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (ll.tin[s] != -1) continue;
        ll.tin[s] = ll.low[s] = timer++;
        std::vector<Frame> stack{{s, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident_edges(f.v);
            if (f.next < inc.size()) {
                const EdgeId e = inc[f.next++];
                if (e == ll.parent_edge[f.v]) continue;
                const VertexId w = g.other_end(e, f.v);
                if (ll.tin[w] == -1) {
                    ll.tin[w] = ll.low[w] = timer++;
                    ll.parent_edge[w] = e;
                    ll.parent[w] = f.v;
                    on_enter(e);
                    stack.push_back({w, 0});
                } else if (ll.tin[w] < ll.tin[f.v]) {
                    ll.low[f.v] = std::min(ll.low[f.v], ll.tin[w]);
                    on_back(e);
                }
            } else {
                const VertexId v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    const VertexId p = stack.back().v;
                    ll.low[p] = std::min(ll.low[p], ll.low[v]);
                    on_finish(v, p, ll);
                }
            }
        }
    }
    return ll;
}

}  // namespace

std::set<EdgeId> cut_edges(const Multigraph& g) {
    std::set<EdgeId> out;
    run_lowlink(
        g, [](EdgeId) {}, [](EdgeId) {},
        [&](VertexId v, VertexId p, const LowLink& ll) {
            if (ll.low[v] > ll.tin[p]) out.insert(ll.parent_edge[v]);
        });
    return out;
}

std::vector<VertexId> cut_vertices(const Multigraph& g) {
    std::vector<int> child_count(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<bool> cut(static_cast<std::size_t>(g.vertex_count()), false);
    LowLink ll = run_lowlink(
        g, [](EdgeId) {}, [](EdgeId) {},
        [&](VertexId v, VertexId p, const LowLink& l) {
            ++child_count[p];
            if (l.parent[p] != -1 && l.low[v] >= l.tin[p]) cut[p] = true;
        });
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const bool is_root = ll.parent[v] == -1;
        if ((is_root && child_count[v] > 1) || (!is_root && cut[v])) out.push_back(v);
    }
    return out;
}

bool is_two_connected(const Multigraph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

std::vector<std::vector<EdgeId>> biconnected_blocks(const Multigraph& g) {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<EdgeId> edge_stack;
    run_lowlink(
        g, [&](EdgeId e) { edge_stack.push_back(e); }, [&](EdgeId e) { edge_stack.push_back(e); },
        [&](VertexId v, VertexId p, const LowLink& ll) {
            if (ll.low[v] < ll.tin[p]) return;
            std::vector<EdgeId> block;
            const EdgeId tree = ll.parent_edge[v];
            while (true) {
                const EdgeId e = edge_stack.back();
                edge_stack.pop_back();
                block.push_back(e);
                if (e == tree) break;
            }
            std::sort(block.begin(), block.end());
            blocks.push_back(std::move(block));
        });
    return blocks;
}

// ---------------------------------------------------------------------------

bool is_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    std::set<EdgeId> seen;
    for (EdgeId id : edges) {
        if (!g.has_edge(id) || !seen.insert(id).second) return false;
        const Edge& e = g.edge(id);
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
    }
    return true;
}

namespace {

// Edmonds' algorithm on the underlying simple graph, O(V^3).
class Blossom {
public:
    explicit Blossom(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1), parent_(n_), base_(n_),
          used_(n_), in_blossom_(n_) {}

    std::vector<int> solve() {
        // Greedy start; augmenting paths fix the rest.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                const int pv = parent_[u];
                const int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = true;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Multigraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> adj(n);
    std::map<std::pair<VertexId, VertexId>, EdgeId> pair_edge;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (pair_edge.emplace(key, e.id).second) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    const std::vector<int> mate = Blossom(std::move(adj)).solve();
    Matching out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) out.edges.push_back(pair_edge.at({v, mate[v]}));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// ---------------------------------------------------------------------------

std::string check_decomposition(const Multigraph& g, const OneTwoDecomposition& d) {
    for (const Edge& e : g.edges()) {
        const bool in1 = d.e1.contains(e.id), in2 = d.e2.contains(e.id);
        if (in1 == in2) return "edge " + std::to_string(e.id) + " is not in exactly one part";
    }
    if (d.e1.size() + d.e2.size() != static_cast<std::size_t>(g.edge_count())) return "parts contain unknown edges";
    std::vector<int> deg1(static_cast<std::size_t>(g.vertex_count()), 0), deg2(deg1);
    for (EdgeId id : d.e1) {
        ++deg1[g.edge(id).u];
        ++deg1[g.edge(id).v];
    }
    for (EdgeId id : d.e2) {
        ++deg2[g.edge(id).u];
        ++deg2[g.edge(id).v];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (deg1[v] != 1) return "vertex " + std::to_string(v) + " is not covered exactly once by E1";
        if (deg2[v] != 0 && deg2[v] != 2) return "vertex " + std::to_string(v) + " has E2-degree " + std::to_string(deg2[v]);
        auto it = d.matched_edge.find(v);
        if (it == d.matched_edge.end() || !d.e1.contains(it->second) || !g.is_endpoint(v, it->second))
            return "matched edge of vertex " + std::to_string(v) + " is wrong";
    }
    return {};
}

OneTwoDecomposition decomposition_from_matching(const Multigraph& g, const std::vector<EdgeId>& perfect_matching) {
    OneTwoDecomposition d;
    d.e1.insert(perfect_matching.begin(), perfect_matching.end());
    for (const Edge& e : g.edges())
        if (!d.e1.contains(e.id)) d.e2.insert(e.id);
    for (EdgeId id : d.e1) {
        d.matched_edge[g.edge(id).u] = id;
        d.matched_edge[g.edge(id).v] = id;
    }
    if (auto why = check_decomposition(g, d); !why.empty()) throw PreconditionError("not a (1,2)-decomposition: " + why);
    return d;
}

OneTwoDecomposition one_two_decomposition(const Multigraph& g) {
    if (!is_connected(g) || g.vertex_count() < 2) throw PreconditionError("graph must be connected");
    std::vector<VertexId> pendent;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) pendent.push_back(v);
        else if (g.degree(v) != 3) throw PreconditionError("vertex degrees must be 3, with at most one pendent vertex");
    }
    if (pendent.size() > 1) throw PreconditionError("more than one pendent vertex");
    if (pendent.empty()) {
        if (!is_two_connected(g)) throw PreconditionError("cubic graph is not 2-connected");
    } else {
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != pendent.front()) rest.push_back(v);
        if (!is_two_connected(induced_subgraph(g, rest).graph))
            throw PreconditionError("graph minus its pendent vertex is not 2-connected");
    }
    Matching m = maximum_matching(g);
    if (!m.is_perfect(g)) throw InternalError("no perfect matching found for a graph that must have one");
    return decomposition_from_matching(g, m.edges);
}

// ---------------------------------------------------------------------------

const std::vector<EdgeId>& CycleGraph::connecting(int i, int j) const {
    static const std::vector<EdgeId> none;
    auto it = connections.find({std::min(i, j), std::max(i, j)});
    return it == connections.end() ? none : it->second;
}

std::vector<int> CycleGraph::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [key, edges] : connections) {
        if (key.first == i) out.push_back(key.second);
        else if (key.second == i) out.push_back(key.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleGraph cycle_graph(const Multigraph& g, const OneTwoDecomposition& d) {
    CycleGraph cg;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    cg.cycle_of.assign(n, -1);
    auto e2_at = [&](VertexId v) {
        std::vector<EdgeId> out;
        for (EdgeId e : g.incident_edges(v))
            if (d.e2.contains(e)) out.push_back(e);
        return out;
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (cg.cycle_of[s] != -1) continue;
        auto start_edges = e2_at(s);
        if (start_edges.empty()) continue;
        if (start_edges.size() != 2) throw PreconditionError("E2 is not 2-regular");
        // Head toward the smaller neighbour; ties (a 2-cycle) by edge id.
        EdgeId first = start_edges[0];
        const VertexId a = g.other_end(start_edges[0], s), b = g.other_end(start_edges[1], s);
        if (b < a) first = start_edges[1];
        std::vector<VertexId> cyc{s};
        std::vector<EdgeId> cedges{first};
        const int id = static_cast<int>(cg.cycles.size());
        cg.cycle_of[s] = id;
        EdgeId prev = first;
        VertexId cur = g.other_end(first, s);
        while (cur != s) {
            if (cg.cycle_of[cur] != -1) throw PreconditionError("E2 is not a union of disjoint cycles");
            cg.cycle_of[cur] = id;
            cyc.push_back(cur);
            auto here = e2_at(cur);
            if (here.size() != 2) throw PreconditionError("E2 is not 2-regular");
            const EdgeId next = here[0] == prev ? here[1] : here[0];
            cedges.push_back(next);
            prev = next;
            cur = g.other_end(next, cur);
        }
        cg.cycles.push_back(std::move(cyc));
        cg.cycle_edges.push_back(std::move(cedges));
    }
    for (const Edge& e : g.edges()) {
        const int ci = cg.cycle_of[e.u], cj = cg.cycle_of[e.v];
        if (ci == -1 || cj == -1 || ci == cj) continue;
        cg.connections[{std::min(ci, cj), std::max(ci, cj)}].push_back(e.id);
        cg.connector_ends[e.id] = {e.u, e.v};
    }
    for (auto& [key, edges] : cg.connections) std::sort(edges.begin(), edges.end());
    return cg;
}

std::set<EdgeId> CycleTree::tree_edges() const {
    std::set<EdgeId> out;
    for (EdgeId e : cut_edge)
        if (e != -1) out.insert(e);
    return out;
}

CycleTree dfs_cycle_tree(const CycleGraph& cg, int root, std::optional<int> prefer_first,
                         std::optional<EdgeId> forbidden_cut_edge) {
    const int k = cg.size();
    if (root < 0 || root >= k) throw PreconditionError("root cycle out of range");
    CycleTree t;
    t.root = root;
    t.parent.assign(k, -1);
    t.cut_edge.assign(k, -1);
    t.parent_vertex.assign(k, -1);
    t.attach_vertex.assign(k, -1);
    t.children.assign(k, {});
    std::vector<bool> visited(k, false);

    auto usable_edge = [&](int a, int b) -> std::optional<EdgeId> {
        for (EdgeId e : cg.connecting(a, b))
            if (!forbidden_cut_edge || e != *forbidden_cut_edge) return e;
        return std::nullopt;
    };
    auto explore_order = [&](int c) {
        std::vector<int> nbrs = cg.neighbors(c);
        if (prefer_first) {
            auto it = std::find(nbrs.begin(), nbrs.end(), *prefer_first);
            if (it != nbrs.end()) std::rotate(nbrs.begin(), it, it + 1);
        }
        return nbrs;
    };

    struct Frame {
        int cycle;
        std::vector<int> nbrs;
        std::size_t next = 0;
    };
    visited[root] = true;
    t.order.push_back(root);
    std::vector<Frame> stack;
    stack.push_back({root, explore_order(root)});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const int nb = f.nbrs[f.next++];
        if (visited[nb]) continue;
        auto e = usable_edge(f.cycle, nb);
        if (!e) continue;
        const int c = f.cycle;
        visited[nb] = true;
        t.order.push_back(nb);
        t.parent[nb] = c;
        t.cut_edge[nb] = *e;
        t.children[c].push_back(nb);
        const auto [eu, ev] = cg.connector_ends.at(*e);
        const bool u_on_child = cg.cycle_of[eu] == nb;
        t.attach_vertex[nb] = u_on_child ? eu : ev;
        t.parent_vertex[nb] = u_on_child ? ev : eu;
        stack.push_back({nb, explore_order(nb)});
    }
    if (static_cast<int>(t.order.size()) != k)
        throw CycleTreeInfeasible("a cycle is reachable only through the forbidden cut edge");
    return t;
}

std::string check_cycle_tree(const Multigraph& g, const OneTwoDecomposition& d, const CycleGraph& cg,
                             const CycleTree& t) {
    if (static_cast<int>(t.order.size()) != cg.size()) return "ordering does not cover every cycle";
    std::vector<int> pos(static_cast<std::size_t>(cg.size()), -1);
    for (std::size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = static_cast<int>(i);
    for (int c = 0; c < cg.size(); ++c) {
        if (c == t.root) continue;
        const int p = t.parent[c];
        if (p < 0 || pos[p] >= pos[c]) return "parent of cycle " + std::to_string(c) + " is not earlier";
        const auto& cands = cg.connecting(p, c);
        if (std::find(cands.begin(), cands.end(), t.cut_edge[c]) == cands.end())
            return "cut edge of cycle " + std::to_string(c) + " does not join it to its parent";
        if (cg.cycle_of[t.parent_vertex[c]] != p || cg.cycle_of[t.attach_vertex[c]] != c)
            return "parent vertex of cycle " + std::to_string(c) + " is misplaced";
    }
    std::vector<EdgeId> edges(d.e2.begin(), d.e2.end());
    const auto tree = t.tree_edges();
    edges.insert(edges.end(), tree.begin(), tree.end());
    const Subgraph h = edge_subgraph(g, edges);
    std::set<std::set<EdgeId>> cycle_sets;
    for (const auto& ce : cg.cycle_edges) cycle_sets.insert(std::set<EdgeId>(ce.begin(), ce.end()));
    for (const auto& block : biconnected_blocks(h.graph)) {
        if (block.size() == 1) continue;
        if (!cycle_sets.contains(std::set<EdgeId>(block.begin(), block.end())))
            return "a block is neither a cycle nor a single edge";
    }
    if (!is_connected(h.graph)) return "cycle-tree is disconnected";
    std::vector<EdgeId> pendent_edges;
    for (const Edge& e : h.graph.edges())
        if (h.graph.degree(e.u) == 1 || h.graph.degree(e.v) == 1) pendent_edges.push_back(e.id);
    for (std::size_t i = 0; i < pendent_edges.size(); ++i)
        for (std::size_t j = i + 1; j < pendent_edges.size(); ++j) {
            const Edge& a = h.graph.edge(pendent_edges[i]);
            const Edge& b = h.graph.edge(pendent_edges[j]);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return "two pendent edges are adjacent";
        }
    return {};
}

// ---------------------------------------------------------------------------

std::array<Incidence, 5> Triple::incidences() const {
    return {Incidence{u0, e_v0}, Incidence{v0, e_v0}, Incidence{u1, e_v1}, Incidence{v1, e_v1},
            Incidence{v2, v1v2}};
}

namespace {

EdgeId cycle_edge_between(const Multigraph& g, const std::vector<VertexId>& cycle, VertexId a, VertexId b) {
    const auto n = cycle.size();
    for (std::size_t k = 0; k < n; ++k) {
        const VertexId x = cycle[k], y = cycle[(k + 1) % n];
        if ((x == a && y == b) || (x == b && y == a)) {
            auto es = g.edges_between(a, b);
            if (es.size() != 1) throw PreconditionError("cycle edge is not unique; the graph must be simple");
            return es.front();
        }
    }
    throw PreconditionError("vertices are not consecutive on the cycle");
}

Triple make_triple(const Multigraph& g, const OneTwoDecomposition& d, const std::vector<VertexId>& cycle,
                   VertexId v0, VertexId v1, VertexId v2) {
    Triple tr;
    tr.v0 = v0;
    tr.v1 = v1;
    tr.v2 = v2;
    tr.e_v0 = d.matched(v0);
    tr.e_v1 = d.matched(v1);
    tr.u0 = g.other_end(tr.e_v0, v0);
    tr.u1 = g.other_end(tr.e_v1, v1);
    tr.v0v1 = cycle_edge_between(g, cycle, v0, v1);
    tr.v1v2 = cycle_edge_between(g, cycle, v1, v2);
    return tr;
}

std::vector<VertexId> walk_from(const std::vector<VertexId>& cycle, std::size_t start, bool forward) {
    const auto n = cycle.size();
    std::vector<VertexId> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(cycle[forward ? (start + k) % n : (start + n - k) % n]);
    return out;
}

std::size_t index_of(const std::vector<VertexId>& cycle, VertexId v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end()) throw PreconditionError("vertex " + std::to_string(v) + " is not on the cycle");
    return static_cast<std::size_t>(it - cycle.begin());
}

}  // namespace

std::vector<VertexId> root_chord_labelling(const Multigraph& g, const std::vector<VertexId>& cycle, EdgeId e_star) {
    const auto n = cycle.size();
    if (n < 7) throw PreconditionError("root-chord case needs a cycle of length at least 7");
    const Edge& es = g.edge(e_star);
    for (VertexId x0 : {std::min(es.u, es.v), std::max(es.u, es.v)}) {
        const VertexId x1 = es.u == x0 ? es.v : es.u;
        auto i0 = std::find(cycle.begin(), cycle.end(), x0);
        if (i0 == cycle.end()) continue;
        const auto s = static_cast<std::size_t>(i0 - cycle.begin());
        for (bool forward : {true, false}) {
            auto x = walk_from(cycle, s, forward);
            if (x[1] != x1) continue;
            if (g.are_neighbors(x[2], x[4]) && g.are_neighbors(x[3], x[5]) && g.are_neighbors(x[1], x[6])) return x;
        }
    }
    throw PreconditionError("e* does not sit on the root cycle with chords x2x4, x3x5, x1x6");
}

std::vector<VertexId> gadget_labelling(const Multigraph& g, const std::vector<VertexId>& cycle, EdgeId e_star) {
    if (cycle.size() != 6) throw PreconditionError("gadget cycle must have length 6");
    const Edge& es = g.edge(e_star);
    for (VertexId x1 : {std::min(es.u, es.v), std::max(es.u, es.v)}) {
        auto it = std::find(cycle.begin(), cycle.end(), x1);
        if (it == cycle.end()) continue;
        for (bool forward : {true, false}) {
            auto x = walk_from(cycle, static_cast<std::size_t>(it - cycle.begin()), forward);
            if (g.are_neighbors(x[1], x[3]) && g.are_neighbors(x[2], x[4])) return x;
        }
    }
    throw PreconditionError("cycle is not a gadget 6-cycle at e*");
}

std::string check_triple(const Multigraph& g, const OneTwoDecomposition& d, const std::vector<VertexId>& cycle,
                         const Triple& tr, std::optional<EdgeId> e_star, bool ignore_pin) {
    if (tr.v0 == tr.v1 || tr.v1 == tr.v2 || tr.v0 == tr.v2) return "triple vertices are not distinct";
    const auto n = cycle.size();
    const std::size_t i1 = index_of(cycle, tr.v1);
    const VertexId next = cycle[(i1 + 1) % n], prev = cycle[(i1 + n - 1) % n];
    if (!((tr.v0 == prev && tr.v2 == next) || (tr.v0 == next && tr.v2 == prev)))
        return "triple is not consecutive along the cycle";
    if (tr.e_v0 != d.matched(tr.v0) || tr.e_v1 != d.matched(tr.v1)) return "matching edges are wrong";
    if (n == 3) {
        if (g.joins(tr.e_v0, tr.v0, tr.v2)) return "(A1) fails: e_v0 joins v0 and v2";
    } else if (g.are_neighbors(tr.v0, tr.v2)) {
        return "(A1) fails: v0v2 is an edge";
    }
    const std::set<VertexId> ends0{tr.v0, tr.u0}, ends1{tr.v1, tr.u1};
    for (VertexId x : ends0)
        if (ends1.contains(x)) return "(A2) fails: e_v0 and e_v1 share an endpoint";
    if (tr.u1 == tr.v2) return "u1 equals v2";
    if (e_star && !ignore_pin) {
        const Edge& es = g.edge(*e_star);
        for (VertexId x : {es.u, es.v}) {
            if (ends0.contains(x) || ends1.contains(x)) return "(A2) fails: e* shares an endpoint with e_v0 or e_v1";
            if (x == tr.v2) return "(A3) fails: v2 is an endpoint of e*";
        }
    }
    return {};
}

Triple find_triple(const Multigraph& g, const OneTwoDecomposition& d, const CycleGraph& cg, const CycleTree& t,
                   int c, std::optional<EdgeId> e_star, PinCase pin_case) {
    const auto& cycle = cg.cycles.at(c);
    const auto n = cycle.size();
    auto ok = [&](const Triple& tr, bool ignore_pin) { return check_triple(g, d, cycle, tr, e_star, ignore_pin).empty(); };

    if (t.m() == 0 && c == t.root) {
        if (pin_case == PinCase::RootChord) {
            if (!e_star) throw PreconditionError("root-chord case needs e*");
            auto x = root_chord_labelling(g, cycle, *e_star);
            Triple tr = make_triple(g, d, cycle, x[4], x[5], x[6]);
            if (!ok(tr, false)) throw InternalError("triple (x4,x5,x6) violates its conditions");
            return tr;
        }
        if (n < 7) throw PreconditionError("the unique cycle must have length at least 7");
        auto on_pin = [&](VertexId v) { return e_star && g.is_endpoint(v, *e_star); };
        for (std::size_t s = 0; s < n; ++s) {
            std::array<VertexId, 5> y{};
            bool clear = true;
            for (std::size_t k = 0; k < 5; ++k) {
                y[k] = cycle[(s + k) % n];
                clear = clear && !on_pin(y[k]);
            }
            if (!clear) continue;
            Triple tr;
            if (!g.are_neighbors(y[0], y[2])) tr = make_triple(g, d, cycle, y[0], y[1], y[2]);
            else if (!g.are_neighbors(y[1], y[3])) tr = make_triple(g, d, cycle, y[1], y[2], y[3]);
            else tr = make_triple(g, d, cycle, y[4], y[3], y[2]);
            if (!ok(tr, false)) throw InternalError("window triple violates its conditions");
            return tr;
        }
        throw PreconditionError("no five consecutive cycle vertices avoid e*");
    }

    if (!t.is_pendent(c)) throw PreconditionError("triples exist only on the unique cycle or a non-root pendent cycle");
    const VertexId q = t.attach_vertex.at(c);
    const std::size_t iq = index_of(cycle, q);
    std::vector<Triple> candidates;
    for (bool forward : {true, false}) {
        auto w = walk_from(cycle, iq, forward);
        candidates.push_back(make_triple(g, d, cycle, w[2], w[1], w[0]));
    }
    for (const Triple& tr : candidates)
        if (ok(tr, false)) return tr;
    for (Triple tr : candidates) {
        if (ok(tr, true)) {
            tr.touches_pin = true;
            return tr;
        }
    }
    throw InternalError("no admissible triple on pendent cycle " + std::to_string(c));
}

}  // namespace inclist
