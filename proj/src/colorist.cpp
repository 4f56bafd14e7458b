#include "inclist/colorist.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "inclist/oracle.hpp"

namespace inclist {

void SolveStats::merge(const SolveStats& o) {
    low_degree_extensions += o.low_degree_extensions;
    parallel_pair_extensions += o.parallel_pair_extensions;
    triple_edge_components += o.triple_edge_components;
    cubic_components += o.cubic_components;
    bridged_components += o.bridged_components;
    pinned_pendent_runs += o.pinned_pendent_runs;
    small_base_cases += o.small_base_cases;
    cycle_tree_runs += o.cycle_tree_runs;
    for (std::size_t i = 0; i < pin_cases.size(); ++i) pin_cases[i] += o.pin_cases[i];
    gadgets_attached += o.gadgets_attached;
    gadget_rematches += o.gadget_rematches;
    triples_touching_pin += o.triples_touching_pin;
    deferred_checks += o.deferred_checks;
    deferred_max_forbidden = std::max(deferred_max_forbidden, o.deferred_max_forbidden);
    deferred_violations += o.deferred_violations;
}

namespace {

constexpr std::size_t kListSize = 6;

std::vector<Color> sorted_unique(std::vector<Color> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Color> minus(const std::vector<Color>& a, const std::vector<Color>& b) {
    std::vector<Color> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Color> intersect(const std::vector<Color>& a, const std::vector<Color>& b) {
    std::vector<Color> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool has(const std::vector<Color>& a, Color c) { return std::binary_search(a.begin(), a.end(), c); }

// Six colors per incidence: the smallest ones, keeping a pinned color.
ListAssignment truncate_lists(const Multigraph& g, const ListAssignment& lists, const PinnedEdge* pin) {
    ListAssignment out;
    for (const Incidence& inc : incidences(g)) {
        if (!lists.contains(inc)) throw PreconditionError("no list for incidence " + to_string(inc));
        const auto& full = lists.at(inc);
        if (full.size() < kListSize)
            throw PreconditionError("list of " + to_string(inc) + " has fewer than 6 colors");
        std::vector<Color> l(full.begin(), full.begin() + kListSize);
        if (pin && inc.edge == pin->edge) {
            Color keep = inc.vertex == pin->u ? pin->color_u : pin->color_v;
            if (!has(l, keep)) {
                l.pop_back();
                l.push_back(keep);
            }
        }
        out.set(inc, std::move(l));
    }
    return out;
}

ListAssignment localize(const ListAssignment& lists, const Subgraph& s) {
    ListAssignment out;
    for (const Incidence& inc : incidences(s.graph))
        out.set(inc, lists.at(Incidence{s.to_parent.at(inc.vertex), inc.edge}));
    return out;
}

void globalize(const IncidenceColoring& local, const Subgraph& s, IncidenceColoring& out) {
    for (const auto& [inc, c] : local) out.set(Incidence{s.to_parent.at(inc.vertex), inc.edge}, c);
}

// Greedy coloring on top of a partial coloring.
class Painter {
public:
    Painter(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& phi, SolveStats* stats)
        : g_(g), lists_(lists), phi_(phi), stats_(stats) {}

    std::vector<Color> forbidden(const Incidence& inc) const {
        std::vector<Color> out;
        for (const Incidence& nb : neighborhood(g_, inc))
            if (auto c = phi_.get(nb)) out.push_back(*c);
        return sorted_unique(std::move(out));
    }

    std::vector<Color> available(const Incidence& inc) const { return minus(lists_.at(inc), forbidden(inc)); }

    void paint(const Incidence& inc, const std::string& step) {
        auto avail = available(inc);
        if (avail.empty()) throw InternalError(step + ": no color left for " + to_string(inc));
        phi_.set(inc, avail.front());
    }

    // Places a prescribed color after checking it against colored neighbours.
    void place(const Incidence& inc, Color c, const std::string& step) {
        if (!lists_.allows(inc, c) || has(forbidden(inc), c))
            throw InternalError(step + ": color " + std::to_string(c) + " not usable at " + to_string(inc));
        phi_.set(inc, c);
    }

    bool colored(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return phi_.contains({ed.u, e}) && phi_.contains({ed.v, e});
    }

    bool untouched(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return !phi_.contains({ed.u, e}) && !phi_.contains({ed.v, e});
    }

    bool has_untouched_neighbor_edge(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        for (VertexId w : {ed.u, ed.v})
            for (EdgeId f : g_.incident_edges(w))
                if (f != e && untouched(f)) return true;
        return false;
    }

    // Both incidences of e, jointly: the lexicographically smallest pair.
    void paint_edge(EdgeId e, const std::string& step) {
        const Edge& ed = g_.edge(e);
        std::vector<Incidence> todo;
        for (VertexId w : {std::min(ed.u, ed.v), std::max(ed.u, ed.v)})
            if (!phi_.contains({w, e})) todo.push_back({w, e});
        if (todo.empty()) return;
        if (todo.size() == 1) {
            paint(todo[0], step);
            return;
        }
        for (Color a : available(todo[0])) {
            phi_.set(todo[0], a);
            auto rest = available(todo[1]);
            if (!rest.empty()) {
                phi_.set(todo[1], rest.front());
                return;
            }
            phi_.erase(todo[0]);
        }
        throw InternalError(step + ": edge " + std::to_string(e) + " cannot be colored");
    }

    // An edge colored where some incident edge is still completely uncolored.
    void extend_edge(EdgeId e, const std::string& step) {
        if (colored(e)) return;
        if (!has_untouched_neighbor_edge(e))
            throw InternalError(step + ": edge " + std::to_string(e) + " has no uncolored incident edge");
        paint_edge(e, step);
    }

    // One of the two incidences on v0v1 that are colored last.
    void paint_deferred(const Incidence& inc, const std::string& step) {
        auto in_list = intersect(lists_.at(inc), forbidden(inc));
        int count = static_cast<int>(in_list.size());
        if (stats_) {
            ++stats_->deferred_checks;
            stats_->deferred_max_forbidden = std::max(stats_->deferred_max_forbidden, count);
        }
        if (count > 5) {
            if (stats_) ++stats_->deferred_violations;
            throw InternalError(step + ": " + to_string(inc) + " sees " + std::to_string(count) +
                                " forbidden colors from its list");
        }
        paint(inc, step);
    }

private:
    const Multigraph& g_;
    const ListAssignment& lists_;
    IncidenceColoring& phi_;
    SolveStats* stats_;
};

// Local exact search over a few incidences, the rest of phi fixed.
bool complete_locally(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& phi,
                      const std::vector<Incidence>& items) {
    Painter painter(g, lists, phi, nullptr);
    std::vector<Incidence> todo;
    for (const Incidence& inc : items)
        if (!phi.contains(inc)) todo.push_back(inc);
    ConflictProblem p;
    p.conflicts.resize(todo.size());
    for (std::size_t i = 0; i < todo.size(); ++i) {
        p.lists.push_back(painter.available(todo[i]));
        for (std::size_t j = 0; j < todo.size(); ++j)
            if (i != j && adjacent(g, todo[i], todo[j])) p.conflicts[i].push_back(static_cast<int>(j));
    }
    auto r = solve_conflict_problem(p, SearchBudget{});
    if (r.status != SearchStatus::Found) return false;
    for (std::size_t i = 0; i < todo.size(); ++i) phi.set(todo[i], r.colors[i]);
    return true;
}

void extend_low_degree(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& phi, VertexId v,
                       const std::vector<EdgeId>& edges) {
    Painter painter(g, lists, phi, nullptr);
    for (EdgeId e : edges) painter.paint({g.other_end(e, v), e}, "low-degree extension");
    for (EdgeId e : edges) painter.paint({v, e}, "low-degree extension");
}

// u and v joined by e1, e2; a = uu1 and b = vv1 their other edges.
void extend_parallel_pair(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& phi, VertexId u,
                          VertexId v, EdgeId e1, EdgeId e2, EdgeId a, EdgeId b) {
    Painter painter(g, lists, phi, nullptr);
    const std::string step = "parallel-pair extension";
    VertexId u1 = g.other_end(a, u);
    VertexId v1 = g.other_end(b, v);
    painter.paint({u1, a}, step);
    painter.paint({v1, b}, step);

    Incidence ua{u, a}, vb{v, b};
    auto lu = painter.available(ua);
    auto lv = painter.available(vb);
    auto common = intersect(lu, lv);
    if (!common.empty()) {
        // A shared color on the two non-adjacent incidences.
        phi.set(ua, common.front());
        phi.set(vb, common.front());
    } else {
        auto le1 = painter.available({u, e1});
        std::vector<Color> uni;
        std::set_union(lu.begin(), lu.end(), lv.begin(), lv.end(), std::back_inserter(uni));
        auto outside = minus(uni, le1);
        if (!outside.empty()) {
            Color c = outside.front();
            phi.set(has(lu, c) ? ua : vb, c);
        }
    }
    std::vector<Incidence> rest{ua, vb, {u, e1}, {v, e1}, {u, e2}, {v, e2}};
    if (!complete_locally(g, lists, phi, rest)) throw InternalError(step + ": no completion");
}

// The five-color selection, trying the preferred branch of the construction
// first and falling back to the other admissible choices in a fixed order.
struct Part1 {
    Color beta, gamma, eta;
};

std::vector<Part1> part1_candidates(const SelectionLists& s) {
    const auto& q = s.l_v1;
    std::vector<Part1> out;
    auto bce = intersect(intersect(s.b, s.c), s.e);
    for (Color mu : bce) out.push_back({mu, mu, mu});

    auto bc = intersect(s.b, s.c), be = intersect(s.b, s.e), ce = intersect(s.c, s.e);
    bool disjoint = bc.empty() && be.empty() && ce.empty();
    if (disjoint) {
        auto ob = minus(s.b, q), oc = minus(s.c, q), oe = minus(s.e, q);
        if (!s.b.empty() && !s.c.empty() && !s.e.empty()) {
            if (!ob.empty() && !oc.empty()) out.push_back({ob.front(), oc.front(), s.e.front()});
            if (!ob.empty() && !oe.empty()) out.push_back({ob.front(), s.c.front(), oe.front()});
            if (!oc.empty() && !oe.empty()) out.push_back({s.b.front(), oc.front(), oe.front()});
        }
        return out;
    }

    // mu on two incidences of a pair; the third avoids q unless mu does.
    auto with_pair = [&](const std::vector<Color>& pair, const std::vector<Color>& third, int which) {
        std::vector<Color> order = minus(pair, q);
        for (Color c : intersect(pair, q)) order.push_back(c);
        for (Color mu : order) {
            auto pool = has(q, mu) ? minus(third, q) : third;
            pool = minus(pool, {mu});
            if (pool.empty()) continue;
            Color z = pool.front();
            if (which == 0) out.push_back({mu, mu, z});
            if (which == 1) out.push_back({mu, z, mu});
            if (which == 2) out.push_back({z, mu, mu});
        }
    };
    with_pair(bc, s.e, 0);
    with_pair(be, s.c, 1);
    with_pair(ce, s.b, 2);
    return out;
}

std::optional<FiveColorSelection> part2(const SelectionLists& s, const Part1& p) {
    auto a2 = minus(s.a, {p.beta});
    auto d2 = minus(s.d, sorted_unique({p.gamma, p.eta}));
    if (a2.empty() || d2.empty()) return std::nullopt;
    auto both = intersect(a2, d2);
    if (!both.empty()) return FiveColorSelection{both.front(), p.beta, p.gamma, both.front(), p.eta};
    std::vector<Color> uni;
    std::set_union(a2.begin(), a2.end(), d2.begin(), d2.end(), std::back_inserter(uni));
    auto outside = minus(uni, s.l_v0);
    if (outside.empty()) return std::nullopt;
    Color mu = outside.front();
    if (has(a2, mu)) return FiveColorSelection{mu, p.beta, p.gamma, d2.front(), p.eta};
    return FiveColorSelection{a2.front(), p.beta, p.gamma, mu, p.eta};
}

SelectionLists normalized(SelectionLists s) {
    for (auto* v : {&s.a, &s.b, &s.c, &s.d, &s.e, &s.l_v0, &s.l_v1}) *v = sorted_unique(std::move(*v));
    return s;
}

}  // namespace

FiveColorSelection select_five_colors(const SelectionLists& raw) {
    SelectionLists s = normalized(raw);
    for (const Part1& p : part1_candidates(s))
        if (auto f = part2(s, p); f && satisfies_selection(s, *f)) return *f;
    throw InternalError("five-color selection: no admissible choice");
}

bool satisfies_selection(const SelectionLists& raw, const FiveColorSelection& f) {
    SelectionLists s = normalized(raw);
    if (!has(s.a, f.alpha) || !has(s.b, f.beta) || !has(s.c, f.gamma) || !has(s.d, f.delta) || !has(s.e, f.eta))
        return false;
    if (f.alpha == f.beta || f.gamma == f.delta || f.delta == f.eta) return false;
    auto cnt = [](const std::vector<Color>& l, std::vector<Color> cs) {
        cs = sorted_unique(std::move(cs));
        return std::count_if(cs.begin(), cs.end(), [&](Color c) { return has(l, c); });
    };
    return cnt(s.l_v0, {f.alpha, f.delta}) <= 1 && cnt(s.l_v1, {f.beta, f.gamma, f.eta}) <= 1;
}

FiveColorSelection select_for_triple(const Multigraph& g, const ListAssignment& lists, VertexId v0, VertexId v1,
                                  VertexId v2, EdgeId e_v0, EdgeId e_v1) {
    auto single = [&](VertexId a, VertexId b) {
        auto es = g.edges_between(a, b);
        if (es.size() != 1) throw PreconditionError("consecutive triple vertices must be joined by one edge");
        return es.front();
    };
    EdgeId v0v1 = single(v0, v1);
    EdgeId v1v2 = single(v1, v2);
    if (g.are_neighbors(v0, v2)) throw PreconditionError("v0 and v2 are adjacent");
    if (!g.is_endpoint(v0, e_v0) || !g.is_endpoint(v1, e_v1) || e_v0 == v0v1 || e_v1 == v0v1 || e_v1 == v1v2)
        throw PreconditionError("e_v0 and e_v1 must be further edges at v0 and v1");
    VertexId u0 = g.other_end(e_v0, v0), u1 = g.other_end(e_v1, v1);
    if (u0 == u1 || u0 == v1 || u1 == v0) throw PreconditionError("e_v0 and e_v1 share an endpoint");
    if (u1 == v2) throw PreconditionError("e_v1 ends at v2");
    SelectionLists s;
    s.a = lists.at({u0, e_v0});
    s.b = lists.at({v0, e_v0});
    s.c = lists.at({u1, e_v1});
    s.d = lists.at({v1, e_v1});
    s.e = lists.at({v2, v1v2});
    s.l_v0 = lists.at({v0, v0v1});
    s.l_v1 = lists.at({v1, v0v1});
    for (const auto* l : {&s.a, &s.b, &s.c, &s.d, &s.e, &s.l_v0, &s.l_v1})
        if (l->size() < kListSize) throw PreconditionError("selection needs lists of size 6");
    return select_five_colors(s);
}

void greedy_extend_edge(const Multigraph& g, const ListAssignment& lists, IncidenceColoring& coloring, EdgeId e) {
    if (g.max_degree() > 3) throw PreconditionError("graph is not subcubic");
    Painter painter(g, lists, coloring, nullptr);
    if (!painter.untouched(e)) throw PreconditionError("edge " + std::to_string(e) + " is already colored");
    if (!painter.has_untouched_neighbor_edge(e))
        throw PreconditionError("edge " + std::to_string(e) + " has no uncolored incident edge");
    painter.paint_edge(e, "greedy extension");
}

IncidenceColoring reduce_degree_le2(const Multigraph& g, const ListAssignment& lists, VertexId v,
                                    const IncidenceColoring& sub) {
    if (g.degree(v) > 2) throw PreconditionError("vertex has degree above 2");
    IncidenceColoring phi = sub;
    extend_low_degree(g, lists, phi, v, g.incident_edges(v));
    return phi;
}

IncidenceColoring reduce_parallel_pair(const Multigraph& g, const ListAssignment& lists, VertexId u, VertexId v,
                                       const IncidenceColoring& sub) {
    auto between = g.edges_between(u, v);
    if (between.size() != 2 || g.degree(u) != 3 || g.degree(v) != 3)
        throw PreconditionError("need two parallel edges between vertices of degree 3");
    auto third = [&](VertexId w) {
        for (EdgeId e : g.incident_edges(w))
            if (e != between[0] && e != between[1]) return e;
        throw PreconditionError("missing third edge");
    };
    EdgeId a = third(u), b = third(v);
    IncidenceColoring phi = sub;
    extend_parallel_pair(g, lists, phi, u, v, between[0], between[1], a, b);
    return phi;
}

// ---------------------------------------------------------------------------
// Bridges

Subgraph ComponentPlan::star(const Multigraph& g, std::size_t i) const {
    std::set<VertexId> inside(components.at(i).begin(), components.at(i).end());
    std::vector<EdgeId> edges;
    for (const Edge& e : g.edges())
        if (inside.contains(e.u) && inside.contains(e.v)) edges.push_back(e.id);
    edges.insert(edges.end(), attached.at(i).begin(), attached.at(i).end());
    std::sort(edges.begin(), edges.end());
    return edge_subgraph(g, edges);
}

ComponentPlan split_on_cut_edges(const Multigraph& g) {
    if (!g.is_simple() || !is_connected(g) || g.vertex_count() == 0)
        throw PreconditionError("component split needs a simple connected graph");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw PreconditionError("component split needs a cubic graph");
    ComponentPlan plan;
    plan.cut_edges = cut_edges(g);
    if (plan.cut_edges.empty()) throw PreconditionError("graph is 2-connected; no cut edges to split on");

    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<VertexId> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            comps[id].push_back(x);
            for (EdgeId e : g.incident_edges(x)) {
                if (plan.cut_edges.contains(e)) continue;
                VertexId y = g.other_end(e, x);
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }

    // Breadth-first over the tree of components, bridges by increasing id.
    std::vector<int> position(comps.size(), -1);
    std::vector<int> queue{0};
    position[0] = 0;
    plan.entry_edge.push_back(-1);
    plan.entry_from.push_back(-1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (EdgeId e : plan.cut_edges) {
            const Edge& ed = g.edge(e);
            int a = comp[ed.u], b = comp[ed.v];
            if (a != c && b != c) continue;
            int other = a == c ? b : a;
            if (position[other] >= 0) continue;
            position[other] = static_cast<int>(queue.size());
            queue.push_back(other);
            plan.entry_edge.push_back(e);
            plan.entry_from.push_back(position[c]);
        }
    }
    for (int c : queue) {
        plan.components.push_back(comps[c]);
        std::vector<EdgeId> att;
        for (EdgeId e : plan.cut_edges) {
            const Edge& ed = g.edge(e);
            if (comp[ed.u] == c || comp[ed.v] == c) att.push_back(e);
        }
        plan.attached.push_back(std::move(att));
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Gadgets

GadgetAttachment attach_gadgets(const Multigraph& g, std::optional<EdgeId> keep) {
    std::vector<VertexId> pendent;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) pendent.push_back(v);
    if (pendent.empty()) throw PreconditionError("no pendent vertex to attach gadgets to");

    std::optional<VertexId> kept;
    if (keep) {
        const Edge& e = g.edge(*keep);
        if (g.degree(e.u) == 1) kept = e.u;
        else if (g.degree(e.v) == 1) kept = e.v;
        else throw PreconditionError("kept edge is not pendent");
    }

    GadgetAttachment out;
    out.original_vertex_count = g.vertex_count();
    std::vector<VertexId> order = pendent;
    std::optional<VertexId> survivor;
    if (order.size() % 2 == 1) {
        survivor = kept ? *kept : order.back();
        order.erase(std::find(order.begin(), order.end(), *survivor));
    } else if (kept) {
        order.erase(std::find(order.begin(), order.end(), *kept));
        order.insert(order.begin(), *kept);
    }
    if (survivor) out.surviving_pendent = g.incident_edges(*survivor).front();

    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    EdgeId next = g.max_edge_id() + 1;
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
        Gadget gd;
        gd.x = {order[i], n, n + 1, n + 2, n + 3, order[i + 1]};
        n += 4;
        gd.pendent_x1 = g.incident_edges(order[i]).front();
        gd.pendent_x6 = g.incident_edges(order[i + 1]).front();
        const std::array<std::pair<int, int>, 8> shape{
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}, {2, 4}}};
        for (std::size_t k = 0; k < shape.size(); ++k) {
            gd.edges[k] = next;
            edges.push_back({next++, gd.x[shape[k].first], gd.x[shape[k].second]});
        }
        out.gadgets.push_back(gd);
    }
    out.graph = Multigraph(n, std::move(edges));
    return out;
}

// ---------------------------------------------------------------------------
// Small graphs

IncidenceColoring base_small_graph(const Multigraph& g, const ListAssignment& lists,
                                   const std::optional<PinnedEdge>& pin) {
    if (g.vertex_count() > 6) throw PreconditionError("base case is for at most six vertices");
    IncidenceColoring fixed;
    if (pin) {
        fixed.set({pin->u, pin->edge}, pin->color_u);
        fixed.set({pin->v, pin->edge}, pin->color_v);
    }
    auto r = backtrack(g, lists, pin ? &fixed : nullptr);
    if (r.status != SearchStatus::Found) throw InternalError("small base case has no coloring");
    return r.coloring;
}

// ---------------------------------------------------------------------------
// Cycle-tree schedule

namespace {

// Cycle edges of cycle c starting at vertex `from`, first edge != `away`.
// Each entry is (edge, vertex reached).
std::vector<std::pair<EdgeId, VertexId>> walk(const CycleGraph& cg, int c, VertexId from, EdgeId not_first) {
    const auto& cyc = cg.cycles[c];
    const auto& ce = cg.cycle_edges[c];
    const std::size_t len = cyc.size();
    std::size_t s = std::find(cyc.begin(), cyc.end(), from) - cyc.begin();
    if (s == len) throw InternalError("walk start is not on the cycle");
    bool forward = ce[s] != not_first;
    std::vector<std::pair<EdgeId, VertexId>> out;
    for (std::size_t k = 0; k < len; ++k) {
        if (forward) {
            std::size_t i = (s + k) % len;
            out.push_back({ce[i], cyc[(i + 1) % len]});
        } else {
            std::size_t i = (s + len - k - 1) % len;
            out.push_back({ce[i], cyc[i]});
        }
    }
    return out;
}

}  // namespace

IncidenceColoring color_cycle_tree(const Multigraph& g, const ListAssignment& lists, const OneTwoDecomposition& d,
                                   const CycleGraph& cg, const CycleTree& t, PinCase pin_case,
                                   const std::optional<PinnedEdge>& pin, SolveStats* stats) {
    if (g.vertex_count() < 7) throw PreconditionError("cycle-tree coloring needs at least 7 vertices");
    if ((pin_case == PinCase::None) != !pin.has_value())
        throw PreconditionError("pin and pin case disagree");
    if (auto why = check_decomposition(g, d); !why.empty()) throw InternalError("decomposition: " + why);
    if (auto why = check_cycle_tree(g, d, cg, t); !why.empty()) throw InternalError("cycle-tree: " + why);
    if (stats) {
        ++stats->cycle_tree_runs;
        ++stats->pin_cases[static_cast<std::size_t>(pin_case)];
    }

    IncidenceColoring phi;
    Painter painter(g, lists, phi, stats);
    std::optional<EdgeId> e_star;
    const int m = t.m();
    const int root = t.root;

    // Step 1.
    if (pin) {
        if (pin->color_u == pin->color_v) throw PreconditionError("pinned colors must differ");
        if (!g.joins(pin->edge, pin->u, pin->v)) throw PreconditionError("pin endpoints do not match its edge");
        painter.place({pin->u, pin->edge}, pin->color_u, "pin");
        painter.place({pin->v, pin->edge}, pin->color_v, "pin");
        e_star = pin->edge;
    }

    std::vector<VertexId> xs;
    if (pin_case == PinCase::RootChord) {
        if (!d.e2.contains(*e_star) || cg.cycle_of.at(g.edge(*e_star).u) != root)
            throw PreconditionError("root-chord pin must lie on the root cycle");
        xs = root_chord_labelling(g, cg.cycles[root], *e_star);
    }

    // Step 2.
    std::map<int, Triple> triples;
    for (int c : t.order) {
        if (!((m == 0 && c == root) || t.is_pendent(c))) continue;
        Triple tr = find_triple(g, d, cg, t, c, e_star, pin_case);
        if (tr.touches_pin && stats) ++stats->triples_touching_pin;
        auto inc = tr.incidences();
        for (const Incidence& i : inc)
            if (phi.contains(i)) throw InternalError("triple incidence " + to_string(i) + " already colored");
        SelectionLists s;
        s.a = painter.available(inc[0]);
        s.b = painter.available(inc[1]);
        s.c = painter.available(inc[2]);
        s.d = painter.available(inc[3]);
        s.e = painter.available(inc[4]);
        s.l_v0 = lists.at({tr.v0, tr.v0v1});
        s.l_v1 = lists.at({tr.v1, tr.v0v1});
        FiveColorSelection f = select_five_colors(s);
        const std::array<Color, 5> colors{f.alpha, f.beta, f.gamma, f.delta, f.eta};
        for (std::size_t k = 0; k < 5; ++k) painter.place(inc[k], colors[k], "selection");
        triples[c] = tr;
    }

    // Step 3.
    std::set<EdgeId> tree_edges = t.tree_edges();
    std::optional<EdgeId> chord_x1x6;
    if (pin_case == PinCase::RootChord) {
        auto es = g.edges_between(xs[1], xs[6]);
        if (es.size() != 1) throw InternalError("x1x6 is not a single edge");
        chord_x1x6 = es.front();
    }
    for (EdgeId e : d.e1) {
        if (tree_edges.contains(e)) continue;
        // With m >= 1 no later step reaches x1x6, so it is colored here.
        if (chord_x1x6 && e == *chord_x1x6 && m == 0) continue;
        painter.extend_edge(e, "matching edges");
    }

    // Step 4.
    auto deferred = [&](const Triple& tr) {
        painter.paint_deferred({tr.v0, tr.v0v1}, "last edge of cycle");
        painter.paint_deferred({tr.v1, tr.v0v1}, "last edge of cycle");
    };
    auto walk_except = [&](int c, VertexId from, EdgeId not_first, std::optional<EdgeId> skip,
                           const std::string& step) {
        for (auto [e, reached] : walk(cg, c, from, not_first)) {
            (void)reached;
            if (skip && e == *skip) continue;
            painter.extend_edge(e, step);
        }
    };

    for (int c : t.order) {
        if (c == root && m == 0) {
            const Triple& tr = triples.at(c);
            if (pin_case == PinCase::RootChord) {
                // From x0 back along x_{n-1}, ..., x6, then x1x6, (x5,x5x6),
                // then x1x2, x2x3, x3x4, and x4x5 last.
                EdgeId x0x1 = *e_star;
                for (auto [e, reached] : walk(cg, c, xs[0], x0x1)) {
                    painter.extend_edge(e, "unique cycle");
                    if (reached == xs[6]) break;
                }
                painter.extend_edge(*chord_x1x6, "unique cycle");
                painter.paint({tr.v1, tr.v1v2}, "unique cycle");
                for (auto [e, reached] : walk(cg, c, xs[1], x0x1)) {
                    painter.extend_edge(e, "unique cycle");
                    if (reached == xs[4]) break;
                }
            } else {
                painter.paint({tr.v1, tr.v1v2}, "unique cycle");
                walk_except(c, tr.v2, tr.v1v2, tr.v0v1, "unique cycle");
            }
            deferred(tr);
        } else if (c == root) {
            VertexId p = t.parent_vertex.at(t.order.at(1));
            if (pin_case == PinCase::RootChord) {
                EdgeId x0x1 = *e_star;
                if (p == xs[1]) throw InternalError("parent vertex of the first child is x1");
                if (p != xs[0]) {
                    for (auto [e, reached] : walk(cg, c, xs[0], x0x1)) {
                        painter.extend_edge(e, "root cycle");
                        if (reached == p) break;
                    }
                }
                for (auto [e, reached] : walk(cg, c, xs[1], x0x1)) {
                    painter.extend_edge(e, "root cycle");
                    if (reached == p) break;
                }
            } else {
                const auto& cyc = cg.cycles[c];
                std::size_t s = std::find(cyc.begin(), cyc.end(), p) - cyc.begin();
                walk_except(c, p, cg.cycle_edges[c][(s + cyc.size() - 1) % cyc.size()], std::nullopt,
                            "root cycle");
            }
        } else if (!t.is_pendent(c)) {
            painter.extend_edge(t.cut_edge.at(c), "inner cycle");
            VertexId p2 = t.parent_vertex.at(t.children.at(c).front());
            const auto& cyc = cg.cycles[c];
            std::size_t s = std::find(cyc.begin(), cyc.end(), p2) - cyc.begin();
            walk_except(c, p2, cg.cycle_edges[c][(s + cyc.size() - 1) % cyc.size()], std::nullopt, "inner cycle");
        } else {
            const Triple& tr = triples.at(c);
            painter.extend_edge(t.cut_edge.at(c), "pendent cycle");
            painter.paint({tr.v1, tr.v1v2}, "pendent cycle");
            walk_except(c, tr.v2, tr.v1v2, tr.v0v1, "pendent cycle");
            deferred(tr);
        }
    }

    for (const Incidence& inc : incidences(g))
        if (!phi.contains(inc)) throw InternalError("schedule left " + to_string(inc) + " uncolored");
    return phi;
}

// ---------------------------------------------------------------------------
// Pinned pendent edges

namespace {

void check_pin(const Multigraph& g, const ListAssignment& lists, const PinnedEdge& pin) {
    if (!g.has_edge(pin.edge)) throw PreconditionError("pinned edge does not exist");
    if (!g.joins(pin.edge, pin.u, pin.v)) throw PreconditionError("pin endpoints do not match its edge");
    if (pin.color_u == pin.color_v) throw PreconditionError("pinned colors must differ");
    if (!lists.allows({pin.u, pin.edge}, pin.color_u) || !lists.allows({pin.v, pin.edge}, pin.color_v))
        throw PreconditionError("pinned color outside its list");
}

ListAssignment with_gadget_lists(const Multigraph& augmented, const ListAssignment& lists) {
    ListAssignment out = lists;
    std::vector<Color> full(kListSize);
    std::iota(full.begin(), full.end(), 0);
    for (const Incidence& inc : incidences(augmented))
        if (!out.contains(inc)) out.set(inc, full);
    return out;
}

IncidenceColoring restrict_to(const Multigraph& g, const IncidenceColoring& phi) {
    IncidenceColoring out;
    for (const Incidence& inc : incidences(g)) out.set(inc, phi.at(inc));
    return out;
}

}  // namespace

IncidenceColoring solve_pinned_pendent(const Multigraph& g, const ListAssignment& lists, const PinnedEdge& pin,
                                       SolveStats* stats) {
    if (!g.is_simple()) throw PreconditionError("pinned solving needs a simple graph");
    if (!is_connected(g)) throw PreconditionError("pinned solving needs a connected graph");
    std::vector<VertexId> core;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 3) core.push_back(v);
        else if (g.degree(v) != 1) throw PreconditionError("graph is not semicubic");
    }
    check_pin(g, lists, pin);
    const Edge& pe = g.edge(pin.edge);
    VertexId x = g.degree(pe.u) == 1 ? pe.u : pe.v;  // the pendent end
    if (g.degree(x) != 1) throw PreconditionError("pinned edge is not pendent");
    ListAssignment l6 = truncate_lists(g, lists, &pin);
    if (stats) ++stats->pinned_pendent_runs;

    if (g.vertex_count() <= 6) {
        if (core.size() >= 3 && !is_two_connected(induced_subgraph(g, core).graph))
            throw PreconditionError("core is neither K1 nor 2-connected");
        if (stats) ++stats->small_base_cases;
        return base_small_graph(g, l6, pin);
    }
    if (core.size() < 3 || !is_two_connected(induced_subgraph(g, core).graph))
        throw PreconditionError("core is neither K1 nor 2-connected");

    GadgetAttachment ga = attach_gadgets(g, pin.edge);
    if (stats) stats->gadgets_attached += static_cast<int>(ga.gadgets.size());
    const Multigraph& h = ga.graph;
    ListAssignment lh = with_gadget_lists(h, l6);
    if (h.vertex_count() <= 6) {
        if (stats) ++stats->small_base_cases;
        return restrict_to(g, base_small_graph(h, lh, pin));
    }

    OneTwoDecomposition d = one_two_decomposition(h);
    VertexId u_star = g.other_end(pin.edge, x);
    PinCase pin_case;
    std::optional<CycleTree> tree;
    std::optional<CycleGraph> cg;

    if (ga.surviving_pendent) {
        if (*ga.surviving_pendent != pin.edge) throw InternalError("pinned edge did not survive gadget pairing");
        pin_case = PinCase::Pendent;
        cg = cycle_graph(h, d);
        tree = dfs_cycle_tree(*cg, cg->cycle_of.at(u_star));
    } else {
        const Gadget& gd = ga.gadgets.front();
        if (gd.x[0] != x) throw InternalError("pinned edge was not paired first");
        if (d.e1.contains(pin.edge)) {
            pin_case = PinCase::GadgetLeaf;
            cg = cycle_graph(h, d);
            int gadget_cycle = cg->cycle_of.at(x);
            std::set<VertexId> on(cg->cycles.at(gadget_cycle).begin(), cg->cycles.at(gadget_cycle).end());
            if (on != std::set<VertexId>(gd.x.begin(), gd.x.end()))
                throw InternalError("gadget vertices do not form a cycle of the decomposition");
            tree = dfs_cycle_tree(*cg, cg->cycle_of.at(u_star), gadget_cycle, pin.edge);
            if (!tree->is_pendent(gadget_cycle) || tree->tree_edges().contains(pin.edge))
                throw InternalError("gadget cycle is not a pendent cycle away from the pinned edge");
        } else {
            pin_case = PinCase::RootChord;
            // x1x2 in the matching forces x3x4 and x5x6 too; trade them for
            // x1x6, x2x4, x3x5 so the chord pattern appears on the root cycle.
            if (d.e1.contains(gd.edges[0])) {
                std::set<EdgeId> e1 = d.e1;
                for (int k : {0, 2, 4})
                    if (e1.erase(gd.edges[k]) != 1) throw InternalError("unexpected matching on a gadget");
                for (int k : {5, 6, 7}) e1.insert(gd.edges[k]);
                d = decomposition_from_matching(h, std::vector<EdgeId>(e1.begin(), e1.end()));
                if (stats) ++stats->gadget_rematches;
            }
            cg = cycle_graph(h, d);
            tree = dfs_cycle_tree(*cg, cg->cycle_of.at(x));
        }
    }
    PinnedEdge p = pin;
    IncidenceColoring phi = color_cycle_tree(h, lh, d, *cg, *tree, pin_case, p, stats);
    return restrict_to(g, phi);
}

// ---------------------------------------------------------------------------
// Top level

namespace {

struct Removal {
    enum class Kind { LowDegree, ParallelPair, TripleEdge } kind;
    VertexId a = -1, b = -1;
    std::vector<EdgeId> edges;  // LowDegree: edges at a; Pair: e1, e2, a-side, b-side
};

void color_bridged(const Multigraph& h, const ListAssignment& lh, IncidenceColoring& phi, SolveStats* stats) {
    ComponentPlan plan = split_on_cut_edges(h);
    for (std::size_t i = 0; i < plan.components.size(); ++i) {
        Subgraph s = plan.star(h, i);
        ListAssignment ls = localize(lh, s);
        PinnedEdge pin;
        if (i == 0) {
            pin.edge = plan.attached[0].front();
            const Edge& e = h.edge(pin.edge);
            pin.u = e.u;
            pin.v = e.v;
            pin.color_u = lh.at({e.u, pin.edge}).front();
            pin.color_v = minus(lh.at({e.v, pin.edge}), {pin.color_u}).front();
        } else {
            pin.edge = plan.entry_edge[i];
            const Edge& e = h.edge(pin.edge);
            pin.u = e.u;
            pin.v = e.v;
            pin.color_u = phi.at({e.u, pin.edge});
            pin.color_v = phi.at({e.v, pin.edge});
        }
        PinnedEdge local = pin;
        local.u = s.local(pin.u);
        local.v = s.local(pin.v);
        globalize(solve_pinned_pendent(s.graph, ls, local, stats), s, phi);
    }
}

void color_cubic_component(const Multigraph& h, const ListAssignment& lh, IncidenceColoring& phi,
                           SolveStats* stats) {
    if (h.vertex_count() <= 6) {
        if (stats) ++stats->small_base_cases;
        for (const auto& [inc, c] : base_small_graph(h, lh, std::nullopt)) phi.set(inc, c);
        return;
    }
    if (!is_two_connected(h)) {
        if (stats) ++stats->bridged_components;
        color_bridged(h, lh, phi, stats);
        return;
    }
    if (stats) ++stats->cubic_components;
    OneTwoDecomposition d = one_two_decomposition(h);
    CycleGraph cg = cycle_graph(h, d);
    CycleTree t = dfs_cycle_tree(cg, 0);
    for (const auto& [inc, c] : color_cycle_tree(h, lh, d, cg, t, PinCase::None, std::nullopt, stats))
        phi.set(inc, c);
}

}  // namespace

IncidenceColoring solve(const Multigraph& g, const ListAssignment& lists, SolveStats* stats) {
    if (g.max_degree() > 3) throw PreconditionError("maximum degree exceeds 3");
    ListAssignment l6 = truncate_lists(g, lists, nullptr);

    const int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    std::set<VertexId> low;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 2) low.insert(v);
    }
    auto live_edges = [&](VertexId v) {
        std::vector<EdgeId> out;
        for (EdgeId e : g.incident_edges(v))
            if (alive[g.other_end(e, v)]) out.push_back(e);
        return out;
    };
    auto drop = [&](VertexId v) {
        alive[v] = false;
        for (EdgeId e : g.incident_edges(v)) {
            VertexId w = g.other_end(e, v);
            if (alive[w] && --deg[w] <= 2) low.insert(w);
        }
    };

    std::vector<Removal> removals;
    for (;;) {
        while (!low.empty()) {
            VertexId v = *low.begin();
            low.erase(low.begin());
            if (!alive[v]) continue;
            removals.push_back({Removal::Kind::LowDegree, v, -1, live_edges(v)});
            drop(v);
        }
        bool found = false;
        for (VertexId u = 0; u < n && !found; ++u) {
            if (!alive[u]) continue;
            auto edges = live_edges(u);
            for (EdgeId e : edges) {
                VertexId w = g.other_end(e, u);
                auto between = g.edges_between(u, w);
                if (between.size() < 2) continue;
                found = true;
                if (between.size() == 3) {
                    removals.push_back({Removal::Kind::TripleEdge, u, w, between});
                } else {
                    EdgeId a = -1, b = -1;
                    for (EdgeId f : g.incident_edges(u))
                        if (f != between[0] && f != between[1]) a = f;
                    for (EdgeId f : g.incident_edges(w))
                        if (f != between[0] && f != between[1]) b = f;
                    removals.push_back({Removal::Kind::ParallelPair, u, w, {between[0], between[1], a, b}});
                }
                alive[u] = false;
                drop(w);
                alive[u] = true;
                drop(u);
                break;
            }
        }
        if (!found) break;
    }

    IncidenceColoring phi;
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < n; ++v)
        if (alive[v]) rest.push_back(v);
    if (!rest.empty()) {
        Subgraph core = induced_subgraph(g, rest);
        ListAssignment lcore = localize(l6, core);
        for (const auto& comp : connected_components(core.graph)) {
            Subgraph part = induced_subgraph(core.graph, comp);
            ListAssignment lp = localize(lcore, part);
            IncidenceColoring local;
            color_cubic_component(part.graph, lp, local, stats);
            IncidenceColoring mid;
            globalize(local, part, mid);
            globalize(mid, core, phi);
        }
    }

    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        switch (it->kind) {
            case Removal::Kind::LowDegree:
                if (stats) ++stats->low_degree_extensions;
                extend_low_degree(g, l6, phi, it->a, it->edges);
                break;
            case Removal::Kind::ParallelPair:
                if (stats) ++stats->parallel_pair_extensions;
                extend_parallel_pair(g, l6, phi, it->a, it->b, it->edges[0], it->edges[1], it->edges[2],
                                     it->edges[3]);
                break;
            case Removal::Kind::TripleEdge: {
                if (stats) ++stats->triple_edge_components;
                std::vector<Incidence> items;
                for (EdgeId e : it->edges) {
                    items.push_back({it->a, e});
                    items.push_back({it->b, e});
                }
                if (!complete_locally(g, l6, phi, items)) throw InternalError("triple edge cannot be colored");
                break;
            }
        }
    }

    if (auto v = verify_coloring(g, &l6, phi)) throw InternalError("solver produced an invalid coloring: " + v->message());
    return phi;
}

}  // namespace inclist
