#include "inclist/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

namespace inclist {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
    Search(const ConflictProblem& p, const SearchBudget& budget)
        : p_(p), budget_(budget), start_(Clock::now()) {
        const std::size_t n = p.lists.size();
        color_.assign(n, -1);
        blocked_.resize(n);
        avail_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            blocked_[i].assign(p.lists[i].size(), 0);
            avail_[i] = static_cast<int>(p.lists[i].size());
        }
    }

    SearchStatus run(bool break_symmetry) {
        const std::size_t n = p_.lists.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i < p_.fixed.size() && p_.fixed[i]) {
                Color c = *p_.fixed[i];
                if (!std::binary_search(p_.lists[i].begin(), p_.lists[i].end(), c) || blocked_at(i, c))
                    return SearchStatus::None;
                if (!assign(i, c)) return SearchStatus::None;
            }
        }
        if (break_symmetry) {
            int first = pick();
            if (first >= 0) {
                Color c = p_.lists[first].front();
                if (!assign(first, c)) return SearchStatus::None;
            }
        }
        return recurse();
    }

    std::vector<Color> colors() const {
        std::vector<Color> out(color_.size());
        for (std::size_t i = 0; i < color_.size(); ++i) out[i] = color_[i];
        return out;
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    int index_of(std::size_t i, Color c) const {
        const auto& l = p_.lists[i];
        auto it = std::lower_bound(l.begin(), l.end(), c);
        if (it == l.end() || *it != c) return -1;
        return static_cast<int>(it - l.begin());
    }

    bool blocked_at(std::size_t i, Color c) const {
        int k = index_of(i, c);
        return k >= 0 && blocked_[i][k] > 0;
    }

    // Colors item i; false if some uncolored neighbour is left without options
    // (the assignment is still recorded and must be undone by the caller).
    bool assign(std::size_t i, Color c) {
        color_[i] = c;
        bool ok = true;
        for (int j : p_.conflicts[i]) {
            int k = index_of(j, c);
            if (k < 0) continue;
            if (blocked_[j][k]++ == 0) {
                --avail_[j];
                if (color_[j] < 0 && avail_[j] == 0) ok = false;
            }
        }
        return ok;
    }

    void unassign(std::size_t i) {
        Color c = color_[i];
        color_[i] = -1;
        for (int j : p_.conflicts[i]) {
            int k = index_of(j, c);
            if (k < 0) continue;
            if (--blocked_[j][k] == 0) ++avail_[j];
        }
    }

    // Most constrained uncolored item: fewest available colors, then most
    // uncolored neighbours, then smallest index. -1 when all are colored.
    int pick() const {
        int best = -1, best_avail = 0, best_deg = 0;
        for (std::size_t i = 0; i < color_.size(); ++i) {
            if (color_[i] >= 0) continue;
            int deg = 0;
            for (int j : p_.conflicts[i]) deg += color_[j] < 0;
            if (best < 0 || avail_[i] < best_avail || (avail_[i] == best_avail && deg > best_deg)) {
                best = static_cast<int>(i);
                best_avail = avail_[i];
                best_deg = deg;
            }
        }
        return best;
    }

    bool out_of_budget() {
        if (nodes_ > budget_.node_limit) return true;
        if ((nodes_ & 0xfff) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start_).count();
            if (secs > budget_.time_limit_seconds) timed_out_ = true;
        }
        return timed_out_;
    }

    SearchStatus recurse() {
        int i = pick();
        if (i < 0) return SearchStatus::Found;
        const auto& list = p_.lists[i];
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (blocked_[i][k] > 0) continue;
            ++nodes_;
            if (out_of_budget()) return SearchStatus::BudgetExhausted;
            bool ok = assign(i, list[k]);
            if (ok) {
                SearchStatus s = recurse();
                if (s != SearchStatus::None) return s;
            }
            unassign(i);
        }
        return SearchStatus::None;
    }

    const ConflictProblem& p_;
    SearchBudget budget_;
    Clock::time_point start_;
    std::vector<Color> color_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> avail_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

struct IncidenceProblem {
    std::vector<Incidence> items;
    ConflictProblem problem;
};

IncidenceProblem incidence_problem(const Multigraph& g) {
    IncidenceProblem out;
    out.items = incidences(g);
    std::map<Incidence, int> index;
    for (std::size_t i = 0; i < out.items.size(); ++i) index[out.items[i]] = static_cast<int>(i);
    out.problem.conflicts.resize(out.items.size());
    for (std::size_t i = 0; i < out.items.size(); ++i)
        for (const Incidence& nb : neighborhood(g, out.items[i])) out.problem.conflicts[i].push_back(index.at(nb));
    return out;
}

std::vector<std::vector<int>> strong_conflicts(const Multigraph& g) {
    const auto& edges = g.edges();
    std::vector<std::vector<int>> out(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            bool near = touch || g.are_neighbors(a.u, b.u) || g.are_neighbors(a.u, b.v) ||
                        g.are_neighbors(a.v, b.u) || g.are_neighbors(a.v, b.v);
            if (near) {
                out[i].push_back(static_cast<int>(j));
                out[j].push_back(static_cast<int>(i));
            }
        }
    }
    return out;
}

std::vector<Color> range_colors(int k) {
    std::vector<Color> out(k);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Least k for which the conflict graph has a proper coloring from {0..k-1}.
int chromatic_by_search(const std::vector<std::vector<int>>& conflicts, const SearchBudget& budget) {
    if (conflicts.empty()) return 0;
    for (int k = 1;; ++k) {
        ConflictProblem p;
        p.conflicts = conflicts;
        p.lists.assign(conflicts.size(), range_colors(k));
        auto r = solve_conflict_problem(p, budget, true);
        if (r.status == SearchStatus::Found) return k;
        if (r.status == SearchStatus::BudgetExhausted)
            throw BudgetExhausted("search budget exhausted at k = " + std::to_string(k));
    }
}

}  // namespace

ConflictResult solve_conflict_problem(const ConflictProblem& p, const SearchBudget& budget, bool break_symmetry) {
    Search s(p, budget);
    ConflictResult out;
    out.status = s.run(break_symmetry);
    out.nodes = s.nodes();
    if (out.status == SearchStatus::Found) out.colors = s.colors();
    return out;
}

SearchResult backtrack(const Multigraph& g, const ListAssignment& lists, const IncidenceColoring* fixed,
                       const SearchBudget& budget) {
    if (!lists.covers(g)) throw PreconditionError("lists do not cover every incidence");
    auto ip = incidence_problem(g);
    for (const Incidence& inc : ip.items) ip.problem.lists.push_back(lists.at(inc));
    if (fixed) {
        ip.problem.fixed.resize(ip.items.size());
        for (std::size_t i = 0; i < ip.items.size(); ++i) ip.problem.fixed[i] = fixed->get(ip.items[i]);
        for (const auto& [inc, c] : *fixed) {
            (void)c;
            if (!is_incidence(g, inc)) throw PreconditionError("fixed color on a non-incidence " + to_string(inc));
        }
    }
    auto r = solve_conflict_problem(ip.problem, budget, false);
    SearchResult out;
    out.status = r.status;
    out.nodes = r.nodes;
    if (r.status == SearchStatus::Found)
        for (std::size_t i = 0; i < ip.items.size(); ++i) out.coloring.set(ip.items[i], r.colors[i]);
    return out;
}

int incidence_chromatic_number(const Multigraph& g, const SearchBudget& budget) {
    return chromatic_by_search(incidence_problem(g).problem.conflicts, budget);
}

BadListsResult find_bad_lists(const Multigraph& g, int k, int universe, const SearchBudget& budget,
                              int random_samples, std::uint64_t seed) {
    if (k < 1) throw PreconditionError("list size must be at least 1");
    if (universe < k) throw PreconditionError("universe smaller than the list size");
    auto ip = incidence_problem(g);
    BadListsResult out;

    auto try_lists = [&](std::vector<std::vector<Color>> lists) -> std::optional<BadListsStatus> {
        ++out.tried;
        ip.problem.lists = std::move(lists);
        auto r = solve_conflict_problem(ip.problem, budget, false);
        if (r.status == SearchStatus::BudgetExhausted) return BadListsStatus::BudgetExhausted;
        if (r.status == SearchStatus::None) {
            for (std::size_t i = 0; i < ip.items.size(); ++i) out.lists.set(ip.items[i], ip.problem.lists[i]);
            return BadListsStatus::Found;
        }
        return std::nullopt;
    };

    // Identical lists: every k-subset gives an isomorphic instance, so one
    // representative covers them all.
    if (auto s = try_lists(std::vector<std::vector<Color>>(ip.items.size(), range_colors(k)))) {
        out.status = *s;
        return out;
    }

    std::mt19937_64 rng(seed);
    std::vector<Color> pool = range_colors(universe);
    for (int sample = 0; sample < random_samples; ++sample) {
        std::vector<std::vector<Color>> lists;
        for (std::size_t i = 0; i < ip.items.size(); ++i) {
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Color> l(pool.begin(), pool.begin() + k);
            std::sort(l.begin(), l.end());
            lists.push_back(std::move(l));
        }
        if (auto s = try_lists(std::move(lists))) {
            out.status = *s;
            return out;
        }
    }
    out.status = BadListsStatus::NoneFound;
    return out;
}

StrongSearchResult strong_backtrack(const Multigraph& g, const EdgeLists& lists, const SearchBudget& budget) {
    if (!g.is_simple()) throw PreconditionError("strong coloring needs a simple graph");
    ConflictProblem p;
    p.conflicts = strong_conflicts(g);
    for (const Edge& e : g.edges()) {
        auto it = lists.find(e.id);
        if (it == lists.end()) throw PreconditionError("no list for edge " + std::to_string(e.id));
        std::set<Color> uniq(it->second.begin(), it->second.end());
        p.lists.emplace_back(uniq.begin(), uniq.end());
    }
    auto r = solve_conflict_problem(p, budget, false);
    StrongSearchResult out;
    out.status = r.status;
    out.nodes = r.nodes;
    if (r.status == SearchStatus::Found)
        for (std::size_t i = 0; i < g.edges().size(); ++i) out.coloring[g.edges()[i].id] = r.colors[i];
    return out;
}

int strong_chromatic_index(const Multigraph& g, const SearchBudget& budget) {
    if (!g.is_simple()) throw PreconditionError("strong coloring needs a simple graph");
    return chromatic_by_search(strong_conflicts(g), budget);
}

}  // namespace inclist
