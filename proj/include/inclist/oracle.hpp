#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "inclist/graph.hpp"
#include "inclist/io.hpp"

// Exact search. Slow but independent of the constructive solver.

namespace inclist {

struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;
    double time_limit_seconds = 120.0;
};

enum class SearchStatus { Found, None, BudgetExhausted };

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A list coloring problem on an abstract conflict graph.
struct ConflictProblem {
    std::vector<std::vector<int>> conflicts;  // symmetric adjacency
    std::vector<std::vector<Color>> lists;    // sorted
    std::vector<std::optional<Color>> fixed;  // prescribed items; may be empty
};

struct ConflictResult {
    SearchStatus status = SearchStatus::None;
    std::vector<Color> colors;  // meaningful when Found
    std::uint64_t nodes = 0;
};

/// Backtracking with the most constrained item first and colors in
/// increasing order. `break_symmetry` fixes the first item to its smallest
/// color, which is only sound when every list is the same.
ConflictResult solve_conflict_problem(const ConflictProblem& p, const SearchBudget& budget,
                                      bool break_symmetry = false);

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    IncidenceColoring coloring;
    std::uint64_t nodes = 0;
};

/// Exact incidence list coloring. Incidences in `fixed` keep their colors
/// (they must still be in their lists and must not conflict with each other).
SearchResult backtrack(const Multigraph& g, const ListAssignment& lists, const IncidenceColoring* fixed = nullptr,
                       const SearchBudget& budget = {});

/// Smallest k with an incidence k-coloring. Throws BudgetExhausted.
int incidence_chromatic_number(const Multigraph& g, const SearchBudget& budget = {});

enum class BadListsStatus { Found, NoneFound, BudgetExhausted };

struct BadListsResult {
    BadListsStatus status = BadListsStatus::NoneFound;
    ListAssignment lists;  // the uncolorable assignment when Found
    std::size_t tried = 0;
};

/// Looks for a k-list assignment with colors in [0, universe) that admits
/// no coloring. Candidates: every identical assignment drawn from a k-subset
/// of the universe, then `random_samples` random assignments from `seed`.
/// NoneFound means all candidates were colorable, not that none exists.
BadListsResult find_bad_lists(const Multigraph& g, int k, int universe, const SearchBudget& budget = {},
                              int random_samples = 200, std::uint64_t seed = 1);

/// Exact strong list edge coloring: edges within distance one get distinct
/// colors. Works on the line-graph-squared conflict graph.
struct StrongSearchResult {
    SearchStatus status = SearchStatus::None;
    EdgeColoring coloring;
    std::uint64_t nodes = 0;
};

StrongSearchResult strong_backtrack(const Multigraph& g, const EdgeLists& lists, const SearchBudget& budget = {});

/// Strong chromatic index by increasing k. Throws BudgetExhausted.
int strong_chromatic_index(const Multigraph& g, const SearchBudget& budget = {});

}  // namespace inclist
