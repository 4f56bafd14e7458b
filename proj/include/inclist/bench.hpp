#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "inclist/colorist.hpp"
#include "inclist/oracle.hpp"

// Seeded instance suites shared by the `bench` command and the acceptance
// run. Every case is checked by the independent verifiers, never by the
// solver's own word.

namespace inclist {

struct CaseReport {
    std::string instance;
    std::string mode;
    bool success = false;
    int colors_used = 0;
    double seconds = 0;
    std::string verification;  // "ok", or what went wrong
    std::uint64_t seed = 0;
    std::string detail;        // suite-specific, free form
    bool has_parallel_edges = false;
    int vertices = 0;
    bool connected = false;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 0;  // 0 picks the suite default
    int universe = 12;
    SearchBudget budget{};
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseReport> cases;
    SolveStats stats;
    double seconds = 0;

    int successes() const;
    bool ok() const { return successes() == static_cast<int>(cases.size()); }
};

/// theorem13, freechoice, equivalence, cycles, strong, petersen.
/// Throws PreconditionError for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

/// Tab-separated rows, one per case, with a header line.
void write_case_table(std::ostream& out, const SuiteResult& r);
/// suite, instances, successes, mean and max seconds.
void write_summary_table(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace inclist
