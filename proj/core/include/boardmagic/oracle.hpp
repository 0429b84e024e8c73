#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>

#include "boardmagic/board.hpp"

namespace boardmagic {

/// Limits for the exhaustive search. max_squares caps pq+pr+qr; boards over
/// the cap throw BoardTooLarge before any work happens.
struct SearchBudget {
    std::int64_t max_nodes = 100'000'000;
    int max_squares = 12;
    std::chrono::milliseconds time_limit{120'000};
};

/// Pruning/symmetry toggles, mostly for regression tests; all on by default.
struct SearchOptions {
    bool prune_partial_sums = true;    // running line sums may not overshoot
    bool prune_completion_bounds = true;  // unused labels must be able to finish each line
    bool symmetry_reduction = true;    // order interchangeable rows/columns
    int workers = 1;                   // >1 partitions the root branching
};

enum class SearchVerdict { Found, ProvenNonexistent, BudgetExceeded };

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::BudgetExceeded;
    std::optional<Design> witness;  // set iff verdict == Found
    std::int64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Exhaustive backtracking over all bijections, branched per feasible
/// constant tuple, with line-sum pruning. Sequential runs (workers == 1)
/// return a deterministic witness; parallel runs return the same verdict.
SearchOutcome search(const Board& b, MagicClass cls, const SearchBudget& budget = {},
                     const SearchOptions& options = {});

/// One search per class.
std::map<MagicClass, SearchOutcome> classify_all(const Board& b, const SearchBudget& budget = {},
                                                 const SearchOptions& options = {});

const char* to_string(SearchVerdict v);

}  // namespace boardmagic
