#pragma once

#include <optional>

#include "cocrit/coloring.hpp"

namespace cocrit {

enum class SearchStatus { Found, NoneExists, Exhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<EdgeColoring> witness;  // Found: a critical coloring.  For the
                                          // max-red search under Exhausted: best
                                          // so far, with no optimality claim.
    uint64_t nodes = 0;
};

struct EnumerationOutcome {
    std::vector<EdgeColoring> colorings;  // first `limit` in search order
    uint64_t total = 0;                   // number of solutions seen
    bool complete = false;                // search ran to natural completion
    uint64_t nodes = 0;
};

// Backtracking over red/blue edge assignments with two propagation rules run
// to fixpoint: a vertex at blue degree k-1 forces its open edges red, and an
// open edge whose endpoints share a red K_{t-2} in their common red
// neighborhood is forced blue.  Branches red before blue; static edge order
// by endpoint degree sum, largest first.
SearchOutcome find_critical(const Graph& g, const PairParams& p, const SearchBudget& b = {});

EnumerationOutcome enumerate_critical(const Graph& g, const PairParams& p, uint64_t limit,
                                      const SearchBudget& b = {});

// Branch and bound maximizing the number of red edges over critical colorings.
SearchOutcome max_red_critical(const Graph& g, const PairParams& p, const SearchBudget& b = {});

// All critical colorings attaining the maximum red edge count.
EnumerationOutcome enumerate_optimal_red(const Graph& g, const PairParams& p, uint64_t limit,
                                         const SearchBudget& b = {});

// Independent cross-check: tests every one of the 2^e total colorings.
// Rejected above 24 edges.
uint64_t brute_force_critical(const Graph& g, const PairParams& p);

}  // namespace cocrit
