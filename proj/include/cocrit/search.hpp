#pragma once

#include "cocrit/cocritical.hpp"

namespace cocrit {

// Greedy maximal K_t-free graph: visit all vertex pairs in a seeded shuffle
// and keep each edge that closes no K_t.  The result is K_t-saturated.
// Deterministic for a fixed (n, t, seed) on every platform.
Graph random_maximal_ktfree(int n, int t, uint64_t seed);

struct SmallEnumeration {
    std::vector<Graph> graphs;  // one labeled representative per isomorphism class,
                                // sorted by (edge count, graph6 string)
    uint64_t labeled_total = 0;
    uint64_t candidates_checked = 0;  // canonical survivors fully tested
};

// Exhaustive co-critical census over all labeled graphs on n <= 8 vertices.
// Canonical-minimum prefiltering plus a final isomorphism dedup guard; the
// labeled space is partitioned by vertex 0's adjacency row across jobs.
SmallEnumeration enumerate_small_cocritical(int n, const PairParams& p, int jobs = 1);

struct LocalSearchResult {
    std::optional<Graph> best;
    bool certified = false;  // best passed a full verify_cocritical
    long long best_edges = -1;
    uint64_t nodes_used = 0;
    int improvements = 0;
};

// Edge-reduction hill descent from the extremal construction: drop one edge,
// greedily re-add augmentations that fail to arrow, accept only candidates
// that fully re-verify with fewer edges.
LocalSearchResult local_search_cocritical(const PairParams& p, int n, uint64_t seed,
                                          const SearchBudget& budget);

}  // namespace cocrit
