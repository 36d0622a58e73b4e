#pragma once

#include "cocrit/solver.hpp"

namespace cocrit {

enum class ArrowStatus { Arrows, NotArrows, Unknown };

struct ArrowVerdict {
    ArrowStatus status = ArrowStatus::Unknown;
    std::optional<EdgeColoring> witness;  // for NotArrows: a critical coloring
    uint64_t nodes = 0;
};

// g -> (K_t, K_{1,k}) iff no critical coloring exists.
ArrowVerdict arrows(const Graph& g, const PairParams& p, const SearchBudget& b = {});

// r(K_t, K_{1,k}) = (t-1)k + 1 for t,k >= 3.
int ramsey_star(int t, int k);

}  // namespace cocrit
