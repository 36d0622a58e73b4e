#pragma once

#include <optional>
#include <vector>

#include "cocrit/graph.hpp"

namespace cocrit {

// Backtracking over equitable-partition refinement.  Practical cap: orders
// above kIsoCap are rejected outright rather than attempted.
inline constexpr int kIsoCap = 64;

struct AutomorphismGroup {
    std::vector<std::vector<int>> generators;  // strong generating set
    unsigned long long order = 1;
    bool order_overflow = false;  // true iff order does not fit in 64 bits
};

// Vertex map g -> h if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

AutomorphismGroup automorphism_group(const Graph& g);

}  // namespace cocrit
