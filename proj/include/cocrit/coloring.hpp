#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cocrit/graph.hpp"

namespace cocrit {

enum class Color : uint8_t { Red = 0, Blue = 1 };

// Target pair (K_t, K_{1,k}).  Both below 3 degenerate; rejected.
struct PairParams {
    int t = 3;
    int k = 3;

    PairParams(int t_, int k_);
};

struct SearchBudget {
    uint64_t node_limit = UINT64_MAX;
    std::chrono::milliseconds wall_limit = std::chrono::milliseconds::max();

    SearchBudget() = default;
    SearchBudget(uint64_t nodes, std::chrono::milliseconds wall);
    static SearchBudget nodes(uint64_t n) { return SearchBudget(n, std::chrono::milliseconds::max()); }
    static SearchBudget wall_seconds(long s) { return SearchBudget(UINT64_MAX, std::chrono::seconds(s)); }
};

// Total red/blue assignment of the edges of a fixed host graph.  Edges are
// kept in lexicographic order; equality is labeled equality.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(const Graph& host, std::vector<Color> by_edge);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    Color at(int u, int v) const;  // rejects non-edges
    Color at_index(size_t i) const { return color_[i]; }

    int red_count() const;
    int blue_count() const { return int(color_.size()) - red_count(); }
    std::vector<int> blue_degrees() const;

    Graph red_subgraph() const;   // spanning
    Graph blue_subgraph() const;  // spanning

    bool matches(const Graph& g) const;

    // One line per edge, "u v R" / "u v B", lexicographic edge order.
    std::string serialize() const;

    bool operator==(const EdgeColoring&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Color> color_;
};

// True iff the red side has no K_t and every blue degree is at most k-1,
// i.e. the coloring witnesses that the host does not arrow (K_t, K_{1,k}).
bool is_critical(const Graph& g, const EdgeColoring& c, const PairParams& p);

}  // namespace cocrit
