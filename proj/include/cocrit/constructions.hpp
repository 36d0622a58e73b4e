#pragma once

#include <json.hpp>
#include <optional>

#include "cocrit/coloring.hpp"

namespace cocrit {

// 1 if k or n is odd, else 0.  Chosen so the leftover block R below always
// admits a (k-1)-regular graph.
int epsilon_parity(int k, int n);

// Circulant with offsets ±1..±floor(d/2), plus the antipode when d is odd.
// Needs d < m and d*m even.
Graph circulant_regular(int m, int d);

// d-regular bipartite on parts {b_0..} and {c_0..}: b_i ~ c_{(i+j) mod parts}
// for j in 0..d-1.  Needs d <= parts.
Graph regular_bipartite(int parts, int d);

struct BlockRange {
    int lo = 0, hi = 0;  // [lo, hi)
    int size() const { return hi - lo; }
    bool contains(int v) const { return lo <= v && v < hi; }
};

struct ConstructionPlan {
    int t = 0, k = 0, n = 0, epsilon = 0;
    BlockRange A;
    std::vector<BlockRange> B, C;  // one block for t=3, t-2 blocks otherwise
    BlockRange R;                  // with epsilon=1 the first R vertex is the isolated-in-R one
    std::vector<int> x, y;
    int z = -1;  // t = 3 only

    nlohmann::json to_json() const;
};

struct Construction {
    Graph graph;
    EdgeColoring sigma;  // the intended critical coloring
    ConstructionPlan plan;
};

// Extremal co-critical candidates.  t=3 needs k >= 3, n >= 4k+1; t in {4,5}
// needs k >= 3, n >= (2t-2)k+1.  Vertex numbering: A, then B blocks, then C
// blocks, then R, then the special vertices.
Construction build_t3(int k, int n);
Construction build_t45(int t, int k, int n);
Construction build_extremal(int t, int k, int n);

// Two independent vertices y,z over independent blocks A,B,C with B joined
// to C, N(y) = A u B, N(z) = A u C.  Every K_3-saturated graph of minimum
// degree 2 has this shape.
struct JParams {
    int a = 1, b = 0, c = 0;
};
Graph build_J(const JParams& p);
long long j_edge_count(const JParams& p);  // 2(|J|-2) + bc - b - c
std::optional<JParams> match_J(const Graph& g);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return double(num) / double(den); }
    bool operator==(const Rational&) const = default;
};

// Proven floor on e(G) for co-critical graphs; the constant is pinned down
// only for t = 3, so larger t yields nullopt.
std::optional<Rational> lower_bound_edges(int t, int k, int n);

// Exact edge count of build_extremal(t, k, n), in closed form.
long long upper_edge_count(int t, int k, int n);

}  // namespace cocrit
