#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cocrit/bitset.hpp"

namespace cocrit {

// Undirected simple graph on vertices 0..n-1, one adjacency bitset row per
// vertex.  Rows are kept symmetric and irreflexive by construction; edge
// count is maintained incrementally.
class Graph {
public:
    // Generous desk-scale cap; graph6 long form is accepted up to this.
    static constexpr int kMaxVertices = 4096;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // rejects loops and existing edges
    void remove_edge(int u, int v);  // rejects absent edges
    Graph plus_edge(int u, int v) const;
    Graph minus_edge(int u, int v) const;

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    Graph complement() const;
    bool is_complete() const { return 2 * m_ == (long long)n_ * (n_ - 1); }

    // Edge pairs (u,v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<int, int>> nonedges() const;

    bool connected() const;
    bool two_connected() const;  // connected, n >= 3, no cut vertex

    // Smallest-witness search for a clique of exactly t vertices, optionally
    // restricted to `within`.  Pivot-pruned branch and bound on bitsets.
    std::optional<std::vector<int>> find_clique(int t, const Bitset* within = nullptr) const;
    bool has_clique(int t, const Bitset* within = nullptr) const;

    // Number of triangles of this graph containing the edge uv.
    int triangles_through_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    bool clique_search(Bitset cands, int need, std::vector<int>& acc) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

}  // namespace cocrit
