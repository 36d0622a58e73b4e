#include "cocrit/graph.hpp"

#include <stdexcept>
#include <string>

namespace cocrit {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    adj_.assign(n, Bitset(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop rejected");
    if (adj_[u].test(v)) throw std::invalid_argument("edge already present");
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) throw std::invalid_argument("edge not present");
    adj_[u].reset(v);
    adj_[v].reset(u);
    --m_;
}

Graph Graph::plus_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::minus_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (v > u) e.emplace_back(u, v);
        });
    return e;
}

std::vector<std::pair<int, int>> Graph::nonedges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) e.emplace_back(u, v);
    return e;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    Bitset seen(n_);
    std::vector<int> stack{0};
    seen.set(0);
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        adj_[u].for_each([&](int v) {
            if (!seen.test(v)) {
                seen.set(v);
                ++cnt;
                stack.push_back(v);
            }
        });
    }
    return cnt == n_;
}

namespace {

// Tarjan lowpoint cut-vertex scan; returns true iff some articulation exists.
struct CutScan {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    bool found = false;

    explicit CutScan(const Graph& gg) : g(gg), disc(gg.order(), -1), low(gg.order(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent) return;
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) found = true;
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        });
        if (parent == -1 && children > 1) found = true;
    }
};

}  // namespace

bool Graph::two_connected() const {
    if (n_ < 3 || !connected()) return false;
    CutScan scan(*this);
    scan.dfs(0, -1);
    return !scan.found;
}

bool Graph::clique_search(Bitset cands, int need, std::vector<int>& acc) const {
    if (need == 0) return true;
    if (cands.count() < need) return false;
    int pivot = -1, best = -1;
    cands.for_each([&](int u) {
        int c = (cands & adj_[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bitset branch = cands;
    branch.subtract(adj_[pivot]);  // always contains the pivot itself
    bool hit = false;
    branch.for_each([&](int v) {
        if (hit || !cands.test(v)) return;
        acc.push_back(v);
        if (clique_search(cands & adj_[v], need - 1, acc)) {
            hit = true;
            return;
        }
        acc.pop_back();
        cands.reset(v);
    });
    return hit;
}

std::optional<std::vector<int>> Graph::find_clique(int t, const Bitset* within) const {
    if (t < 1) throw std::invalid_argument("clique order must be >= 1");
    Bitset cands(n_);
    if (within)
        cands = *within;
    else
        cands.set_all();
    std::vector<int> acc;
    if (clique_search(std::move(cands), t, acc)) return acc;
    return std::nullopt;
}

bool Graph::has_clique(int t, const Bitset* within) const { return find_clique(t, within).has_value(); }

int Graph::triangles_through_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("triangles_through_edge needs an edge");
    return (adj_[u] & adj_[v]).count();
}

}  // namespace cocrit
