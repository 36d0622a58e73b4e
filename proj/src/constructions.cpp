#include "cocrit/constructions.hpp"

#include <map>
#include <stdexcept>

#include "cocrit/isomorphism.hpp"

namespace cocrit {

int epsilon_parity(int k, int n) { return (k % 2 != 0 || n % 2 != 0) ? 1 : 0; }

Graph circulant_regular(int m, int d) {
    if (d < 0 || d >= m) throw std::invalid_argument("circulant needs 0 <= d < m");
    if ((long long)d * m % 2 != 0) throw std::invalid_argument("circulant needs d*m even");
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int off = 1; off <= d / 2; ++off) g.add_edge(i, (i + off) % m);
    if (d % 2 == 1)
        for (int i = 0; i < m / 2; ++i) g.add_edge(i, i + m / 2);
    return g;
}

Graph regular_bipartite(int parts, int d) {
    if (parts < 0 || d < 0 || d > parts)
        throw std::invalid_argument("regular bipartite needs 0 <= d <= parts");
    Graph g(2 * parts);
    for (int i = 0; i < parts; ++i)
        for (int j = 0; j < d; ++j) g.add_edge(i, parts + (i + j) % parts);
    return g;
}

nlohmann::json ConstructionPlan::to_json() const {
    auto range = [](const BlockRange& r) { return nlohmann::json::array({r.lo, r.hi}); };
    nlohmann::json j;
    j["t"] = t;
    j["k"] = k;
    j["n"] = n;
    j["epsilon"] = epsilon;
    j["A"] = range(A);
    nlohmann::json bs = nlohmann::json::array(), cs = nlohmann::json::array();
    for (const auto& b : B) bs.push_back(range(b));
    for (const auto& c : C) cs.push_back(range(c));
    j["B"] = bs;
    j["C"] = cs;
    j["R"] = range(R);
    j["x"] = x;
    j["y"] = y;
    if (z >= 0) j["z"] = z;
    return j;
}

namespace {

// R block: a (k-1)-regular graph on n_r vertices, preceded by one isolated
// vertex when eps = 1.  Wired into g starting at offset.
void wire_r_block(Graph& g, int offset, int n_r, int k, int eps) {
    int m = n_r - eps;
    if ((long long)(k - 1) * m % 2 != 0)
        throw std::invalid_argument("construction parity violation in the regular block");
    Graph r = circulant_regular(m, k - 1);
    for (auto [u, v] : r.edges()) g.add_edge(offset + eps + u, offset + eps + v);
}

void add_block_clique(Graph& g, const BlockRange& b) {
    for (int u = b.lo; u < b.hi; ++u)
        for (int v = u + 1; v < b.hi; ++v) g.add_edge(u, v);
}

void join_blocks(Graph& g, const BlockRange& a, const BlockRange& b) {
    for (int u = a.lo; u < a.hi; ++u)
        for (int v = b.lo; v < b.hi; ++v) g.add_edge(u, v);
}

EdgeColoring paint(const Graph& g, const std::vector<std::pair<int, int>>& blue) {
    std::map<std::pair<int, int>, size_t> index;
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
    std::vector<Color> colors(edges.size(), Color::Red);
    for (auto [u, v] : blue) {
        if (u > v) std::swap(u, v);
        colors.at(index.at({u, v})) = Color::Blue;
    }
    return EdgeColoring(g, std::move(colors));
}

std::vector<std::pair<int, int>> internal_edges(const Graph& g, const BlockRange& b) {
    std::vector<std::pair<int, int>> out;
    for (int u = b.lo; u < b.hi; ++u)
        for (int v = u + 1; v < b.hi; ++v)
            if (g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

}  // namespace

Construction build_t3(int k, int n) {
    if (k < 3) throw std::invalid_argument("build_t3 needs k >= 3");
    if (n < 4 * k + 1) throw std::invalid_argument("build_t3 needs n >= 4k+1");
    int eps = epsilon_parity(k, n);

    ConstructionPlan plan;
    plan.t = 3;
    plan.k = k;
    plan.n = n;
    plan.epsilon = eps;
    plan.A = {0, k - 1};
    plan.B = {{k - 1, 2 * (k - 1)}};
    plan.C = {{2 * (k - 1), 3 * (k - 1)}};
    plan.R = {3 * (k - 1), n - 3};
    int x = n - 3, yv = n - 2, zv = n - 1;
    plan.x = {x};
    plan.y = {yv};
    plan.z = zv;

    Graph g(n);
    add_block_clique(g, plan.A);
    Graph h = regular_bipartite(k - 1, k - 2);  // sides map onto the B and C blocks
    for (auto [u, v] : h.edges())
        g.add_edge(plan.B[0].lo + u, plan.C[0].lo + (v - (k - 1)));
    wire_r_block(g, plan.R.lo, plan.R.size(), k, eps);
    join_blocks(g, plan.A, plan.B[0]);
    for (int v = 0; v < n - 3; ++v) g.add_edge(x, v);
    for (int v = 0; v < n - 3; ++v) g.add_edge(yv, v);
    g.add_edge(yv, zv);
    for (int v = plan.A.lo; v < plan.A.hi; ++v) g.add_edge(zv, v);
    for (int v = plan.C[0].lo; v < plan.C[0].hi; ++v) g.add_edge(zv, v);

    std::vector<std::pair<int, int>> blue = internal_edges(g, plan.A);
    for (auto e : internal_edges(g, {plan.B[0].lo, plan.C[0].hi})) blue.push_back(e);
    for (auto e : internal_edges(g, plan.R)) blue.push_back(e);
    for (int v = plan.B[0].lo; v < plan.B[0].hi; ++v) blue.emplace_back(x, v);
    for (int v = plan.A.lo; v < plan.A.hi; ++v) blue.emplace_back(yv, v);
    for (int v = plan.C[0].lo; v < plan.C[0].hi; ++v) blue.emplace_back(zv, v);

    return Construction{g, paint(g, blue), plan};
}

Construction build_t45(int t, int k, int n) {
    if (t != 4 && t != 5) throw std::invalid_argument("build_t45 needs t in {4,5}");
    if (k < 3) throw std::invalid_argument("build_t45 needs k >= 3");
    if (n < (2 * t - 2) * k + 1) throw std::invalid_argument("build_t45 needs n >= (2t-2)k+1");
    int eps = epsilon_parity(k, n);
    int blocks = t - 2;

    ConstructionPlan plan;
    plan.t = t;
    plan.k = k;
    plan.n = n;
    plan.epsilon = eps;
    plan.A = {0, k};
    int pos = k;
    for (int i = 0; i < blocks; ++i, pos += k - 1) plan.B.push_back({pos, pos + k - 1});
    for (int i = 0; i < blocks; ++i, pos += k - 1) plan.C.push_back({pos, pos + k - 1});
    plan.R = {pos, pos + n - (2 * t - 3) * k};
    pos = plan.R.hi;
    for (int i = 0; i < blocks; ++i) plan.x.push_back(pos++);
    for (int i = 0; i < blocks; ++i) plan.y.push_back(pos++);
    if (pos != n) throw std::logic_error("construction block arithmetic is off");

    Graph g(n);
    add_block_clique(g, plan.A);
    for (const auto& b : plan.B) add_block_clique(g, b);
    for (const auto& c : plan.C) add_block_clique(g, c);
    wire_r_block(g, plan.R.lo, plan.R.size(), k, eps);
    for (int i = 0; i < blocks; ++i) {
        join_blocks(g, plan.B[i], plan.A);
        join_blocks(g, plan.B[i], plan.C[i]);
        for (int j = i + 1; j < blocks; ++j) join_blocks(g, plan.B[i], plan.B[j]);
    }
    // x_i: all of A,B,C,R and the other x's;  y_i: B,C,R and x_j for j != i
    int h_hi = plan.C.back().hi;
    for (int i = 0; i < blocks; ++i) {
        for (int v = 0; v < h_hi; ++v) g.add_edge(plan.x[i], v);
        for (int v = plan.R.lo; v < plan.R.hi; ++v) g.add_edge(plan.x[i], v);
        for (int j = i + 1; j < blocks; ++j) g.add_edge(plan.x[i], plan.x[j]);
    }
    for (int i = 0; i < blocks; ++i) {
        for (int v = plan.A.hi; v < h_hi; ++v) g.add_edge(plan.y[i], v);
        for (int v = plan.R.lo; v < plan.R.hi; ++v) g.add_edge(plan.y[i], v);
        for (int j = 0; j < blocks; ++j)
            if (j != i) g.add_edge(plan.y[i], plan.x[j]);
    }

    std::vector<std::pair<int, int>> blue = internal_edges(g, plan.A);
    for (const auto& b : plan.B)
        for (auto e : internal_edges(g, b)) blue.push_back(e);
    for (const auto& c : plan.C)
        for (auto e : internal_edges(g, c)) blue.push_back(e);
    for (auto e : internal_edges(g, plan.R)) blue.push_back(e);
    for (int i = 0; i < blocks; ++i) {
        for (int v = plan.B[i].lo; v < plan.B[i].hi; ++v) blue.emplace_back(plan.x[i], v);
        for (int v = plan.C[i].lo; v < plan.C[i].hi; ++v) blue.emplace_back(plan.y[i], v);
    }

    return Construction{g, paint(g, blue), plan};
}

Construction build_extremal(int t, int k, int n) {
    if (t == 3) return build_t3(k, n);
    return build_t45(t, k, n);
}

Graph build_J(const JParams& p) {
    if (p.a < 1) throw std::invalid_argument("J needs |A| >= 1");
    if (p.b < 0 || p.c < 0 || (p.b == 0) != (p.c == 0))
        throw std::invalid_argument("J needs B and C both empty or both nonempty");
    int n = p.a + p.b + p.c + 2;
    Graph g(n);
    int y = p.a + p.b + p.c, z = y + 1;
    for (int i = 0; i < p.b; ++i)
        for (int j = 0; j < p.c; ++j) g.add_edge(p.a + i, p.a + p.b + j);
    for (int i = 0; i < p.a; ++i) {
        g.add_edge(y, i);
        g.add_edge(z, i);
    }
    for (int i = 0; i < p.b; ++i) g.add_edge(y, p.a + i);
    for (int j = 0; j < p.c; ++j) g.add_edge(z, p.a + p.b + j);
    return g;
}

long long j_edge_count(const JParams& p) {
    long long size = p.a + p.b + p.c + 2;
    return 2 * (size - 2) + (long long)p.b * p.c - p.b - p.c;
}

std::optional<JParams> match_J(const Graph& g) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    for (int a = 1; a <= n - 2; ++a)
        for (int b = 0; a + 2 * b <= n - 2; ++b) {
            int c = n - 2 - a - b;
            if ((b == 0) != (c == 0)) continue;
            JParams p{a, b, c};
            if (j_edge_count(p) != g.size()) continue;
            if (are_isomorphic(g, build_J(p))) return p;
        }
    return std::nullopt;
}

std::optional<Rational> lower_bound_edges(int t, int k, int n) {
    PairParams check(t, k);  // validates both ranges
    if (t >= 4) return std::nullopt;
    long long num = (long long)(k + 3) * n - 2 * (k - 1) * (k - 1) - 10;
    if (num % 2 == 0) return Rational{num / 2, 1};
    return Rational{num, 2};
}

long long upper_edge_count(int t, int k, int n) {
    int eps;
    if (t == 3) {
        if (k < 3 || n < 4 * k + 1) throw std::invalid_argument("outside the t=3 build range");
        eps = epsilon_parity(k, n);
        long long twice = (long long)(k + 3) * n + 2 * (k * k - 3 * k - 3) - (long long)(k - 1) * eps;
        if (twice % 2 != 0) throw std::logic_error("edge count formula must be integral");
        return twice / 2;
    }
    if (t != 4 && t != 5) throw std::invalid_argument("edge count pinned down only for t in {3,4,5}");
    if (k < 3 || n < (2 * t - 2) * k + 1) throw std::invalid_argument("outside the t>=4 build range");
    eps = epsilon_parity(k, n);
    long long c2 = (long long)(k - 1) * ((t * t - t - 2) * k - (t * t + t + eps - 6)) -
                   (long long)(t - 2) * (2 * k + 5 * t - 7);
    long long twice = (long long)(4 * t - 8 + k - 1) * n + c2;
    if (twice % 2 != 0) throw std::logic_error("edge count formula must be integral");
    return twice / 2;
}

}  // namespace cocrit
