#include "cocrit/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocrit {

namespace {

constexpr int8_t kOpen = 0, kRed = 1, kBlue = 2;

struct Engine {
    const Graph& g;
    int t, k, n, m;
    std::vector<std::pair<int, int>> edges;  // branch order
    std::vector<int> lex_of;                 // branch index -> lex index
    std::vector<int8_t> st;
    std::vector<Bitset> red;
    std::vector<int> blue_deg;
    std::vector<int> trail;
    int open_count;
    int red_cnt = 0;

    uint64_t nodes = 0;
    uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;

    Bitset tmp_c, tmp_d;  // scratch for threat checks; no nesting

    Engine(const Graph& gg, const PairParams& p, const SearchBudget& b)
        : g(gg), t(p.t), k(p.k), n(gg.order()), m(int(gg.size())), tmp_c(n), tmp_d(n) {
        auto lex = g.edges();
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b2) {
            int da = g.degree(lex[a].first) + g.degree(lex[a].second);
            int db = g.degree(lex[b2].first) + g.degree(lex[b2].second);
            return da > db;
        });
        edges.resize(m);
        lex_of.resize(m);
        for (int i = 0; i < m; ++i) {
            edges[i] = lex[idx[i]];
            lex_of[i] = idx[i];
        }
        st.assign(m, kOpen);
        red.assign(n, Bitset(n));
        blue_deg.assign(n, 0);
        open_count = m;
        node_limit = b.node_limit;
        use_deadline = b.wall_limit != std::chrono::milliseconds::max();
        if (use_deadline) deadline = std::chrono::steady_clock::now() + b.wall_limit;
    }

    // Red K_{t-2} inside the common red neighborhood of u and v, i.e.
    // coloring uv red would close a red K_t.
    bool red_completion_threat(int u, int v) {
        if (t == 3) return red[u].intersects(red[v]);
        tmp_c = red[u];
        tmp_c &= red[v];
        int need = t - 2;
        if (tmp_c.count() < need) return false;
        if (need == 2) {
            bool hit = false;
            tmp_c.for_each([&](int w) {
                if (!hit && red[w].intersects(tmp_c)) hit = true;
            });
            return hit;
        }
        if (need == 3) {
            bool hit = false;
            tmp_c.for_each([&](int w) {
                if (hit) return;
                tmp_d = tmp_c;
                tmp_d &= red[w];
                tmp_d.for_each([&](int x) {
                    if (!hit && red[x].intersects(tmp_d)) hit = true;
                });
            });
            return hit;
        }
        return clique_in_red(tmp_c, need);  // t >= 6: generic, allocating
    }

    bool clique_in_red(Bitset cands, int need) const {
        if (need == 0) return true;
        if (cands.count() < need) return false;
        bool hit = false;
        cands.for_each([&](int v) {
            if (hit || !cands.test(v)) return;
            if (clique_in_red(cands & red[v], need - 1)) {
                hit = true;
                return;
            }
            cands.reset(v);
        });
        return hit;
    }

    bool assign(int i, int8_t color) {
        auto [u, v] = edges[i];
        if (color == kRed) {
            if (red_completion_threat(u, v)) return false;
            red[u].set(v);
            red[v].set(u);
            ++red_cnt;
        } else {
            if (blue_deg[u] >= k - 1 || blue_deg[v] >= k - 1) return false;
            ++blue_deg[u];
            ++blue_deg[v];
        }
        st[i] = color;
        --open_count;
        trail.push_back(i);
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            int i = trail.back();
            trail.pop_back();
            auto [u, v] = edges[i];
            if (st[i] == kRed) {
                red[u].reset(v);
                red[v].reset(u);
                --red_cnt;
            } else {
                --blue_deg[u];
                --blue_deg[v];
            }
            st[i] = kOpen;
            ++open_count;
        }
    }

    // Fixpoint pass over the open edges.  False means contradiction.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < m; ++i) {
                if (st[i] != kOpen) continue;
                auto [u, v] = edges[i];
                bool must_red = blue_deg[u] >= k - 1 || blue_deg[v] >= k - 1;
                bool must_blue = red_completion_threat(u, v);
                if (must_red && must_blue) return false;
                if (must_red) {
                    if (!assign(i, kRed)) return false;
                    changed = true;
                } else if (must_blue) {
                    if (!assign(i, kBlue)) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool budget_spent() {
        if (nodes >= node_limit) return true;
        if (use_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    int first_open() const {
        for (int i = 0; i < m; ++i)
            if (st[i] == kOpen) return i;
        return -1;
    }

    EdgeColoring snapshot() const {
        std::vector<Color> by_lex(m);
        for (int i = 0; i < m; ++i)
            by_lex[lex_of[i]] = st[i] == kRed ? Color::Red : Color::Blue;
        return EdgeColoring(g, std::move(by_lex));
    }

    // Policy must provide:  bool prune(Engine&)       -- backtrack this subtree
    //                       bool on_solution(Engine&) -- false stops the search
    // Returns 0 subtree done, 1 stop requested, 2 budget spent.
    template <class Policy>
    int dfs(Policy& pol) {
        ++nodes;
        if (budget_spent()) return 2;
        if (pol.prune(*this)) return 0;
        int i = first_open();
        if (i < 0) return pol.on_solution(*this) ? 0 : 1;
        for (int8_t color : {kRed, kBlue}) {
            size_t mark = trail.size();
            if (assign(i, color) && propagate()) {
                if (int r = dfs(pol); r != 0) {
                    undo_to(mark);
                    return r;
                }
            }
            undo_to(mark);
        }
        return 0;
    }

    // Root wrapper: initial propagation may already refute.
    template <class Policy>
    int run(Policy& pol) {
        if (!propagate()) return 0;
        return dfs(pol);
    }
};

struct FindPolicy {
    std::optional<EdgeColoring> found;
    bool prune(Engine&) { return false; }
    bool on_solution(Engine& e) {
        found = e.snapshot();
        return false;
    }
};

struct EnumeratePolicy {
    uint64_t limit;
    std::vector<EdgeColoring> out;
    uint64_t total = 0;
    bool prune(Engine&) { return false; }
    bool on_solution(Engine& e) {
        ++total;
        if (out.size() < limit) out.push_back(e.snapshot());
        return true;
    }
};

struct MaxRedPolicy {
    int best = -1;
    std::optional<EdgeColoring> witness;
    bool prune(Engine& e) { return e.red_cnt + e.open_count <= best; }
    bool on_solution(Engine& e) {
        if (e.red_cnt > best) {
            best = e.red_cnt;
            witness = e.snapshot();
        }
        return true;
    }
};

struct OptimalRedPolicy {
    int target;
    uint64_t limit;
    std::vector<EdgeColoring> out;
    uint64_t total = 0;
    bool prune(Engine& e) { return e.red_cnt + e.open_count < target; }
    bool on_solution(Engine& e) {
        if (e.red_cnt != target) return true;
        ++total;
        if (out.size() < limit) out.push_back(e.snapshot());
        return true;
    }
};

}  // namespace

SearchOutcome find_critical(const Graph& g, const PairParams& p, const SearchBudget& b) {
    Engine e(g, p, b);
    FindPolicy pol;
    int r = e.run(pol);
    SearchOutcome out;
    out.nodes = e.nodes;
    if (r == 2)
        out.status = SearchStatus::Exhausted;
    else if (pol.found) {
        out.status = SearchStatus::Found;
        out.witness = std::move(pol.found);
    } else {
        out.status = SearchStatus::NoneExists;
    }
    return out;
}

EnumerationOutcome enumerate_critical(const Graph& g, const PairParams& p, uint64_t limit,
                                      const SearchBudget& b) {
    Engine e(g, p, b);
    EnumeratePolicy pol{limit};
    int r = e.run(pol);
    EnumerationOutcome out;
    out.colorings = std::move(pol.out);
    out.total = pol.total;
    out.complete = r == 0;
    out.nodes = e.nodes;
    return out;
}

SearchOutcome max_red_critical(const Graph& g, const PairParams& p, const SearchBudget& b) {
    Engine e(g, p, b);
    MaxRedPolicy pol;
    int r = e.run(pol);
    SearchOutcome out;
    out.nodes = e.nodes;
    out.witness = std::move(pol.witness);
    if (r == 2)
        out.status = SearchStatus::Exhausted;
    else
        out.status = out.witness ? SearchStatus::Found : SearchStatus::NoneExists;
    return out;
}

EnumerationOutcome enumerate_optimal_red(const Graph& g, const PairParams& p, uint64_t limit,
                                         const SearchBudget& b) {
    SearchOutcome best = max_red_critical(g, p, b);
    EnumerationOutcome out;
    out.nodes = best.nodes;
    if (best.status != SearchStatus::Found) return out;
    Engine e(g, p, b);
    OptimalRedPolicy pol{best.witness->red_count(), limit};
    int r = e.run(pol);
    out.colorings = std::move(pol.out);
    out.total = pol.total;
    out.complete = r == 0;
    out.nodes += e.nodes;
    return out;
}

uint64_t brute_force_critical(const Graph& g, const PairParams& p) {
    auto edges = g.edges();
    int m = int(edges.size());
    if (m > 24) throw std::invalid_argument("brute force capped at 24 edges");
    int n = g.order();
    std::vector<int> blue_deg(n);
    std::vector<Bitset> red(n, Bitset(n));
    uint64_t count = 0;

    auto red_clique = [&](auto&& self, Bitset cands, int need) -> bool {
        if (need == 0) return true;
        if (cands.count() < need) return false;
        bool hit = false;
        cands.for_each([&](int v) {
            if (hit || !cands.test(v)) return;
            if (self(self, cands & red[v], need - 1)) {
                hit = true;
                return;
            }
            cands.reset(v);
        });
        return hit;
    };

    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        std::fill(blue_deg.begin(), blue_deg.end(), 0);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if ((mask >> i) & 1) {
                if (++blue_deg[edges[i].first] > p.k - 1) ok = false;
                if (++blue_deg[edges[i].second] > p.k - 1) ok = false;
            }
        if (!ok) continue;
        for (auto& r : red) r.clear();
        for (int i = 0; i < m; ++i)
            if (!((mask >> i) & 1)) {
                red[edges[i].first].set(edges[i].second);
                red[edges[i].second].set(edges[i].first);
            }
        Bitset all(n);
        all.set_all();
        if (!red_clique(red_clique, all, p.t)) ++count;
    }
    return count;
}

}  // namespace cocrit
