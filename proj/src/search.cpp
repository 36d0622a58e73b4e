#include "cocrit/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "cocrit/constructions.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/isomorphism.hpp"

namespace cocrit {

namespace {

// Deterministic across platforms, unlike shuffling through <random> adaptors.
struct SplitMix64 {
    uint64_t s;
    explicit SplitMix64(uint64_t seed) : s(seed) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

template <class T>
void shuffle_inplace(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

Graph random_maximal_ktfree(int n, int t, uint64_t seed) {
    if (t < 3) throw std::invalid_argument("random_maximal_ktfree needs t >= 3");
    if (n < t) throw std::invalid_argument("random_maximal_ktfree needs n >= t");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    SplitMix64 rng(seed);
    shuffle_inplace(pairs, rng);
    Graph g(n);
    for (auto [u, v] : pairs) {
        Bitset common = g.neighbors(u) & g.neighbors(v);
        if (!g.has_clique(t - 2, &common)) g.add_edge(u, v);
    }
    return g;
}

namespace {

struct PairIndexer {
    int n, nb;
    std::vector<std::vector<int>> idx;

    explicit PairIndexer(int n_) : n(n_), idx(n_, std::vector<int>(n_, -1)) {
        nb = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) idx[u][v] = idx[v][u] = nb++;
    }
};

// Bit-relabeling table for one permutation: T[e] = index of the image pair.
std::vector<int> perm_table(const PairIndexer& px, const std::vector<int>& perm) {
    std::vector<int> t(px.nb);
    for (int u = 0; u < px.n; ++u)
        for (int v = u + 1; v < px.n; ++v) t[px.idx[u][v]] = px.idx[perm[u]][perm[v]];
    return t;
}

// mask is canonical iff no relabeling is lexicographically smaller, reading
// bit 0 (pair (0,1)) as most significant.
bool survives(uint32_t mask, const std::vector<int>& table, int nb) {
    for (int e = 0; e < nb; ++e) {
        int a = (mask >> table[e]) & 1;
        int b = (mask >> e) & 1;
        if (a != b) return a > b;
    }
    return true;
}

Graph decode(uint32_t mask, const PairIndexer& px) {
    Graph g(px.n);
    for (int u = 0; u < px.n; ++u)
        for (int v = u + 1; v < px.n; ++v)
            if ((mask >> px.idx[u][v]) & 1) g.add_edge(u, v);
    return g;
}

// Definition check with early exit; exact at this scale (budgets unlimited).
bool is_cocritical_exact(const Graph& g, const PairParams& p) {
    if (g.is_complete()) return false;
    if (find_critical(g, p).status != SearchStatus::Found) return false;
    for (auto [u, v] : g.nonedges())
        if (arrows(g.plus_edge(u, v), p).status != ArrowStatus::Arrows) return false;
    return true;
}

}  // namespace

SmallEnumeration enumerate_small_cocritical(int n, const PairParams& p, int jobs) {
    if (n < 0 || n > 8) throw std::invalid_argument("exhaustive census capped at 8 vertices");
    SmallEnumeration out;
    if (n < 2) {
        out.labeled_total = 1;
        return out;
    }
    PairIndexer px(n);
    out.labeled_total = uint64_t{1} << px.nb;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> all_tables, swap_tables;
    do {
        all_tables.push_back(perm_table(px, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int v = 0; v < n; ++v) perm[v] = v;
            std::swap(perm[i], perm[j]);
            swap_tables.push_back(perm_table(px, perm));
        }

    int row_bits = n - 1, rest_bits = px.nb - row_bits;
    uint32_t parts = uint32_t{1} << row_bits;
    std::atomic<uint32_t> next_part{0};
    std::atomic<uint64_t> checked{0};
    std::vector<std::vector<Graph>> found(std::max(jobs, 1));

    auto worker = [&](int slot) {
        for (uint32_t part = next_part.fetch_add(1); part < parts; part = next_part.fetch_add(1)) {
            for (uint32_t rest = 0; rest < (uint32_t{1} << rest_bits); ++rest) {
                uint32_t mask = part | (rest << row_bits);
                bool ok = true;
                for (const auto& t : swap_tables)
                    if (!survives(mask, t, px.nb)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                for (const auto& t : all_tables)
                    if (!survives(mask, t, px.nb)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                checked.fetch_add(1, std::memory_order_relaxed);
                Graph g = decode(mask, px);
                if (is_cocritical_exact(g, p)) found[slot].push_back(std::move(g));
            }
        }
    };

    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& th : pool) th.join();
    }
    out.candidates_checked = checked.load();

    std::vector<Graph> merged;
    for (auto& f : found)
        for (auto& g : f) merged.push_back(std::move(g));

    // Canonical masks are already one per class; dedup again as a guard.
    std::vector<Graph> unique;
    for (const auto& g : merged) {
        bool dup = false;
        for (const auto& h : unique)
            if (g.size() == h.size() && are_isomorphic(g, h)) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(g);
    }
    for (const auto& g : unique)
        if (verify_cocritical(g, p).verdict != CocriticalVerdict::CoCritical)
            throw std::logic_error("census candidate failed re-verification");

    std::sort(unique.begin(), unique.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return emit_graph6(a) < emit_graph6(b);
    });
    out.graphs = std::move(unique);
    return out;
}

namespace {

struct BudgetLedger {
    uint64_t nodes_left;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;
    uint64_t used = 0;

    explicit BudgetLedger(const SearchBudget& b)
        : nodes_left(b.node_limit), use_deadline(b.wall_limit != std::chrono::milliseconds::max()) {
        if (use_deadline) deadline = std::chrono::steady_clock::now() + b.wall_limit;
    }

    bool spent() const {
        return nodes_left == 0 ||
               (use_deadline && std::chrono::steady_clock::now() >= deadline);
    }

    std::optional<SearchBudget> slice() const {
        if (spent()) return std::nullopt;
        SearchBudget s;
        s.node_limit = nodes_left;
        if (use_deadline) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                deadline - std::chrono::steady_clock::now());
            if (left <= std::chrono::milliseconds::zero()) return std::nullopt;
            s.wall_limit = left;
        }
        return s;
    }

    void charge(uint64_t nodes) {
        used += nodes;
        nodes_left = nodes_left > nodes ? nodes_left - nodes : 0;
    }
};

}  // namespace

LocalSearchResult local_search_cocritical(const PairParams& p, int n, uint64_t seed,
                                          const SearchBudget& budget) {
    LocalSearchResult res;
    if (n < ramsey_star(p.t, p.k)) throw std::invalid_argument("no co-critical graphs this small");
    if (p.t > 5 || n < (2 * p.t - 2) * p.k + 1) return res;  // no certified starting point

    Construction start = build_extremal(p.t, p.k, n);
    res.best = start.graph;
    res.best_edges = start.graph.size();
    BudgetLedger ledger(budget);

    auto verify_slice = [&](const Graph& g) -> std::optional<CocriticalReport> {
        auto s = ledger.slice();
        if (!s) return std::nullopt;
        CocriticalReport r = verify_cocritical(g, p, *s);
        ledger.charge(r.total_nodes);
        return r;
    };

    if (auto r = verify_slice(*res.best); r && r->verdict == CocriticalVerdict::CoCritical)
        res.certified = true;

    SplitMix64 rng(seed);
    while (!ledger.spent() && res.best->size() > 0) {
        auto edges = res.best->edges();
        auto [ru, rv] = edges[rng.below(edges.size())];
        Graph cand = res.best->minus_edge(ru, rv);

        // Greedy repair: pull in every augmentation that fails to arrow.
        bool gave_up = false;
        for (auto [u, v] : cand.nonedges()) {
            if (cand.has_edge(u, v)) continue;  // added by an earlier repair
            auto s = ledger.slice();
            if (!s) {
                gave_up = true;
                break;
            }
            ArrowVerdict av = arrows(cand.plus_edge(u, v), p, *s);
            ledger.charge(av.nodes);
            if (av.status == ArrowStatus::NotArrows)
                cand.add_edge(u, v);
            else if (av.status == ArrowStatus::Unknown) {
                gave_up = true;
                break;
            }
        }
        if (gave_up || cand.size() >= res.best->size()) continue;
        if (auto r = verify_slice(cand); r && r->verdict == CocriticalVerdict::CoCritical) {
            res.best = std::move(cand);
            res.best_edges = res.best->size();
            res.certified = true;
            ++res.improvements;
        }
    }
    res.nodes_used = ledger.used;
    return res;
}

}  // namespace cocrit
