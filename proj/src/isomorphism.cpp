#include "cocrit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cocrit {

namespace {

using Coloring = std::vector<int>;  // vertex -> color id

// One round of joint 1-dimensional refinement.  Signature ids are assigned
// from the merged signature set so equal colors mean the same thing on both
// sides.  Returns false if the color histograms ever disagree.
struct RefinePair {
    const Graph &g, &h;

    bool stable(Coloring& cg, Coloring& ch) const {
        int ncolors = 1 + std::max(cg.empty() ? -1 : *std::max_element(cg.begin(), cg.end()),
                                   ch.empty() ? -1 : *std::max_element(ch.begin(), ch.end()));
        for (;;) {
            using Sig = std::pair<int, std::vector<int>>;
            auto signatures = [&](const Graph& gr, const Coloring& c) {
                std::vector<Sig> s(gr.order());
                for (int v = 0; v < gr.order(); ++v) {
                    s[v].first = c[v];
                    gr.neighbors(v).for_each([&](int u) { s[v].second.push_back(c[u]); });
                    std::sort(s[v].second.begin(), s[v].second.end());
                }
                return s;
            };
            auto sg = signatures(g, cg);
            auto sh = signatures(h, ch);

            std::map<Sig, int> ids;
            for (const auto& s : sg) ids.emplace(s, 0);
            for (const auto& s : sh) ids.emplace(s, 0);
            int next = 0;
            for (auto& [sig, id] : ids) id = next++;

            std::vector<int> histg(next, 0), histh(next, 0);
            Coloring ng(g.order()), nh(h.order());
            for (int v = 0; v < g.order(); ++v) ++histg[ng[v] = ids[sg[v]]];
            for (int v = 0; v < h.order(); ++v) ++histh[nh[v] = ids[sh[v]]];
            if (histg != histh) return false;

            bool same = next == ncolors;
            cg = std::move(ng);
            ch = std::move(nh);
            if (same) return true;
            ncolors = next;
        }
    }
};

struct IsoSearch {
    const Graph &g, &h;

    bool map_valid(const std::vector<int>& map) const {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
        return true;
    }

    // seeds: forced pairs (gv -> hv), individualized with distinct colors.
    std::optional<std::vector<int>> run(const std::vector<std::pair<int, int>>& seeds) const {
        Coloring cg(g.order(), 0), ch(h.order(), 0);
        int tag = 1;
        for (auto [a, b] : seeds) {
            cg[a] = tag;
            ch[b] = tag;
            ++tag;
        }
        if (!RefinePair{g, h}.stable(cg, ch)) return std::nullopt;

        // cell sizes per color
        int ncolors = g.order() == 0 ? 0 : 1 + *std::max_element(cg.begin(), cg.end());
        std::vector<int> size(ncolors, 0);
        for (int c : cg) ++size[c];

        int splitcolor = -1;
        for (int c = 0; c < ncolors; ++c)
            if (size[c] > 1) {
                splitcolor = c;
                break;
            }

        if (splitcolor == -1) {
            std::vector<int> map(g.order(), -1), where(ncolors, -1);
            for (int v = 0; v < h.order(); ++v) where[ch[v]] = v;
            for (int v = 0; v < g.order(); ++v) map[v] = where[cg[v]];
            if (map_valid(map)) return map;
            return std::nullopt;
        }

        int v = -1;
        for (int u = 0; u < g.order(); ++u)
            if (cg[u] == splitcolor) {
                v = u;
                break;
            }
        auto next = seeds;
        next.emplace_back(v, -1);
        for (int w = 0; w < h.order(); ++w) {
            if (ch[w] != splitcolor) continue;
            next.back().second = w;
            if (auto m = run(next)) return m;
        }
        return std::nullopt;
    }
};

void check_cap(const Graph& g) {
    if (g.order() > kIsoCap)
        throw std::invalid_argument("isomorphism search capped at " + std::to_string(kIsoCap) +
                                    " vertices");
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    check_cap(g);
    check_cap(h);
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
    return IsoSearch{g, h}.run({});
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

AutomorphismGroup automorphism_group(const Graph& g) {
    check_cap(g);
    AutomorphismGroup res;
    std::vector<std::pair<int, int>> base;  // (v, v) pairs fixed pointwise

    for (;;) {
        Coloring cg(g.order(), 0), ch(g.order(), 0);
        int tag = 1;
        for (auto [a, b] : base) {
            cg[a] = tag;
            ch[b] = tag;
            ++tag;
        }
        RefinePair{g, g}.stable(cg, ch);

        int v = -1;
        std::vector<int> cell;
        for (int u = 0; u < g.order() && v == -1; ++u) {
            cell.clear();
            for (int w = 0; w < g.order(); ++w)
                if (cg[w] == cg[u]) cell.push_back(w);
            if (cell.size() > 1) v = u;
        }
        if (v == -1) break;  // discrete: stabilizer is trivial

        unsigned long long orbit = 1;
        auto seeds = base;
        seeds.emplace_back(v, -1);
        for (int w : cell) {
            if (w == v) continue;
            seeds.back().second = w;
            if (auto m = IsoSearch{g, g}.run(seeds)) {
                res.generators.push_back(*m);
                ++orbit;
            }
        }
        unsigned long long prev = res.order;
        res.order *= orbit;
        if (prev != 0 && res.order / prev != orbit) res.order_overflow = true;
        base.emplace_back(v, v);
    }
    return res;
}

}  // namespace cocrit
