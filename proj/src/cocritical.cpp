#include "cocrit/cocritical.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace cocrit {

bool is_kt_saturated(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("saturation needs t >= 2");
    if (g.has_clique(t)) return false;
    for (auto [u, v] : g.nonedges()) {
        Bitset common = g.neighbors(u) & g.neighbors(v);
        if (t == 2) continue;  // any added edge is a K_2
        if (!g.has_clique(t - 2, &common)) return false;
    }
    return true;
}

bool hajnal_dichotomy(const Graph& g, int t) {
    if (g.order() == 0) return true;
    return g.max_degree() == g.order() - 1 || g.min_degree() >= 2 * (t - 2);
}

std::vector<std::pair<int, int>> CocriticalReport::unknown_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : nonedges)
        if (c.status == ArrowStatus::Unknown) out.emplace_back(c.u, c.v);
    return out;
}

const char* to_string(CocriticalVerdict v) {
    switch (v) {
        case CocriticalVerdict::CoCritical: return "CoCritical";
        case CocriticalVerdict::NotCoCritical: return "NotCoCritical";
        default: return "Unverified";
    }
}

const char* to_string(ArrowStatus s) {
    switch (s) {
        case ArrowStatus::Arrows: return "Arrows";
        case ArrowStatus::NotArrows: return "NotArrows";
        default: return "Unknown";
    }
}

nlohmann::json CocriticalReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "cocritical-report/1";
    j["verdict"] = to_string(verdict);
    if (!reason.empty()) j["reason"] = reason;
    j["complete_input"] = complete_input;
    j["base_has_critical"] = base_has_critical;
    if (witness) {
        nlohmann::json lines = nlohmann::json::array();
        for (size_t i = 0; i < witness->edges().size(); ++i) {
            auto [u, v] = witness->edges()[i];
            lines.push_back(std::to_string(u) + " " + std::to_string(v) +
                            (witness->at_index(i) == Color::Red ? " R" : " B"));
        }
        j["witness_coloring"] = lines;
    } else {
        j["witness_coloring"] = nullptr;
    }
    nlohmann::json ne = nlohmann::json::array();
    for (const auto& c : nonedges)
        ne.push_back({{"u", c.u}, {"v", c.v}, {"status", to_string(c.status)}, {"nodes", c.nodes}});
    j["nonedges"] = ne;
    j["total_nodes"] = total_nodes;
    return j;
}

bool certified_lower_bound_ok(int t, int k, long long n, long long e) {
    if (t != 3) return true;  // no concrete constant is pinned down for t >= 4
    if (2 * e < (k + 3) * n - 2 * (k - 1) * (k - 1) - 10) return false;
    if (k == 3 && n >= 13 && e < 3 * n - 4) return false;
    return true;
}

CocriticalReport verify_cocritical(const Graph& g, const PairParams& p,
                                   const SearchBudget& per_edge, int jobs) {
    CocriticalReport rep;
    if (g.is_complete()) {
        rep.verdict = CocriticalVerdict::NotCoCritical;
        rep.complete_input = true;
        rep.reason = "complete graph";
        return rep;
    }

    SearchOutcome base = find_critical(g, p, per_edge);
    rep.total_nodes += base.nodes;
    if (base.status == SearchStatus::NoneExists) {
        rep.verdict = CocriticalVerdict::NotCoCritical;
        rep.reason = "graph itself arrows the pair";
        return rep;
    }
    if (base.status == SearchStatus::Found) {
        rep.base_has_critical = true;
        rep.witness = std::move(base.witness);
    }

    auto nonedges = g.nonedges();
    rep.nonedges.resize(nonedges.size());
    auto work = [&](size_t i) {
        auto [u, v] = nonedges[i];
        ArrowVerdict av = arrows(g.plus_edge(u, v), p, per_edge);
        rep.nonedges[i] = NonedgeCheck{u, v, av.status, av.nodes};
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < nonedges.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < nonedges.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& c : rep.nonedges) rep.total_nodes += c.nodes;

    for (const auto& c : rep.nonedges)
        if (c.status == ArrowStatus::NotArrows) {
            rep.verdict = CocriticalVerdict::NotCoCritical;
            rep.reason = "adding non-edge " + std::to_string(c.u) + "-" + std::to_string(c.v) +
                         " does not make the graph arrow";
            return rep;
        }
    if (!rep.base_has_critical || !rep.unknown_edges().empty()) {
        rep.verdict = CocriticalVerdict::Unverified;
        return rep;
    }
    rep.verdict = CocriticalVerdict::CoCritical;
    if (!certified_lower_bound_ok(p.t, p.k, g.order(), g.size()))
        throw std::logic_error("certified co-critical graph below the proven size floor");
    return rep;
}

namespace {

// Independence number of the blue subgraph restricted to S.
int alpha_blue_on(const EdgeColoring& c, const std::vector<int>& s) {
    Graph nonblue = c.blue_subgraph().complement();
    Bitset mask(c.order());
    for (int v : s) mask.set(v);
    for (int size = int(s.size()); size >= 1; --size)
        if (nonblue.has_clique(size, &mask)) return size;
    return 0;
}

void audit_one(const Graph& g, const PairParams& p, const EdgeColoring& c, LemmaAudit& a,
               bool first) {
    int n = g.order();
    auto bd = c.blue_degrees();
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (bd[v] <= p.k - 2) s.push_back(v);

    bool s_clique = true;
    for (size_t i = 0; i < s.size() && s_clique; ++i)
        for (size_t j = i + 1; j < s.size() && s_clique; ++j)
            if (!g.has_edge(s[i], s[j])) s_clique = false;

    int alpha = alpha_blue_on(c, s);
    Graph gr = c.red_subgraph();
    int dmin = gr.min_degree(), dmax = gr.max_degree();

    bool two_conn = true;
    int max_tri = 0;
    if (p.t == 3) {
        two_conn = gr.two_connected();
        for (auto [u, v] : gr.edges()) max_tri = std::max(max_tri, g.triangles_through_edge(u, v));
    }

    if (first) {
        a.s_vertices = s;
        a.alpha_blue_s = alpha;
        a.delta_red = dmin;
        a.big_delta_red = dmax;
        a.max_triangles_per_red_edge = max_tri;
        a.s_is_clique = s_clique;
        a.alpha_ok = alpha <= p.t - 1;
        a.s_size_ok = int(s.size()) <= (p.t - 1) * (p.k - 1);
        a.delta_ok = dmin >= 2 * (p.t - 2);
        a.big_delta_ok = dmax <= n - 2;
        a.red_saturated = is_kt_saturated(gr, p.t);
        a.hajnal_ok = hajnal_dichotomy(gr, p.t);
        a.red_two_connected = two_conn;
        a.triangles_ok = max_tri <= 2 * p.k - 2;
        a.big_delta_n3_ok = dmax <= n - 3;
    } else {
        a.s_is_clique &= s_clique;
        a.alpha_ok &= alpha <= p.t - 1;
        a.s_size_ok &= int(s.size()) <= (p.t - 1) * (p.k - 1);
        a.delta_ok &= dmin >= 2 * (p.t - 2);
        a.big_delta_ok &= dmax <= n - 2;
        a.red_saturated &= is_kt_saturated(gr, p.t);
        a.hajnal_ok &= hajnal_dichotomy(gr, p.t);
        a.red_two_connected &= two_conn;
        a.triangles_ok &= max_tri <= 2 * p.k - 2;
        a.big_delta_n3_ok &= dmax <= n - 3;
    }
    ++a.optima_audited;
}

}  // namespace

LemmaAudit audit_structure(const Graph& g, const PairParams& p, const SearchBudget& b,
                           bool all_optima) {
    LemmaAudit a;
    a.n = g.order();
    a.t = p.t;
    a.k = p.k;
    if (!all_optima) {
        SearchOutcome best = max_red_critical(g, p, b);
        a.nodes = best.nodes;
        if (best.status != SearchStatus::Found) return a;
        a.max_red_found = true;
        a.max_red_edges = best.witness->red_count();
        audit_one(g, p, *best.witness, a, true);
        return a;
    }
    EnumerationOutcome opt = enumerate_optimal_red(g, p, UINT64_MAX, b);
    a.nodes = opt.nodes;
    if (opt.colorings.empty()) return a;
    a.max_red_found = true;
    a.max_red_edges = opt.colorings.front().red_count();
    for (size_t i = 0; i < opt.colorings.size(); ++i)
        audit_one(g, p, opt.colorings[i], a, i == 0);
    return a;
}

bool LemmaAudit::all_ok() const {
    if (!max_red_found) return false;
    bool base = s_is_clique && alpha_ok && s_size_ok && delta_ok && big_delta_ok &&
                red_saturated && hajnal_ok;
    if (t != 3) return base;
    return base && red_two_connected && triangles_ok && big_delta_n3_ok;
}

nlohmann::json LemmaAudit::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["t"] = t;
    j["k"] = k;
    j["max_red_found"] = max_red_found;
    j["nodes"] = nodes;
    if (!max_red_found) {
        j["checks"] = nullptr;
        return j;
    }
    j["max_red_edges"] = max_red_edges;
    j["optima_audited"] = optima_audited;
    nlohmann::json c;
    c["s_vertices"] = s_vertices;
    c["s_is_clique"] = s_is_clique;
    c["alpha_blue_s"] = alpha_blue_s;
    c["alpha_ok"] = alpha_ok;
    c["s_size_ok"] = s_size_ok;
    c["delta_red"] = delta_red;
    c["delta_ok"] = delta_ok;
    c["big_delta_red"] = big_delta_red;
    c["big_delta_ok"] = big_delta_ok;
    c["red_saturated"] = red_saturated;
    c["hajnal_ok"] = hajnal_ok;
    if (t == 3) {
        c["red_two_connected"] = red_two_connected;
        c["max_triangles_per_red_edge"] = max_triangles_per_red_edge;
        c["triangles_ok"] = triangles_ok;
        c["big_delta_n3_ok"] = big_delta_n3_ok;
    }
    j["checks"] = c;
    j["all_ok"] = all_ok();
    return j;
}

}  // namespace cocrit
