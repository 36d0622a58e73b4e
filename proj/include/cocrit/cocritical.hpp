#pragma once

#include <json.hpp>

#include "cocrit/arrowing.hpp"

namespace cocrit {

// K_t-free, and every non-edge addition closes a K_t.
bool is_kt_saturated(const Graph& g, int t);

// Saturated graphs have a universal vertex or minimum degree >= 2(t-2).
bool hajnal_dichotomy(const Graph& g, int t);

enum class CocriticalVerdict { CoCritical, NotCoCritical, Unverified };

struct NonedgeCheck {
    int u = 0, v = 0;
    ArrowStatus status = ArrowStatus::Unknown;
    uint64_t nodes = 0;
};

struct CocriticalReport {
    CocriticalVerdict verdict = CocriticalVerdict::Unverified;
    std::string reason;  // set for NotCoCritical
    bool complete_input = false;
    bool base_has_critical = false;
    std::optional<EdgeColoring> witness;  // critical coloring of g itself
    std::vector<NonedgeCheck> nonedges;
    uint64_t total_nodes = 0;

    std::vector<std::pair<int, int>> unknown_edges() const;
    nlohmann::json to_json() const;  // schema cocritical-report/1 core fields
};

// Definition check: g is non-complete, has a critical coloring, and g+e
// arrows for every non-edge e.  Every non-edge gets its own budget `per_edge`
// and its own independent search; checks may run on `jobs` threads.  The
// report is identical regardless of jobs.
CocriticalReport verify_cocritical(const Graph& g, const PairParams& p,
                                   const SearchBudget& per_edge = {}, int jobs = 1);

// Arithmetic floor every certified co-critical graph must satisfy; a
// violation inside verify_cocritical is a solver bug and throws.
bool certified_lower_bound_ok(int t, int k, long long n, long long e);

struct LemmaAudit {
    int n = 0;
    int t = 3, k = 3;
    bool max_red_found = false;  // optimum established; else checks below unset
    uint64_t nodes = 0;
    int max_red_edges = -1;
    int optima_audited = 0;

    // structural facts for the audited optimum
    std::vector<int> s_vertices;  // blue degree <= k-2
    bool s_is_clique = false;
    int alpha_blue_s = 0;  // independence number of blue graph on S
    bool alpha_ok = false;
    bool s_size_ok = false;  // |S| <= (t-1)(k-1)
    int delta_red = 0, big_delta_red = 0;
    bool delta_ok = false;      // delta(G_r) >= 2(t-2)
    bool big_delta_ok = false;  // Delta(G_r) <= n-2
    bool red_saturated = false;
    bool hajnal_ok = false;

    // t = 3 only
    bool red_two_connected = false;
    int max_triangles_per_red_edge = 0;
    bool triangles_ok = false;      // <= 2k-2 triangles of g per red edge
    bool big_delta_n3_ok = false;   // Delta(G_r) <= n-3

    bool all_ok() const;
    nlohmann::json to_json() const;
};

// Checks the structure of a max-red critical coloring of g.  With
// `all_optima`, every coloring attaining the optimum is audited and all must
// pass; otherwise just the searcher's first optimum.
LemmaAudit audit_structure(const Graph& g, const PairParams& p, const SearchBudget& b = {},
                           bool all_optima = false);

const char* to_string(CocriticalVerdict v);
const char* to_string(ArrowStatus s);

}  // namespace cocrit
