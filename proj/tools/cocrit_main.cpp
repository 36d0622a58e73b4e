// Command line front end.  Every subcommand builds one JSON document; text
// output is rendered from that same document, so the two formats never
// disagree.  Exit codes: 0 established / 1 refuted / 2 undecided, 64 usage.
#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "cocrit/cocritical.hpp"
#include "cocrit/constructions.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/search.hpp"

using namespace cocrit;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct CommonOpts {
    std::string format = "text";
    bool no_meta = false;
    int jobs = 1;
    std::optional<uint64_t> budget_nodes;
    std::optional<long> budget_seconds;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--no-meta", o.no_meta, "Drop runtime metadata from the output");
}

void add_budget(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--budget-nodes", o.budget_nodes,
                    "Search node limit (default: COCRIT_BUDGET_NODES if set)");
    cmd->add_option("--budget-seconds", o.budget_seconds, "Search wall-clock limit");
}

SearchBudget resolve_budget(const CommonOpts& o) {
    uint64_t nodes = UINT64_MAX;
    if (const char* env = std::getenv("COCRIT_BUDGET_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw CLI::ValidationError("COCRIT_BUDGET_NODES", "must be a positive integer");
        nodes = v;
    }
    if (o.budget_nodes) nodes = *o.budget_nodes;
    auto wall = std::chrono::milliseconds::max();
    if (o.budget_seconds) wall = std::chrono::seconds(*o.budget_seconds);
    return SearchBudget(nodes, wall);
}

Graph read_graph(const std::string& in) {
    std::string line;
    if (in == "-") {
        while (std::getline(std::cin, line) && line.empty()) {
        }
    } else {
        std::ifstream f(in);
        if (!f) throw CLI::ValidationError("--in", "cannot open " + in);
        while (std::getline(f, line) && line.empty()) {
        }
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) throw CLI::ValidationError("--in", "no graph6 line found");
    return parse_graph6(line);
}

json coloring_lines(const EdgeColoring& c) {
    json lines = json::array();
    for (size_t i = 0; i < c.edges().size(); ++i) {
        auto [u, v] = c.edges()[i];
        lines.push_back(std::to_string(u) + " " + std::to_string(v) +
                        (c.at_index(i) == Color::Red ? " R" : " B"));
    }
    return lines;
}

void attach_meta(json& j, const CommonOpts& o, Clock::time_point t0, uint64_t nodes) {
    if (o.no_meta) return;
    json meta;
    meta["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    meta["nodes"] = nodes;
    meta["jobs"] = o.jobs;
    j["meta"] = meta;
}

void emit(const json& j, const CommonOpts& o, const std::string& text) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string render_nonedge_summary(const json& rep) {
    size_t arrows = 0, not_arrows = 0, unknown = 0;
    for (const auto& ne : rep["nonedges"]) {
        std::string s = ne["status"];
        if (s == "Arrows") ++arrows;
        else if (s == "NotArrows") ++not_arrows;
        else ++unknown;
    }
    std::string out = "non-edges: " + std::to_string(rep["nonedges"].size()) + " total, " +
                      std::to_string(arrows) + " arrow";
    if (not_arrows) out += ", " + std::to_string(not_arrows) + " do not arrow";
    if (unknown) out += ", " + std::to_string(unknown) + " undecided";
    return out + "\n";
}

std::string render_audit(const json& a) {
    std::string out;
    out += "audit: max_red=" + a["max_red_edges"].dump() + " optima_audited=" +
           a["optima_audited"].dump() + " all_ok=" + a["all_ok"].dump() + "\n";
    if (a["max_red_found"] == true) {
        const auto& c = a["checks"];
        out += "  low-blue-degree set: size=" + std::to_string(c["s_vertices"].size()) +
               " clique=" + c["s_is_clique"].dump() + " alpha=" + c["alpha_blue_s"].dump() + "\n";
        out += "  red degrees: min=" + c["delta_red"].dump() + " max=" + c["big_delta_red"].dump() +
               " saturated=" + c["red_saturated"].dump() + " dichotomy=" + c["hajnal_ok"].dump() + "\n";
        if (a["t"] == 3)
            out += "  triangle case: two_connected=" + c["red_two_connected"].dump() +
                   " max_triangles_per_red_edge=" + c["max_triangles_per_red_edge"].dump() + "\n";
    }
    return out;
}

int cmd_construct(int t, int k, int n, const std::string& out_prefix, const CommonOpts& o) {
    auto t0 = Clock::now();
    auto c = build_extremal(t, k, n);
    json j;
    j["schema"] = "cocritical-construct/1";
    j["t"] = t;
    j["k"] = k;
    j["n"] = n;
    j["epsilon"] = c.plan.epsilon;
    j["edges"] = c.graph.size();
    j["graph6"] = emit_graph6(c.graph);
    j["plan"] = c.plan.to_json();
    j["coloring"] = coloring_lines(c.sigma);
    attach_meta(j, o, t0, 0);

    if (!out_prefix.empty()) {
        std::ofstream(out_prefix + ".g6") << emit_graph6(c.graph) << "\n";
        std::ofstream(out_prefix + ".coloring") << c.sigma.serialize();
        std::ofstream(out_prefix + ".plan.json") << c.plan.to_json().dump(2) << "\n";
    }

    std::string text = "built (" + std::to_string(t) + "," + std::to_string(k) + ") host on " +
                       std::to_string(n) + " vertices: " + std::to_string(c.graph.size()) +
                       " edges, epsilon=" + std::to_string(c.plan.epsilon) + "\n" +
                       j["graph6"].get<std::string>() + "\n";
    emit(j, o, text);
    return 0;
}

int cmd_arrows(int t, int k, const std::string& in, const CommonOpts& o) {
    Graph g = read_graph(in);
    PairParams p(t, k);
    auto t0 = Clock::now();
    auto v = arrows(g, p, resolve_budget(o));
    json j;
    j["schema"] = "cocritical-arrows/1";
    j["t"] = t;
    j["k"] = k;
    j["n"] = g.order();
    j["edges"] = g.size();
    j["status"] = to_string(v.status);
    j["witness_coloring"] = v.witness ? coloring_lines(*v.witness) : json(nullptr);
    attach_meta(j, o, t0, v.nodes);

    std::string text = std::string(to_string(v.status)) + "\n";
    if (v.witness) text += v.witness->serialize();
    emit(j, o, text);
    switch (v.status) {
        case ArrowStatus::Arrows: return 0;
        case ArrowStatus::NotArrows: return 1;
        case ArrowStatus::Unknown: return 2;
    }
    return kExitInternal;
}

int cmd_colorings(int t, int k, const std::string& in, const std::string& mode, uint64_t limit,
                  const CommonOpts& o) {
    Graph g = read_graph(in);
    PairParams p(t, k);
    auto budget = resolve_budget(o);
    auto t0 = Clock::now();
    json j;
    j["schema"] = "cocritical-colorings/1";
    j["t"] = t;
    j["k"] = k;
    j["n"] = g.order();
    j["mode"] = mode;
    int rc = kExitInternal;
    std::string text;

    if (mode == "exists") {
        auto out = find_critical(g, p, budget);
        j["status"] = out.status == SearchStatus::Found       ? "Found"
                      : out.status == SearchStatus::NoneExists ? "NoneExists"
                                                                : "Exhausted";
        j["witness_coloring"] = out.witness ? coloring_lines(*out.witness) : json(nullptr);
        attach_meta(j, o, t0, out.nodes);
        text = j["status"].get<std::string>() + "\n";
        if (out.witness) text += out.witness->serialize();
        rc = out.status == SearchStatus::Found ? 0 : out.status == SearchStatus::NoneExists ? 1 : 2;
    } else if (mode == "count" || mode == "enumerate") {
        auto out = enumerate_critical(g, p, mode == "count" ? 0 : limit, budget);
        j["count"] = out.total;
        j["complete"] = out.complete;
        if (mode == "enumerate") {
            json list = json::array();
            for (const auto& c : out.colorings) list.push_back(coloring_lines(c));
            j["colorings"] = list;
            j["limit"] = limit;
        }
        attach_meta(j, o, t0, out.nodes);
        text = "critical colorings: " + std::to_string(out.total) +
               (out.complete ? "" : " (search not finished)") + "\n";
        if (mode == "enumerate")
            for (const auto& c : out.colorings) text += c.serialize() + "--\n";
        rc = !out.complete ? 2 : out.total > 0 ? 0 : 1;
    } else {  // max-red
        auto out = max_red_critical(g, p, budget);
        j["status"] = out.status == SearchStatus::Found       ? "Found"
                      : out.status == SearchStatus::NoneExists ? "NoneExists"
                                                                : "Exhausted";
        j["max_red"] = out.witness ? json(out.witness->red_count()) : json(nullptr);
        j["witness_coloring"] = out.witness ? coloring_lines(*out.witness) : json(nullptr);
        attach_meta(j, o, t0, out.nodes);
        text = j["status"].get<std::string>() + "\n";
        if (out.witness) {
            text += "max red edges: " + std::to_string(out.witness->red_count()) + "\n";
            text += out.witness->serialize();
        }
        rc = out.status == SearchStatus::Found ? 0 : out.status == SearchStatus::NoneExists ? 1 : 2;
    }
    emit(j, o, text);
    return rc;
}

int cmd_verify(int t, int k, const std::string& in, bool with_audit, bool all_optima,
               const CommonOpts& o) {
    Graph g = read_graph(in);
    PairParams p(t, k);
    auto budget = resolve_budget(o);
    auto t0 = Clock::now();
    auto rep = verify_cocritical(g, p, budget, o.jobs);
    json j = rep.to_json();
    j["t"] = t;
    j["k"] = k;
    j["n"] = g.order();
    j["edges"] = g.size();

    std::string text = std::string(to_string(rep.verdict)) + "\n";
    if (!rep.reason.empty()) text += "reason: " + rep.reason + "\n";
    text += render_nonedge_summary(j);

    if (with_audit) {
        auto audit = audit_structure(g, p, budget, all_optima);
        j["audit"] = audit.to_json();
        text += render_audit(j["audit"]);
    }
    attach_meta(j, o, t0, rep.total_nodes);
    emit(j, o, text);
    switch (rep.verdict) {
        case CocriticalVerdict::CoCritical: return 0;
        case CocriticalVerdict::NotCoCritical: return 1;
        case CocriticalVerdict::Unverified: return 2;
    }
    return kExitInternal;
}

int cmd_audit(int t, int k, const std::string& in, bool all_optima, const CommonOpts& o) {
    Graph g = read_graph(in);
    PairParams p(t, k);
    auto t0 = Clock::now();
    auto audit = audit_structure(g, p, resolve_budget(o), all_optima);
    json j = audit.to_json();
    attach_meta(j, o, t0, audit.nodes);
    emit(j, o, render_audit(j));
    if (!audit.max_red_found) return 2;
    return audit.all_ok() ? 0 : 1;
}

int cmd_saturated(int t, const std::string& in, const CommonOpts& o) {
    Graph g = read_graph(in);
    auto t0 = Clock::now();
    bool sat = is_kt_saturated(g, t);
    json j;
    j["schema"] = "cocritical-saturated/1";
    j["t"] = t;
    j["n"] = g.order();
    j["edges"] = g.size();
    j["saturated"] = sat;
    j["dichotomy"] = hajnal_dichotomy(g, t);
    attach_meta(j, o, t0, 0);
    emit(j, o, std::string(sat ? "saturated" : "not saturated") + "\n");
    return sat ? 0 : 1;
}

int cmd_build_j(int a, int b, int c, const CommonOpts& o) {
    auto t0 = Clock::now();
    Graph g = build_J({a, b, c});
    json j;
    j["schema"] = "cocritical-two-stem/1";
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["n"] = g.order();
    j["edges"] = g.size();
    j["graph6"] = emit_graph6(g);
    attach_meta(j, o, t0, 0);
    emit(j, o, j["graph6"].get<std::string>() + "\n");
    return 0;
}

// The descent is an anytime loop with no natural endpoint, so an unbounded
// budget would run forever.  Cap the effort when the user set no limit.
constexpr uint64_t kDefaultSearchNodes = 1'000'000;

int cmd_search(int t, int k, int n, uint64_t seed, const CommonOpts& o) {
    PairParams p(t, k);
    SearchBudget budget = resolve_budget(o);
    if (budget.node_limit == UINT64_MAX && budget.wall_limit == std::chrono::milliseconds::max())
        budget.node_limit = kDefaultSearchNodes;
    auto t0 = Clock::now();
    auto out = local_search_cocritical(p, n, seed, budget);
    json j;
    j["schema"] = "cocritical-search/1";
    j["t"] = t;
    j["k"] = k;
    j["n"] = n;
    j["seed"] = seed;
    j["found"] = out.best.has_value();
    j["certified"] = out.certified;
    j["edges"] = out.best_edges;
    j["improvements"] = out.improvements;
    j["graph6"] = out.best ? json(emit_graph6(*out.best)) : json(nullptr);
    attach_meta(j, o, t0, out.nodes_used);

    std::string text;
    if (!out.best) {
        text = "no starting construction for these parameters\n";
    } else {
        text = "best: " + std::to_string(out.best_edges) + " edges after " +
               std::to_string(out.improvements) + " improvements" +
               (out.certified ? " (certified)" : " (not certified)") + "\n" +
               j["graph6"].get<std::string>() + "\n";
    }
    emit(j, o, text);
    return out.certified ? 0 : 2;
}

int cmd_enumerate(int n, int t, int k, const CommonOpts& o) {
    PairParams p(t, k);
    auto t0 = Clock::now();
    auto cen = enumerate_small_cocritical(n, p, o.jobs);
    json j;
    j["schema"] = "cocritical-census/1";
    j["n"] = n;
    j["t"] = t;
    j["k"] = k;
    j["labeled_total"] = cen.labeled_total;
    j["candidates_checked"] = cen.candidates_checked;
    json classes = json::array();
    for (const auto& g : cen.graphs) classes.push_back({{"graph6", emit_graph6(g)}, {"edges", g.size()}});
    j["classes"] = classes;
    attach_meta(j, o, t0, 0);

    std::string text = std::to_string(cen.graphs.size()) + " isomorphism classes on " +
                       std::to_string(n) + " vertices\n";
    for (const auto& g : cen.graphs)
        text += emit_graph6(g) + "  (" + std::to_string(g.size()) + " edges)\n";
    emit(j, o, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify, and search for co-critical graphs"};
    app.require_subcommand(1);
    CommonOpts common;

    int t = 3, k = 3, n = 13;
    std::string in = "-", out_prefix, mode = "exists";
    uint64_t limit = 100, seed = 1;
    int ja = 1, jb = 0, jc = 0;
    bool with_audit = false, all_optima = false;

    auto* construct = app.add_subcommand("construct", "Build the extremal host and its coloring");
    construct->add_option("--t", t, "Red clique order")->required();
    construct->add_option("--k", k, "Blue star leaf count")->required();
    construct->add_option("--n", n, "Vertex count")->required();
    construct->add_option("--out", out_prefix, "Write <prefix>.g6 / .coloring / .plan.json");
    add_common(construct, common);

    auto* arr = app.add_subcommand("arrows", "Decide whether a host forces the pair");
    arr->add_option("--t", t)->required();
    arr->add_option("--k", k)->required();
    arr->add_option("--in", in, "graph6 file, or - for stdin");
    arr->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_common(arr, common);
    add_budget(arr, common);

    auto* col = app.add_subcommand("colorings", "Work with critical colorings of a host");
    col->add_option("--t", t)->required();
    col->add_option("--k", k)->required();
    col->add_option("--in", in, "graph6 file, or - for stdin");
    col->add_option("--mode", mode)->check(CLI::IsMember({"exists", "count", "enumerate", "max-red"}));
    col->add_option("--limit", limit, "Colorings to keep in enumerate mode");
    add_common(col, common);
    add_budget(col, common);

    auto* ver = app.add_subcommand("verify", "Full co-criticality check of a host");
    ver->add_option("--t", t)->required();
    ver->add_option("--k", k)->required();
    ver->add_option("--in", in, "graph6 file, or - for stdin");
    ver->add_flag("--audit", with_audit, "Also audit the max-red coloring structure");
    ver->add_flag("--all-optima", all_optima, "Audit every optimum, not just the first");
    ver->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_common(ver, common);
    add_budget(ver, common);

    auto* aud = app.add_subcommand("audit", "Structural audit of a max-red critical coloring");
    aud->add_option("--t", t)->required();
    aud->add_option("--k", k)->required();
    aud->add_option("--in", in, "graph6 file, or - for stdin");
    aud->add_flag("--all-optima", all_optima);
    add_common(aud, common);
    add_budget(aud, common);

    auto* sat = app.add_subcommand("saturated", "Clique saturation check");
    sat->add_option("--t", t)->required();
    sat->add_option("--in", in, "graph6 file, or - for stdin");
    add_common(sat, common);

    auto* bj = app.add_subcommand("build-j", "Build a two-stem graph");
    bj->add_option("--a", ja)->required();
    bj->add_option("--b", jb)->required();
    bj->add_option("--c", jc)->required();
    add_common(bj, common);

    auto* sea = app.add_subcommand(
        "search", "Edge-reduction descent from the construction (default budget: 1000000 nodes)");
    sea->add_option("--t", t)->required();
    sea->add_option("--k", k)->required();
    sea->add_option("--n", n)->required();
    sea->add_option("--seed", seed);
    add_common(sea, common);
    add_budget(sea, common);

    auto* cen = app.add_subcommand("enumerate", "Exhaustive census on small vertex counts");
    cen->add_option("--n", n)->required();
    cen->add_option("--t", t)->required();
    cen->add_option("--k", k)->required();
    cen->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
    add_common(cen, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(t, k, n, out_prefix, common);
        if (*arr) return cmd_arrows(t, k, in, common);
        if (*col) return cmd_colorings(t, k, in, mode, limit, common);
        if (*ver) return cmd_verify(t, k, in, with_audit, all_optima, common);
        if (*aud) return cmd_audit(t, k, in, all_optima, common);
        if (*sat) return cmd_saturated(t, in, common);
        if (*bj) return cmd_build_j(ja, jb, jc, common);
        if (*sea) return cmd_search(t, k, n, seed, common);
        if (*cen) return cmd_enumerate(n, t, k, common);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
