#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cocrit/coloring.hpp"
#include "cocrit/isomorphism.hpp"
#include "cocrit/solver.hpp"

using namespace cocrit;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, int max_edges, std::mt19937_64& rng) {
    Graph g(n);
    long long all = (long long)n * (n - 1) / 2;
    while (g.size() < std::min<long long>(max_edges, all)) {
        int u = int(rng() % unsigned(n)), v = int(rng() % unsigned(n));
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

EdgeColoring color_all(const Graph& g, Color c) {
    return EdgeColoring(g, std::vector<Color>(g.size(), c));
}

}  // namespace

TEST_CASE("pair parameters reject degenerate targets") {
    CHECK_NOTHROW(PairParams(3, 3));
    CHECK_NOTHROW(PairParams(5, 7));
    CHECK_THROWS_AS(PairParams(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(PairParams(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(PairParams(0, 0), std::invalid_argument);
}

TEST_CASE("search budgets must be positive") {
    CHECK_THROWS_AS(SearchBudget::nodes(0), std::invalid_argument);
    CHECK_THROWS_AS(SearchBudget::wall_seconds(0), std::invalid_argument);
    CHECK_THROWS_AS(SearchBudget::wall_seconds(-3), std::invalid_argument);
    CHECK(SearchBudget::nodes(5).node_limit == 5);
    CHECK(SearchBudget().node_limit == UINT64_MAX);
}

TEST_CASE("edge coloring construction and accessors") {
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    EdgeColoring c(p3, {Color::Red, Color::Blue});
    CHECK(c.order() == 3);
    CHECK(c.at(0, 1) == Color::Red);
    CHECK(c.at(1, 0) == Color::Red);
    CHECK(c.at(2, 1) == Color::Blue);
    CHECK_THROWS_AS(c.at(0, 2), std::invalid_argument);
    CHECK(c.red_count() == 1);
    CHECK(c.blue_count() == 1);
    CHECK(c.blue_degrees() == std::vector<int>{0, 1, 1});
    CHECK(c.serialize() == "0 1 R\n1 2 B\n");
    CHECK(c.matches(p3));
    CHECK(!c.matches(complete(3)));

    CHECK_THROWS_AS(EdgeColoring(p3, {Color::Red}), std::invalid_argument);

    Graph red = c.red_subgraph();
    CHECK(red.order() == 3);  // spanning even when some vertex is isolated
    CHECK(red.size() == 1);
    CHECK(red.has_edge(0, 1));
    Graph blue = c.blue_subgraph();
    CHECK(blue.size() == 1);
    CHECK(blue.has_edge(1, 2));

    EdgeColoring d(p3, {Color::Red, Color::Blue});
    CHECK(c == d);
    EdgeColoring e(p3, {Color::Blue, Color::Blue});
    CHECK(c != e);
}

TEST_CASE("criticality check on hand-built colorings") {
    PairParams p(3, 3);

    // red K_{3,3}, blue two disjoint triangles: blue degrees all 2, red bipartite
    Graph k6 = complete(6);
    std::vector<Color> asg;
    for (auto [u, v] : k6.edges()) {
        bool same_side = (u < 3) == (v < 3);
        asg.push_back(same_side ? Color::Blue : Color::Red);
    }
    EdgeColoring good(k6, asg);
    CHECK(good.red_count() == 9);
    CHECK(is_critical(k6, good, p));

    // all red on K_3 has a red triangle
    CHECK(!is_critical(complete(3), color_all(complete(3), Color::Red), p));
    // all blue on K_{1,3} pushes the center to blue degree 3
    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    CHECK(!is_critical(star, color_all(star, Color::Blue), p));
    CHECK(is_critical(star, color_all(star, Color::Red), p));

    // host mismatch is rejected
    CHECK_THROWS_AS(is_critical(complete(3), good, p), std::invalid_argument);

    // edgeless graph is vacuously fine
    Graph e5(5);
    CHECK(is_critical(e5, EdgeColoring(e5, {}), p));
}

TEST_CASE("find_critical on landmark hosts") {
    PairParams p(3, 3);

    auto empty = find_critical(Graph(4), p);
    CHECK(empty.status == SearchStatus::Found);
    REQUIRE(empty.witness.has_value());
    CHECK(is_critical(Graph(4), *empty.witness, p));

    auto k6 = find_critical(complete(6), p);
    CHECK(k6.status == SearchStatus::Found);
    REQUIRE(k6.witness.has_value());
    CHECK(is_critical(complete(6), *k6.witness, p));

    auto k7 = find_critical(complete(7), p);
    CHECK(k7.status == SearchStatus::NoneExists);
    CHECK(!k7.witness.has_value());

    // K_7 minus an edge still has 20 edges; a critical coloring could carry at
    // most 12 red (triangle-free on 7 vertices) plus 7 blue (degrees <= 2)
    auto k7e = find_critical(complete(7).minus_edge(0, 1), p);
    CHECK(k7e.status == SearchStatus::NoneExists);

    // dropping a second, disjoint edge leaves 18 edges and room appears
    auto k7ee = find_critical(complete(7).minus_edge(0, 1).minus_edge(2, 3), p);
    CHECK(k7ee.status == SearchStatus::Found);
    CHECK(is_critical(complete(7).minus_edge(0, 1).minus_edge(2, 3), *k7ee.witness, p));
}

TEST_CASE("find_critical is deterministic") {
    PairParams p(3, 4);
    Graph g = complete(7);
    auto a = find_critical(g, p);
    auto b = find_critical(g, p);
    REQUIRE(a.status == SearchStatus::Found);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(a.witness->serialize() == b.witness->serialize());
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("budget exhaustion reports Exhausted, never a bogus verdict") {
    PairParams p(3, 3);
    auto out = find_critical(complete(7), p, SearchBudget::nodes(1));
    CHECK(out.status == SearchStatus::Exhausted);
    CHECK(!out.witness.has_value());

    auto en = enumerate_critical(complete(6), p, 5, SearchBudget::nodes(1));
    CHECK(!en.complete);

    auto mx = max_red_critical(complete(7), p, SearchBudget::nodes(1));
    CHECK(mx.status == SearchStatus::Exhausted);
}

TEST_CASE("enumeration counts all labeled critical colorings") {
    PairParams p(3, 3);

    Graph one(2);
    one.add_edge(0, 1);
    auto en = enumerate_critical(one, p, 10);
    CHECK(en.total == 2);  // a single edge may take either color
    CHECK(en.complete);
    CHECK(en.colorings.size() == 2);

    // limit caps storage, not the count
    auto lim = enumerate_critical(complete(5), p, 3);
    CHECK(lim.complete);
    CHECK(lim.colorings.size() == 3);
    CHECK(lim.total > 3);
    auto all = enumerate_critical(complete(5), p, 1'000'000);
    CHECK(all.total == lim.total);
    CHECK(all.colorings.size() == all.total);
    for (const auto& c : all.colorings) CHECK(is_critical(complete(5), c, p));

    // stored colorings are pairwise distinct
    for (size_t i = 0; i < all.colorings.size(); ++i)
        for (size_t j = i + 1; j < all.colorings.size(); ++j)
            CHECK(!(all.colorings[i] == all.colorings[j]));

    auto none = enumerate_critical(complete(7), p, 10);
    CHECK(none.total == 0);
    CHECK(none.complete);
}

TEST_CASE("enumeration agrees with the exhaustive scan") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 4);
        Graph g = random_graph(n, 12, rng);
        for (PairParams p : {PairParams(3, 3), PairParams(3, 4), PairParams(4, 3)}) {
            auto en = enumerate_critical(g, p, 0);
            CHECK(en.complete);
            CHECK(en.total == brute_force_critical(g, p));
        }
    }
}

TEST_CASE("enumeration total is invariant under relabeling") {
    std::mt19937_64 rng(22);
    PairParams p(3, 3);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 5 + int(rng() % 3);
        Graph g = random_graph(n, 11, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(enumerate_critical(g, p, 0).total == enumerate_critical(h, p, 0).total);
    }
}

TEST_CASE("max_red finds the exact optimum") {
    PairParams p(3, 3);

    Graph one(2);
    one.add_edge(0, 1);
    auto mx1 = max_red_critical(one, p);
    CHECK(mx1.status == SearchStatus::Found);
    CHECK(mx1.witness->red_count() == 1);

    auto mx6 = max_red_critical(complete(6), p);
    CHECK(mx6.status == SearchStatus::Found);
    CHECK(mx6.witness->red_count() == 9);
    CHECK(is_critical(complete(6), *mx6.witness, p));
    // the optimal red side of K_6 is the bipartite K_{3,3}
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(are_isomorphic(mx6.witness->red_subgraph(), k33));

    auto mx7 = max_red_critical(complete(7), p);
    CHECK(mx7.status == SearchStatus::NoneExists);
}

TEST_CASE("max_red agrees with a scan over all critical colorings") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + int(rng() % 4);
        Graph g = random_graph(n, 11, rng);
        PairParams p(3, 3);
        auto en = enumerate_critical(g, p, 1 << 22);
        auto mx = max_red_critical(g, p);
        if (en.total == 0) {
            CHECK(mx.status == SearchStatus::NoneExists);
            continue;
        }
        REQUIRE(en.complete);
        int best = -1;
        for (const auto& c : en.colorings) best = std::max(best, c.red_count());
        REQUIRE(mx.status == SearchStatus::Found);
        CHECK(mx.witness->red_count() == best);
    }
}

TEST_CASE("flipping any blue edge of a max-red optimum breaks criticality") {
    // otherwise the flipped coloring would beat the optimum
    std::mt19937_64 rng(24);
    PairParams p(3, 3);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(6, 12, rng);
        auto mx = max_red_critical(g, p);
        if (mx.status != SearchStatus::Found) continue;
        const auto& edges = mx.witness->edges();
        for (size_t i = 0; i < edges.size(); ++i) {
            if (mx.witness->at_index(i) != Color::Blue) continue;
            std::vector<Color> flipped;
            for (size_t j = 0; j < edges.size(); ++j) flipped.push_back(mx.witness->at_index(j));
            flipped[i] = Color::Red;
            CHECK(!is_critical(g, EdgeColoring(g, flipped), p));
        }
    }
}

TEST_CASE("optimal-red enumeration lists exactly the optima") {
    PairParams p(3, 3);
    Graph k6 = complete(6);
    auto opt = enumerate_optimal_red(k6, p, 1 << 22);
    CHECK(opt.complete);
    CHECK(opt.total > 0);
    for (const auto& c : opt.colorings) {
        CHECK(c.red_count() == 9);
        CHECK(is_critical(k6, c, p));
    }
    // cross-check count against the full enumeration
    auto full = enumerate_critical(k6, p, 1 << 22);
    uint64_t optima = 0;
    for (const auto& c : full.colorings)
        if (c.red_count() == 9) ++optima;
    CHECK(opt.total == optima);

    auto none = enumerate_optimal_red(complete(7), p, 10);
    CHECK(none.total == 0);
}

TEST_CASE("brute force rejects oversized hosts") {
    CHECK_THROWS_AS(brute_force_critical(complete(8), PairParams(3, 3)), std::invalid_argument);
    CHECK(brute_force_critical(complete(3), PairParams(3, 3)) == 7);
}
