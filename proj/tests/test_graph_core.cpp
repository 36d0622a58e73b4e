#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cocrit/graph.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/isomorphism.hpp"

using namespace cocrit;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Exhaustive clique decision: scan all vertex subsets of size t.
bool clique_by_subsets(const Graph& g, int t, const Bitset* within = nullptr) {
    int n = g.order();
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (!within || within->test(v)) verts.push_back(v);
    if (t == 0) return true;
    if ((int)verts.size() < t) return false;
    std::vector<int> pick(t);
    // odometer over combinations
    for (int i = 0; i < t; ++i) pick[i] = i;
    while (true) {
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            for (int j = i + 1; j < t && ok; ++j)
                if (!g.has_edge(verts[pick[i]], verts[pick[j]])) ok = false;
        if (ok) return true;
        int i = t - 1;
        while (i >= 0 && pick[i] == (int)verts.size() - t + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
}

Graph delete_vertex(const Graph& g, int x) {
    Graph h(g.order() - 1);
    for (auto [u, v] : g.edges()) {
        if (u == x || v == x) continue;
        int uu = u > x ? u - 1 : u;
        int vv = v > x ? v - 1 : v;
        h.add_edge(uu, vv);
    }
    return h;
}

bool two_connected_by_deletion(const Graph& g) {
    if (g.order() < 3) return false;
    if (!g.connected()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!delete_vertex(g, v).connected()) return false;
    return true;
}

// All-permutations isomorphism scan, usable through n = 7.
bool iso_by_permutations(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    int n = g.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

uint64_t aut_by_permutations(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("bitset basics across word boundaries") {
    Bitset b(130);
    CHECK(b.universe() == 130);
    CHECK(b.none());
    CHECK(b.count() == 0);
    CHECK(b.find_first() == -1);

    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK(!b.test(65));
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(0) == 63);
    CHECK(b.find_next(63) == 64);
    CHECK(b.find_next(64) == 129);
    CHECK(b.find_next(129) == -1);
    CHECK(b.to_vector() == std::vector<int>{0, 63, 64, 129});

    b.reset(64);
    CHECK(!b.test(64));
    CHECK(b.count() == 3);

    b.set_all();
    CHECK(b.count() == 130);
    b.clear();
    CHECK(b.none());
}

TEST_CASE("bitset set operations") {
    Bitset a(100), b(100);
    a.set(1);
    a.set(70);
    a.set(99);
    b.set(70);
    b.set(2);

    CHECK(a.intersects(b));
    Bitset meet = a & b;
    CHECK(meet.to_vector() == std::vector<int>{70});
    Bitset join = a | b;
    CHECK(join.count() == 4);

    Bitset diff = a;
    diff.subtract(b);
    CHECK(diff.to_vector() == std::vector<int>{1, 99});

    Bitset c = a;
    CHECK(c == a);
    c ^= b;
    CHECK(c.to_vector() == std::vector<int>{1, 2, 99});
    CHECK(c != a);

    Bitset empty(100);
    CHECK(!a.intersects(empty));

    int visited = 0;
    a.for_each([&](int i) {
        CHECK(a.test(i));
        ++visited;
    });
    CHECK(visited == a.count());
}

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.size() == 0);
    g.add_edge(0, 1);
    g.add_edge(3, 2);  // order of endpoints must not matter
    CHECK(g.size() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 3));
    CHECK(!g.has_edge(0, 2));

    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
    CHECK_THROWS_AS(g.remove_edge(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1), std::invalid_argument);

    g.remove_edge(0, 1);
    CHECK(g.size() == 1);
    CHECK(!g.has_edge(0, 1));

    Graph h = g.plus_edge(0, 4);
    CHECK(h.has_edge(0, 4));
    CHECK(!g.has_edge(0, 4));
    Graph h2 = h.minus_edge(0, 4);
    CHECK(h2 == g);
}

TEST_CASE("edges list is lexicographic and matches nonedges partition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        auto e = g.edges();
        auto ne = g.nonedges();
        CHECK((long long)e.size() == g.size());
        CHECK(e.size() + ne.size() == 36);
        CHECK(std::is_sorted(e.begin(), e.end()));
        CHECK(std::is_sorted(ne.begin(), ne.end()));
        for (auto [u, v] : e) CHECK(u < v);
        long long degsum = 0;
        for (int v = 0; v < 9; ++v) degsum += g.degree(v);
        CHECK(degsum == 2 * g.size());
    }
}

TEST_CASE("complement is an involution and flips adjacency") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(8, 0.5, rng);
        Graph c = g.complement();
        CHECK(c.size() == 28 - g.size());
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) CHECK(c.has_edge(u, v) == !g.has_edge(u, v));
        CHECK(c.complement() == g);
    }
    CHECK(complete(6).complement().size() == 0);
    CHECK(Graph(0).complement().order() == 0);
}

TEST_CASE("degree extremes and completeness") {
    Graph g = path(4);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(!g.is_complete());
    CHECK(complete(5).is_complete());
    CHECK(complete(1).is_complete());
    CHECK(Graph(3).min_degree() == 0);
}

TEST_CASE("connectivity") {
    CHECK(complete(4).connected());
    CHECK(path(6).connected());
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(!two.connected());
    CHECK(Graph(1).connected());
    CHECK(Graph(0).connected());
    Graph lone(2);
    CHECK(!lone.connected());
}

TEST_CASE("two-connectivity agrees with vertex-deletion oracle") {
    CHECK(cycle(5).two_connected());
    CHECK(complete(4).two_connected());
    CHECK(!path(5).two_connected());
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(!g.two_connected());  // below the order threshold

    Graph barbell(7);  // two triangles sharing vertex 3
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}})
        barbell.add_edge(u, v);
    CHECK(!barbell.two_connected());

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g2 = random_graph(4 + int(rng() % 5), 0.45, rng);
        CHECK(g2.two_connected() == two_connected_by_deletion(g2));
    }
}

TEST_CASE("clique search agrees with subset enumeration") {
    CHECK(complete(5).has_clique(5));
    CHECK(!complete(5).has_clique(6));
    CHECK(cycle(5).has_clique(2));
    CHECK(!cycle(5).has_clique(3));
    CHECK(Graph(4).has_clique(1));
    CHECK(!Graph(0).has_clique(1));
    CHECK_THROWS_AS(Graph(3).find_clique(0), std::invalid_argument);

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + int(rng() % 9);  // up to 12
        Graph g = random_graph(n, 0.55, rng);
        int t = 2 + int(rng() % 4);  // 2..5
        bool expect = clique_by_subsets(g, t);
        auto got = g.find_clique(t);
        CHECK(got.has_value() == expect);
        if (got) {
            CHECK((int)got->size() == t);
            std::set<int> distinct(got->begin(), got->end());
            CHECK((int)distinct.size() == t);
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) CHECK(g.has_edge((*got)[i], (*got)[j]));
        }
        // a clique of t+1 implies one of t
        if (g.has_clique(t + 1)) CHECK(expect);
    }
}

TEST_CASE("clique search restricted to a vertex mask") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + int(rng() % 6);
        Graph g = random_graph(n, 0.6, rng);
        Bitset mask(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) mask.set(v);
        int t = 2 + int(rng() % 3);
        bool expect = clique_by_subsets(g, t, &mask);
        auto got = g.find_clique(t, &mask);
        CHECK(got.has_value() == expect);
        if (got)
            for (int v : *got) CHECK(mask.test(v));
    }
}

TEST_CASE("triangles through an edge") {
    Graph g = complete(5);
    CHECK(g.triangles_through_edge(0, 1) == 3);
    Graph c = cycle(6);
    CHECK(c.triangles_through_edge(0, 1) == 0);
    CHECK_THROWS_AS(c.triangles_through_edge(0, 2), std::invalid_argument);
}

TEST_CASE("graph6 encodes known graphs") {
    CHECK(emit_graph6(complete(3)) == "Bw");
    CHECK(emit_graph6(complete(4)) == "C~");
    CHECK(emit_graph6(complete(6)) == "E~~w");
    CHECK(emit_graph6(complete(7)) == "F~~~w");
    CHECK(emit_graph6(cycle(5)) == "Dhc");
    CHECK(emit_graph6(cycle(6)) == "EhEG");
    CHECK(emit_graph6(path(4)) == "Ch");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(emit_graph6(Graph(1)) == "@");

    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(emit_graph6(k33) == "EFz_");

    Graph paw(4);  // triangle with a pendant
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}}) paw.add_edge(u, v);
    CHECK(emit_graph6(paw) == "Cy");

    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    CHECK(emit_graph6(star) == "Cs");
}

TEST_CASE("graph6 decodes known graphs") {
    Graph pet = parse_graph6("IheA@GUAo");
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(pet.min_degree() == 3);
    CHECK(pet.max_degree() == 3);
    CHECK(!pet.has_clique(3));

    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 long form at the 62/63 vertex boundary") {
    std::string e62 = emit_graph6(Graph(62));
    CHECK(e62.size() == 1 + (62 * 61 / 2 + 5) / 6);
    CHECK(e62[0] == '}');
    std::string e63 = emit_graph6(Graph(63));
    CHECK(e63.size() == 4 + (63 * 62 / 2 + 5) / 6);
    CHECK(e63.substr(0, 4) == "~??~");
    CHECK(parse_graph6(e62).order() == 62);
    CHECK(parse_graph6(e63).order() == 63);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 500; ++trial) {
        int n = int(rng() % 30);
        if (trial % 17 == 0) n = 60 + int(rng() % 10);  // cross the header boundary
        Graph g = random_graph(n, 0.3, rng);
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B\x19"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);      // body too short
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);    // body too long
    CHECK_THROWS_AS(parse_graph6("~~"), std::invalid_argument);     // 8-byte header
    CHECK_THROWS_AS(parse_graph6("~?"), std::invalid_argument);     // truncated header
    CHECK(parse_graph6("A_") == complete(2));                       // clean padding
    CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);     // nonzero padding
    // order above the library cap (graph6 allows it, we do not)
    std::string big = "~";
    big += char(63 + 1);  // 4096+1 = 0b1'000000'000001 spread over 3 chars
    big += char(63 + 0);
    big += char(63 + 1);
    CHECK_THROWS_AS(parse_graph6(big), std::invalid_argument);
}

TEST_CASE("isomorphism agrees with permutation scan on small graphs") {
    std::mt19937_64 rng(17);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + int(rng() % 5);  // up to 7
        Graph g = random_graph(n, 0.5, rng);
        Graph h = random_graph(n, 0.5, rng);
        bool expect = iso_by_permutations(g, h);
        CHECK(are_isomorphic(g, h) == expect);
        expect ? ++positives : ++negatives;
    }
    CHECK(negatives > 0);

    // relabelings are always isomorphic, and the returned map checks out
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + int(rng() % 6);
        Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        auto f = find_isomorphism(g, h);
        REQUIRE(f.has_value());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(g.has_edge(u, v) == h.has_edge((*f)[u], (*f)[v]));
    }
}

TEST_CASE("isomorphism distinguishes same degree sequence") {
    // C6 vs two triangles: both 2-regular on 6 vertices
    Graph two_tri(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_tri.add_edge(u, v);
    CHECK(!are_isomorphic(cycle(6), two_tri));
    CHECK(are_isomorphic(cycle(6), cycle(6)));
}

TEST_CASE("isomorphism respects the vertex cap") {
    CHECK_THROWS_AS(are_isomorphic(Graph(65), Graph(65)), std::invalid_argument);
    CHECK(are_isomorphic(Graph(64), Graph(64)));
}

TEST_CASE("automorphism group orders of named graphs") {
    CHECK(automorphism_group(complete(3)).order == 6);
    CHECK(automorphism_group(cycle(5)).order == 10);
    CHECK(automorphism_group(parse_graph6("IheA@GUAo")).order == 120);
    CHECK(automorphism_group(Graph(1)).order == 1);
    CHECK(automorphism_group(Graph(0)).order == 1);
    for (int n = 2; n <= 7; ++n) {
        uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(automorphism_group(complete(n)).order == fact);
        CHECK(automorphism_group(Graph(n)).order == fact);
        if (n >= 3) CHECK(automorphism_group(cycle(n)).order == 2 * uint64_t(n));
    }
}

TEST_CASE("automorphism group agrees with permutation count and order divides n!") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        auto grp = automorphism_group(g);
        REQUIRE(!grp.order_overflow);
        CHECK(grp.order == aut_by_permutations(g));
        uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(fact % grp.order == 0);
        for (const auto& gen : grp.generators) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    CHECK(g.has_edge(u, v) == g.has_edge(gen[u], gen[v]));
        }
    }
}
