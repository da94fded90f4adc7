#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include "hfree/oracles.hpp"
#include "hfree/patterns.hpp"

using namespace hfree;

namespace {

Graph pat(const PatternId& id) { return build_pattern(id); }

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// Calls f on every map V -> {0..q-1}; stops when f returns true.
bool any_map(int n, int q, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        if (f(c)) return true;
        int i = 0;
        while (i < n && ++c[i] == q) c[i++] = 0;
        if (i == n) return false;
    }
}

bool brute_hamilton(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (p[0] != 0) break;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.adjacent(p[i], p[(i + 1) % n]);
        if (ok) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
}

// All simple paths from s to t avoiding `blocked`.
void simple_paths(const Graph& g, int s, int t, std::vector<char>& blocked, std::vector<int>& cur,
                  const std::function<bool(const std::vector<int>&)>& f, bool& stop) {
    if (stop) return;
    cur.push_back(s);
    if (s == t) {
        stop = f(cur);
    } else {
        blocked[s] = 1;
        for (int w : g.nbrs(s))
            if (!blocked[w]) simple_paths(g, w, t, blocked, cur, f, stop);
        blocked[s] = 0;
    }
    cur.pop_back();
}

bool brute_two_paths(const Graph& g, const TerminalSpec& t, bool induced) {
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    blocked[t.pairs[1].first] = blocked[t.pairs[1].second] = 1;
    std::vector<int> cur;
    bool stop = false;
    bool found = false;
    simple_paths(g, t.pairs[0].first, t.pairs[0].second, blocked, cur, [&](const std::vector<int>& p1) {
        std::vector<char> b2(static_cast<std::size_t>(g.n()), 0);
        for (int v : p1) b2[v] = 1;
        std::vector<int> c2;
        bool stop2 = false;
        simple_paths(g, t.pairs[1].first, t.pairs[1].second, b2, c2, [&](const std::vector<int>& p2) {
            if (verify_path_system(g, t, {p1, p2}, induced)) found = true;
            return found;
        }, stop2);
        return found;
    }, stop);
    return found;
}

bool brute_hole(const Graph& g, int x, int y) {
    int n = g.n();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (!((mask >> x) & 1U) || !((mask >> y) & 1U) || std::popcount(mask) < 4) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U) s.push_back(v);
        if (verify_hole(g, x, y, s)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("C5 colouring oracle examples") {
    auto c5 = oracle_c5_colouring(pat(PatternId::cycle(5)));
    REQUIRE(c5.has_value());
    CHECK(verify_c5_hom(pat(PatternId::cycle(5)), *c5));
    CHECK(*c5 == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_FALSE(oracle_c5_colouring(pat(PatternId::complete(3))).has_value());
    CHECK(oracle_c5_colouring(pat(PatternId::cycle(7))).has_value());
}

TEST_CASE("C5 criticality catalogue") {
    CHECK(oracle_c5_critical(pat(PatternId::complete(3))));
    CHECK(oracle_c5_critical(pat(PatternId::of(PatternKind::E1))));
    CHECK(oracle_c5_critical(pat(PatternId::of(PatternKind::E2))));
    CHECK(oracle_c5_critical(pat(PatternId::of(PatternKind::E3))));
    CHECK(oracle_c5_critical(pat(PatternId::flower(3))));
    CHECK_FALSE(oracle_c5_critical(pat(PatternId::flower(4))));
    CHECK_FALSE(oracle_c5_critical(pat(PatternId::cycle(5))));
}

TEST_CASE("C5 and k-colouring oracles agree with enumeration") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + t % 5;
        Graph g = random_graph(rng, n, 0.45);
        bool hom = any_map(n, 5, [&](const std::vector<int>& c) { return verify_c5_hom(g, c); });
        CHECK(oracle_c5_colouring(g).has_value() == hom);
        for (int k = 1; k <= 4; ++k) {
            bool col = any_map(n, k, [&](const std::vector<int>& c) {
                for (auto [u, v] : g.edges())
                    if (c[u] == c[v]) return false;
                return true;
            });
            auto o = oracle_k_colouring(g, k);
            CHECK(o.has_value() == col);
            if (o) CHECK(verify_proper(g, *o, k));
        }
    }
}

TEST_CASE("Hamilton oracle") {
    auto c5 = oracle_hamilton(pat(PatternId::cycle(5)));
    REQUIRE(c5.has_value());
    CHECK(verify_hamilton(pat(PatternId::cycle(5)), *c5));
    CHECK_FALSE(oracle_hamilton(pat(PatternId::of(PatternKind::Claw))).has_value());
    CHECK(oracle_hamilton(pat(PatternId::complete(4))).has_value());
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 3 + t % 6, 0.5);
        auto h = oracle_hamilton(g);
        CHECK(h.has_value() == brute_hamilton(g));
        if (h) CHECK(verify_hamilton(g, *h));
    }
}

TEST_CASE("star 3-colouring oracle") {
    auto p4 = oracle_star3col(path(4));
    REQUIRE(p4.has_value());
    CHECK(verify_star_colouring(path(4), *p4, 3));
    CHECK_FALSE(oracle_star3col(pat(PatternId::cycle(5))).has_value());
    CHECK(oracle_star3col(pat(PatternId::cycle(4))).has_value());
    CHECK_FALSE(oracle_star3col(pat(PatternId::of(PatternKind::A))).has_value());
    CHECK(oracle_star3col(pat(PatternId::of(PatternKind::Bowtie))).has_value());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + t % 5;
        Graph g = random_graph(rng, n, 0.35);
        bool any = any_map(n, 3, [&](const std::vector<int>& c) { return verify_star_colouring(g, c, 3); });
        CHECK(oracle_star3col(g).has_value() == any);
    }
}

TEST_CASE("disjoint paths oracle") {
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    TerminalSpec t{{{0, 2}, {3, 5}}};
    auto p = oracle_disjoint_paths(two, t, true);
    REQUIRE(p.has_value());
    CHECK(verify_path_system(two, t, *p, true));

    Graph k2 = Graph::from_edges(2, {{0, 1}});
    auto e = oracle_disjoint_paths(k2, TerminalSpec{{{0, 1}}}, true);
    REQUIRE(e.has_value());
    CHECK((*e)[0] == std::vector<int>{0, 1});

    // s1 z1 x1 z3 t1 / s2 z2 x2 z4 t2 with z1z2, x1x2, x1z4
    Graph fig = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {1, 6}, {2, 7}, {2, 8}});
    TerminalSpec ft{{{0, 4}, {5, 9}}};
    auto plain = oracle_disjoint_paths(fig, ft, false);
    REQUIRE(plain.has_value());
    CHECK(verify_path_system(fig, ft, *plain, false));
    CHECK_FALSE(verify_path_system(fig, ft, *plain, true));
    CHECK_FALSE(oracle_disjoint_paths(fig, ft, true).has_value());
}

TEST_CASE("disjoint paths oracle agrees with enumeration") {
    std::mt19937_64 rng(4);
    int yes = 0;
    for (int t = 0; t < 80; ++t) {
        int n = 5 + t % 4;
        Graph g = random_graph(rng, n, 0.4);
        TerminalSpec ts{{{0, 1}, {2, 3}}};
        for (bool induced : {false, true}) {
            auto o = oracle_disjoint_paths(g, ts, induced);
            CHECK(o.has_value() == brute_two_paths(g, ts, induced));
            if (o) {
                ++yes;
                CHECK(verify_path_system(g, ts, *o, induced));
            }
        }
    }
    CHECK(yes > 0);
}

TEST_CASE("hole oracle") {
    Graph c6 = pat(PatternId::cycle(6));
    auto h = oracle_hole_through(c6, 0, 3);
    REQUIRE(h.has_value());
    CHECK(h->size() == 6);
    CHECK_FALSE(oracle_hole_through(path(6), 0, 5).has_value());
    CHECK_FALSE(oracle_hole_through(pat(PatternId::complete(4)), 0, 1).has_value());
    std::mt19937_64 rng(6);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 5 + t % 4, 0.35);
        auto o = oracle_hole_through(g, 0, 1);
        CHECK(o.has_value() == brute_hole(g, 0, 1));
        if (o) CHECK(verify_hole(g, 0, 1, *o));
    }
}

TEST_CASE("k-colouring examples") {
    CHECK(oracle_k_colouring(pat(PatternId::complete(3)), 3).has_value());
    CHECK_FALSE(oracle_k_colouring(pat(PatternId::complete(4)), 3).has_value());
    CHECK_FALSE(oracle_k_colouring(pat(PatternId::complete(6)), 5).has_value());
}

TEST_CASE("oracle bounds") {
    Graph big = pat(PatternId::cycle(30));
    CHECK_THROWS_AS(oracle_c5_colouring(big), BoundExceeded);
    CHECK(oracle_c5_colouring(big, OracleConfig::uniform(40)).has_value());
    CHECK_THROWS_AS(OracleConfig::uniform(0), Error);
    setenv("SUITE_ORACLE_BOUND", "7", 1);
    auto cfg = OracleConfig::standard();
    CHECK(cfg.c5 == 7);
    CHECK(cfg.hamilton == 7);
    setenv("SUITE_ORACLE_BOUND", "x", 1);
    CHECK_THROWS_AS(OracleConfig::standard(), Error);
    unsetenv("SUITE_ORACLE_BOUND");
    CHECK(OracleConfig::standard().c5 == 24);
}

TEST_CASE("certificate verifiers") {
    Graph c10 = pat(PatternId::cycle(10));
    std::vector<int> mod5(10);
    for (int i = 0; i < 10; ++i) mod5[i] = i % 5;
    CHECK(verify_c5_hom(c10, mod5));
    CHECK_FALSE(verify_c5_hom(pat(PatternId::complete(3)), {0, 1, 2}));
    CHECK(verify_c5_hom(pat(PatternId::cycle(5)), {0, 1, 2, 3, 4}));

    CHECK_FALSE(verify_star_colouring(path(4), {1, 2, 1, 2}, 3));
    CHECK(verify_star_colouring(path(4), {1, 2, 3, 1}, 3));
    CHECK_FALSE(verify_star_colouring(pat(PatternId::cycle(5)), {1, 2, 1, 2, 3}, 3));
    CHECK_THROWS_AS(verify_star_colouring(path(4), {1, 2, 3}, 3), Error);
    CHECK_THROWS_AS(verify_star_colouring(path(4), {1, -1, 3, 1}, 3), Error);

    Graph c4 = pat(PatternId::cycle(4));
    CHECK(verify_hamilton(c4, {0, 1, 2, 3}));
    CHECK_FALSE(verify_hamilton(c4, {0, 2, 1, 3}));
    CHECK_FALSE(verify_hamilton(Graph(1), {0}));

    CHECK(verify_hole(pat(PatternId::cycle(6)), 0, 3, {0, 1, 2, 3, 4, 5}));
    CHECK_FALSE(verify_hole(pat(PatternId::complete(4)), 0, 1, {0, 1, 2}));
    Graph chorded = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_FALSE(verify_hole(chorded, 0, 1, {0, 1, 2, 3}));

    CHECK(verify_distance2(path(3), {0, 1, 2}, 3));
    CHECK_FALSE(verify_distance2(path(3), {0, 1, 0}, 3));
}
