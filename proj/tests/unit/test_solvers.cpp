#include <doctest.h>

#include <random>

#include "hfree/oracles.hpp"
#include "hfree/patterns.hpp"
#include "hfree/solvers.hpp"

using namespace hfree;

namespace {

Graph pat(const PatternId& id) { return build_pattern(id); }

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

// s1=0 z1=1 x1=2 z3=3 t1=4 s2=5 z2=6 x2=7 z4=8 t2=9
Graph conflict_graph() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {1, 6}, {2, 7}, {2, 8}});
}

}  // namespace

TEST_CASE("C5 solver examples") {
    auto k3 = solve_c5col_h3free(pat(PatternId::complete(3)), Promise::Verify);
    CHECK_FALSE(k3.yes);
    REQUIRE(k3.witness.has_value());
    CHECK(k3.witness->id == PatternId::complete(3));

    auto f3 = solve_c5col_h3free(pat(PatternId::flower(3)), Promise::Verify);
    CHECK_FALSE(f3.yes);
    REQUIRE(f3.witness.has_value());
    CHECK(verify_embedding(pat(PatternId::flower(3)), pat(f3.witness->id), f3.witness->emb));

    auto e2 = solve_c5col_h3free(pat(PatternId::of(PatternKind::E2)), Promise::Verify);
    CHECK_FALSE(e2.yes);

    auto c7 = solve_c5col_h3free(pat(PatternId::cycle(7)), Promise::Verify);
    CHECK(c7.yes);

    CHECK_THROWS_AS(solve_c5col_h3free(pat(PatternId::h(3)), Promise::Verify), PromiseViolation);
}

TEST_CASE("Hamilton solver examples") {
    CHECK(solve_hamilton_h1free(pat(PatternId::cycle(6)), Promise::Verify));
    CHECK(solve_hamilton_h1free(pat(PatternId::complete(4)), Promise::Verify));
    CHECK_FALSE(solve_hamilton_h1free(pat(PatternId::of(PatternKind::Claw)), Promise::Verify));
    CHECK_FALSE(solve_hamilton_h1free(path(4), Promise::Verify));
    CHECK_THROWS_AS(solve_hamilton_h1free(pat(PatternId::h(1)), Promise::Verify), PromiseViolation);
}

TEST_CASE("kIDP-H1 examples") {
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(solve_kidp_h1free(two, TerminalSpec{{{0, 2}, {3, 5}}}, Promise::Verify));
    Graph joined = with_edge(two, 1, 3);
    CHECK_FALSE(solve_kidp_h1free(joined, TerminalSpec{{{0, 2}, {3, 5}}}, Promise::Verify));
    CHECK(solve_kidp_h1free(path(2), TerminalSpec{{{0, 1}}}, Promise::Verify));
}

TEST_CASE("conflict site and merge rule") {
    Graph g = conflict_graph();
    PathSystem p = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
    // the first interior adjacency found is z1z2
    auto first = find_conflict(g, p);
    REQUIRE(first.has_value());
    CHECK(first->x1 == 1);
    CHECK(first->x2 == 6);
    CHECK_THROWS_AS(apply_merge_rule(g, *first), Error);

    ConflictSite site{2, 7, 1, 3, 6, 8};
    auto m = apply_merge_rule(g, site);
    CHECK(m.rule == MergeRule::Rule2);
    int x = m.r.old_to_new[2];
    CHECK(x == m.r.old_to_new[7]);
    CHECK(m.r.g.n() == 9);
    CHECK(m.r.g.degree(x) == 4);
    CHECK(m.r.g.adjacent(m.r.old_to_new[1], m.r.old_to_new[6]));

    // neither answer changes under the merge
    TerminalSpec t{{{0, 4}, {5, 9}}};
    TerminalSpec mt{{{m.r.old_to_new[0], m.r.old_to_new[4]}, {m.r.old_to_new[5], m.r.old_to_new[9]}}};
    CHECK(oracle_disjoint_paths(g, t, true).has_value() == oracle_disjoint_paths(m.r.g, mt, true).has_value());

    Graph no_cross = without_edge(g, 1, 6);
    auto s2 = find_conflict(no_cross, p);
    REQUIRE(s2.has_value());
    CHECK(s2->x1 == 2);
    CHECK(apply_merge_rule(no_cross, *s2).rule == MergeRule::Rule1);
}

TEST_CASE("kIDP-H2 preprocessing") {
    GraphBuilder b(4);
    b.add_path(0, 1, 8);
    b.add_path(2, 3, 8);
    Graph two = b.build();
    TerminalSpec t{{{0, 1}, {2, 3}}};
    auto br = preprocess_kidp_h2(two, t);
    CHECK(br.size() == 1);
    CHECK(solve_kidp_h2free(two, t, Promise::Verify));

    // s=0 t=1 c=2; two 4-edge threads s..c, then a 4-edge path c..t
    GraphBuilder b2(3);
    b2.add_path(0, 2, 4);
    b2.add_path(0, 2, 4);
    b2.add_path(2, 1, 4);
    Graph g2 = b2.build();
    TerminalSpec t2{{{0, 1}}};
    CHECK(preprocess_kidp_h2(g2, t2).size() == 2);
    CHECK(solve_kidp_h2free(g2, t2, Promise::Verify));

    Graph touching = Graph::from_edges(4, {{0, 2}, {0, 1}, {2, 3}});
    CHECK(preprocess_kidp_h2(touching, TerminalSpec{{{0, 1}, {2, 3}}}).empty());
}

TEST_CASE("kIDP solvers agree with the oracle") {
    std::mt19937_64 rng(17);
    std::bernoulli_distribution coin(0.3);
    const Family h1 = family_of({PatternId::h(1)});
    const Family h2 = family_of({PatternId::h(2)});
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 6 + trial % 4;
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g = Graph::from_edges(n, e);
        TerminalSpec t{{{0, 1}, {2, 3}}};
        bool want = oracle_disjoint_paths(g, t, true).has_value();
        if (is_family_free(g, h1)) {
            CHECK(solve_kidp_h1free(g, t, Promise::Verify) == want);
            ++checked;
        }
        if (is_family_free(g, h2)) {
            CHECK(solve_kidp_h2free(g, t, Promise::Verify) == want);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("bipartite star solver") {
    auto a = solve_star3col_bipartite(pat(PatternId::of(PatternKind::A)), Promise::Verify);
    CHECK_FALSE(a.yes);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->id == PatternId::of(PatternKind::A));

    Graph th = pat(PatternId::theta(2, 4, 3, 6));
    auto t = solve_star3col_bipartite(th, Promise::Verify);
    CHECK_FALSE(t.yes);
    REQUIRE(t.witness.has_value());
    CHECK(verify_embedding(th, pat(t.witness->id), t.witness->emb));

    auto p = solve_star3col_bipartite(path(7), Promise::Verify);
    CHECK(p.yes);
    if (p.colouring) CHECK(verify_star_colouring(path(7), *p.colouring, 3));

    CHECK_THROWS_AS(solve_star3col_bipartite(pat(PatternId::cycle(5)), Promise::Verify), Error);
}

TEST_CASE("general star solver") {
    // one branch vertex; star 3-colourable
    auto bt = solve_star3col_general(pat(PatternId::of(PatternKind::Bowtie)), Promise::Verify);
    CHECK(bt.yes);
    auto c4 = solve_star3col_general(pat(PatternId::cycle(4)), Promise::Verify);
    CHECK(c4.yes);
    CHECK_FALSE(solve_star3col_general(pat(PatternId::cycle(5)), Promise::Verify).yes);
    auto p7 = solve_star3col_general(path(7), Promise::Verify);
    CHECK(p7.yes);
    if (p7.colouring) CHECK(verify_star_colouring(path(7), *p7.colouring, 3));
}

TEST_CASE("compress_threads keeps star colourability") {
    GraphBuilder b(2);
    for (int len : {16, 17, 14}) b.add_path(0, 1, len);
    Graph g = b.build();
    Graph c = compress_threads(g);
    CHECK(c.n() == 2 + 9 + 10 + 10);
    CHECK(oracle_star3col(c, OracleConfig::uniform(60)).has_value() == oracle_star3col(g, OracleConfig::uniform(60)).has_value());
    Graph short_threads = compress_threads(pat(PatternId::theta(2, 4, 3, 6)));
    CHECK(short_threads.n() == 18);
}

TEST_CASE("injective 10-colouring") {
    Graph k4 = pat(PatternId::complete(4));
    auto c = greedy_injective_10col(k4);
    CHECK(verify_distance2(k4, c, 4));

    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                            {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto pc = greedy_injective_10col(petersen);
    CHECK(verify_distance2(petersen, pc, 10));

    auto e = greedy_injective_10col(Graph(3));
    CHECK(e == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(greedy_injective_10col(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), Error);
}
