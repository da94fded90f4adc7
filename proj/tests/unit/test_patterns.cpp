#include <doctest.h>

#include <random>

#include "hfree/patterns.hpp"
#include "hfree/reductions.hpp"

using namespace hfree;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("pattern sizes") {
    auto size = [](const PatternId& id) {
        Graph g = build_pattern(id);
        return std::pair<int, int>(g.n(), static_cast<int>(g.m()));
    };
    CHECK(size(PatternId::h(0)) == std::pair(5, 4));
    CHECK(size(PatternId::h(1)) == std::pair(6, 5));
    CHECK(size(PatternId::h(3)) == std::pair(8, 7));
    CHECK(size(PatternId::flower(3)) == std::pair(10, 12));
    CHECK(size(PatternId::flower(5)) == std::pair(16, 20));
    CHECK(size(PatternId::of(PatternKind::A)) == std::pair(6, 6));
    CHECK(size(PatternId::of(PatternKind::Bowtie)) == std::pair(5, 6));
    CHECK(size(PatternId::of(PatternKind::Bull)) == std::pair(5, 5));
    CHECK(size(PatternId::of(PatternKind::Diamond)) == std::pair(4, 5));
    CHECK(size(PatternId::of(PatternKind::DiamondPendant)) == std::pair(5, 6));
    CHECK(size(PatternId::of(PatternKind::Claw)) == std::pair(4, 3));
    CHECK(size(PatternId::theta(2, 4, 3, 6)) == std::pair(18, 21));
    CHECK(size(PatternId::of(PatternKind::E1)).first == 9);
    // H(l) has l + 5 vertices and l + 4 edges
    for (int l = 1; l <= 8; ++l) CHECK(size(PatternId::h(l)) == std::pair(l + 5, l + 4));
}

TEST_CASE("pattern syntax round-trips") {
    for (const char* s : {"H:3", "flower:5", "theta:2x4+3x6", "A", "E1", "E2", "E3", "bowtie", "C:5", "K:3", "Kb:2,3",
                          "diamond", "diamond-pendant", "bull", "racket:4", "claw"}) {
        PatternId id = parse_pattern(s);
        CHECK(to_string(id) == s);
        CHECK(parse_pattern(to_string(id)) == id);
    }
    CHECK(parse_pattern("FLOWER:3") == PatternId::flower(3));
    CHECK_THROWS_AS(parse_pattern("nonsense"), Error);
    CHECK_THROWS_AS(parse_pattern("H:-1"), Error);
}

TEST_CASE("subgraph search examples") {
    Graph k4 = build_pattern(PatternId::complete(4));
    CHECK_FALSE(contains_subgraph(k4, PatternId::h(1)).has_value());
    Graph h3 = build_pattern(PatternId::h(3));
    auto e = find_subgraph(h3, h3);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(h3, h3, *e));
    CHECK_FALSE(contains_subgraph(build_pattern(PatternId::flower(3)), PatternId::h(3)).has_value());
}

TEST_CASE("matcher agrees with the naive search") {
    std::mt19937_64 rng(11);
    const PatternId pats[] = {PatternId::h(1), PatternId::h(2), PatternId::of(PatternKind::A),
                              PatternId::of(PatternKind::Bull), PatternId::cycle(5), PatternId::h(0)};
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 7, 0.2 + 0.01 * t);
        for (const auto& id : pats) {
            Graph p = build_pattern(id);
            auto fast = find_subgraph(g, p);
            auto slow = find_subgraph_naive(g, p);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(verify_embedding(g, p, *fast));
        }
    }
}

TEST_CASE("family expressions") {
    Family odd = parse_family("H:odd");
    auto m = odd.instantiate(12);
    CHECK(m == std::vector<PatternId>{PatternId::h(1), PatternId::h(3), PatternId::h(5), PatternId::h(7)});
    Family even = parse_family("H:even");
    CHECK(even.instantiate(11) == std::vector<PatternId>{PatternId::h(2), PatternId::h(4), PatternId::h(6)});
    Family range = parse_family("H:1..4");
    CHECK(range.instantiate(100).size() == 4);
    Family res = parse_family("H:1mod3,2mod3");
    auto r = res.instantiate(13);
    CHECK(r == std::vector<PatternId>{PatternId::h(1), PatternId::h(2), PatternId::h(4), PatternId::h(5),
                                      PatternId::h(7), PatternId::h(8)});
    Family mixed = parse_family("H:odd,A");
    auto mm = mixed.instantiate(8);
    CHECK(std::find(mm.begin(), mm.end(), PatternId::of(PatternKind::A)) != mm.end());
    CHECK(std::find(mm.begin(), mm.end(), PatternId::h(3)) != mm.end());
    CHECK_THROWS_AS(parse_family(""), Error);
    CHECK_THROWS_AS(parse_family("H:1mod0"), Error);
}

TEST_CASE("family freeness examples") {
    Graph c9 = build_pattern(PatternId::cycle(9));
    CHECK(is_family_free(c9, parse_family("H:0..20")));
    Graph k23 = reduce_3col_to_star3col(build_pattern(PatternId::complete(3)));
    CHECK(is_family_free(k23, family_of({PatternId::h(1), PatternId::h(3), PatternId::h(5)})));
    CHECK(is_family_free(k23, parse_family("H:odd")));
    Graph a = build_pattern(PatternId::of(PatternKind::A));
    auto hit = find_family_member(a, parse_family("A"));
    REQUIRE(hit.has_value());
    CHECK(hit->emb.size() == 6);
}

TEST_CASE("C4 with three branch vertices") {
    CHECK(find_c4_three_branch(build_pattern(PatternId::of(PatternKind::DiamondPendant))).has_value());
    CHECK_FALSE(find_c4_three_branch(build_pattern(PatternId::cycle(4))).has_value());
    CHECK_FALSE(find_c4_three_branch(build_pattern(PatternId::of(PatternKind::A))).has_value());
}

TEST_CASE("odd flower detection") {
    auto f3 = detect_odd_flower(build_pattern(PatternId::flower(3)));
    REQUIRE(f3.has_value());
    CHECK(f3->petals == 3);
    CHECK(verify_embedding(build_pattern(PatternId::flower(3)), build_pattern(PatternId::flower(3)), f3->emb));
    CHECK_FALSE(detect_odd_flower(build_pattern(PatternId::flower(4))).has_value());
    CHECK_FALSE(detect_odd_flower(build_pattern(PatternId::cycle(9))).has_value());
    CHECK(detect_odd_flower(build_pattern(PatternId::flower(5))).has_value());
}

TEST_CASE("flower detection agrees with the exhaustive search") {
    std::mt19937_64 rng(5);
    int found = 0;
    for (int t = 0; t < 150; ++t) {
        // plant a flower and add noise so both outcomes occur
        int n = 10 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.12);
        if (t % 2 == 0) {
            Graph f = build_pattern(PatternId::flower(3));
            std::vector<Edge> e = g.edges();
            for (auto [u, v] : f.edges()) e.emplace_back(u, v);
            g = Graph::simplified(n, e);
        }
        auto fast = detect_odd_flower(g);
        auto slow = find_odd_flower_exhaustive(g);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            ++found;
            CHECK(verify_embedding(g, build_pattern(PatternId::flower(fast->petals)), fast->emb));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("class S membership") {
    Graph p7 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(is_in_class_S(p7));
    CHECK(is_in_class_S(build_pattern(PatternId::of(PatternKind::Claw))));
    CHECK_FALSE(is_in_class_S(build_pattern(PatternId::cycle(4))));
    CHECK_FALSE(is_in_class_S(build_pattern(PatternId::h(1))));
}
