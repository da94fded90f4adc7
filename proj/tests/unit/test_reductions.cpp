#include <doctest.h>

#include "hfree/oracles.hpp"
#include "hfree/patterns.hpp"
#include "hfree/reductions.hpp"

using namespace hfree;

namespace {

Graph pat(const PatternId& id) { return build_pattern(id); }

bool star_path(const std::vector<int>& seq) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i) e.emplace_back(i, i + 1);
    return verify_star_colouring(Graph::from_edges(static_cast<int>(seq.size()), e), seq, 3);
}

}  // namespace

TEST_CASE("DIMACS parsing") {
    CnfFormula f = parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f.n == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 3});
    CHECK(parse_dimacs(to_dimacs(f)).clauses == f.clauses);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), Error);
    CHECK(satisfies(f, {1, 1, 1}));
    CHECK_FALSE(satisfies(f, {1, 0, 1}));
}

TEST_CASE("SAT brute force") {
    CnfFormula f;
    f.n = 3;
    for (int a : {1, -1})
        for (int b : {2, -2})
            for (int c : {3, -3}) f.clauses.push_back({a, b, c});
    CHECK_FALSE(solve_sat(f).has_value());
    f.clauses.pop_back();
    auto xi = solve_sat(f);
    REQUIRE(xi.has_value());
    CHECK(satisfies(f, *xi));
}

TEST_CASE("hole gadget on one clause") {
    CnfFormula f;
    f.n = 3;
    f.clauses.push_back({1, 2, 3});
    SatGadget gad = gen_2idp_sat(f, 5);
    CHECK(gad.g.max_degree() <= 3);
    CHECK(gad.g.degree(gad.x) == 2);
    CHECK(gad.g.degree(gad.y) == 2);
    CHECK(is_family_free(gad.g, family_of({PatternId::h(4)})));
    for (const auto& xi : {Assignment{1, 1, 1}, Assignment{1, 0, 0}, Assignment{0, 0, 1}}) {
        auto hb = build_hole_certificate(f, xi, gad);
        CHECK(verify_hole(gad.g, gad.x, gad.y, hb.hole));
    }
    CHECK_THROWS_AS(build_hole_certificate(f, {0, 0, 0}, gad), Error);
    CHECK_THROWS_AS(gen_2idp_sat(f, 4), Error);
}

TEST_CASE("5-colouring to C5-colouring") {
    for (int r = 3; r <= 6; ++r) {
        Graph k = pat(PatternId::complete(r));
        Graph red = reduce_5col_to_c5col(k);
        CHECK(oracle_c5_colouring(red, OracleConfig::uniform(40)).has_value() == (r <= 5));
    }
}

TEST_CASE("3-colouring to star 3-colouring") {
    Graph k3 = reduce_3col_to_star3col(pat(PatternId::complete(3)));
    CHECK(oracle_star3col(k3, OracleConfig::uniform(40)).has_value());
    Graph k4 = reduce_3col_to_star3col(pat(PatternId::complete(4)));
    CHECK_FALSE(oracle_star3col(k4, OracleConfig::uniform(40)).has_value());
    CHECK(is_family_free(k4, parse_family("H:odd")));
}

TEST_CASE("girth gadget") {
    for (Graph base : {pat(PatternId::complete(3)), Graph::from_edges(2, {{0, 1}})}) {
        GirthGadget gad = gen_bipartite_star_gadget(base, 6);
        CHECK(is_bipartite(gad.g));
        CHECK(gad.g.max_degree() <= 3);
        auto gi = girth(gad.g);
        CHECK((!gi || *gi >= 6));
        Colouring c(static_cast<std::size_t>(base.n()));
        for (int v = 0; v < base.n(); ++v) c[v] = v;
        CHECK(verify_star_colouring(gad.g, build_gadget_star_colouring(base, c, gad), 3));
    }
    GirthGadget k3 = gen_bipartite_star_gadget(pat(PatternId::complete(3)), 4);
    CHECK_THROWS_AS(build_gadget_star_colouring(pat(PatternId::complete(3)), {0, 0, 1}, k3), Error);
}

TEST_CASE("C5 walks") {
    CHECK(c5_walk(0, 0, 5) == std::vector<int>{0, 1, 2, 3, 4, 0});
    CHECK(c5_walk(0, 1, 1) == std::vector<int>{0, 1});
    CHECK_FALSE(c5_walk(0, 0, 3).has_value());
    CHECK_FALSE(c5_walk(0, 2, 1).has_value());
    auto w = c5_walk(2, 4, 9);
    REQUIRE(w.has_value());
    CHECK(w->size() == 10);
}

TEST_CASE("subdivision sequences") {
    for (int v = 5; v <= 30; ++v)
        for (bool same : {false, true}) {
            if (v == 6 && same) {
                CHECK_THROWS_AS(subdivision_sequence(v, same), Error);
                continue;
            }
            auto s = subdivision_sequence(v, same);
            REQUIRE(static_cast<int>(s.size()) == v);
            CHECK(s.front() == 0);
            CHECK((s.back() == 0) == same);
            CHECK(star_path(s));
        }
}

TEST_CASE("subdivision star colouring") {
    for (auto [r, k] : {std::pair(3, 3), std::pair(5, 4), std::pair(4, 4), std::pair(6, 5)}) {
        Graph g = pat(PatternId::complete(r));
        CHECK(verify_star_colouring(k_subdivide(g, k), star_colour_subdivision(g, k), 3));
    }
    CHECK_THROWS_AS(star_colour_subdivision(pat(PatternId::complete(7)), 4), Error);
}

TEST_CASE("K4 all-equal colouring does not extend at k=4") {
    Graph s = k_subdivide(pat(PatternId::complete(4)), 4);
    Colouring partial(static_cast<std::size_t>(s.n()), -1);
    std::vector<int> order;
    for (int v = 0; v < s.n(); ++v) {
        if (v < 4) partial[v] = 0;
        else order.push_back(v);
    }
    CHECK_FALSE(extend_star_colouring(s, partial, order).has_value());
    partial[1] = 1;
    partial[2] = 2;
    CHECK(extend_star_colouring(s, partial, order).has_value());
}

TEST_CASE("random free graphs") {
    Family even = parse_family("H:even");
    Graph g = gen_random_free(14, 0.4, even, 3);
    CHECK(g.n() == 14);
    CHECK(is_family_free(g, even));
    CHECK(gen_random_free(14, 0.4, even, 3) == g);
    Graph r = repair_free(pat(PatternId::h(2)), family_of({PatternId::h(2)}));
    CHECK(r.m() == pat(PatternId::h(2)).m() - 1);
}
