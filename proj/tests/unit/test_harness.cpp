#include <doctest.h>

#include "hfree/harness.hpp"

using namespace hfree;

TEST_CASE("problem names round-trip") {
    for (Problem p : {Problem::C5ColH3, Problem::HamiltonH1, Problem::KidpH1, Problem::KidpH2, Problem::Star3Bip,
                      Problem::Star3, Problem::Star10Subcubic})
        CHECK(parse_problem(to_string(p)) == p);
    CHECK_THROWS_AS(parse_problem("sudoku"), Error);
}

TEST_CASE("graph_from_mask") {
    Graph g = graph_from_mask(4, 0b000001);
    CHECK(g.m() == 1);
    CHECK(g.adjacent(0, 1));
    Graph k4 = graph_from_mask(4, 0b111111);
    CHECK(k4.m() == 6);
    CHECK(graph_from_mask(3, 0b100).adjacent(1, 2));
}

TEST_CASE("trial seeds are distinct and stable") {
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
    CHECK(trial_seed(7, 3) == trial_seed(7, 3));
}

TEST_CASE("random instances are deterministic") {
    for (Problem p : {Problem::C5ColH3, Problem::KidpH2, Problem::Star3}) {
        Instance a = random_instance(p, 10, 99);
        Instance b = random_instance(p, 10, 99);
        CHECK(a.g == b.g);
        CHECK(a.t.pairs == b.t.pairs);
    }
}

TEST_CASE("serial and parallel harness runs agree") {
    for (Problem p : {Problem::C5ColH3, Problem::HamiltonH1, Problem::Star3Bip}) {
        auto s = run_harness(p, 40, 10, 5, false);
        auto q = run_harness(p, 40, 10, 5, true);
        CHECK(s.trials == 40);
        CHECK(s.agree == q.agree);
        CHECK(s.yes == q.yes);
        CHECK(s.agree == s.trials);
    }
}

TEST_CASE("sweeps reject sizes beyond their limit") {
    CHECK_THROWS_AS(sweep_reductions(7, false), Error);
    CHECK_THROWS_AS(sweep_c5_critical(9, false), Error);
    auto r = sweep_reductions(3, false);
    CHECK(r.graphs == 1 + 2 + 8);
    CHECK(r.c5_mismatch == 0);
    CHECK(r.star_mismatch == 0);
    auto c = sweep_c5_critical(4, true);
    CHECK(c.critical == 1);
    CHECK(c.counterexamples == 0);
}

TEST_CASE("conflict instances keep their verdict") {
    int found = 0;
    for (std::uint64_t i = 0; found < 10 && i < 1000; ++i) {
        auto c = make_conflict_instance(trial_seed(77, i));
        if (!c) continue;
        ++found;
        auto m = check_merge(*c);
        CHECK(m.verdict_kept);
        CHECK(m.h2_free_after);
    }
    CHECK(found == 10);
}
