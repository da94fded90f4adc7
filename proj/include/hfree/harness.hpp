#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfree/certify.hpp"
#include "hfree/graph.hpp"
#include "hfree/solvers.hpp"

namespace hfree {

// Problems understood by the equivalence harness.
enum class Problem { C5ColH3, HamiltonH1, KidpH1, KidpH2, Star3Bip, Star3, Star10Subcubic };

Problem parse_problem(const std::string& name);
std::string to_string(Problem p);

// Seed for trial i of a run; trial outcomes depend only on (seed, i).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i);

struct Instance {
    Graph g;
    TerminalSpec t;
};

// A random promise-satisfying instance with at most `size` vertices.
Instance random_instance(Problem p, int size, std::uint64_t seed);

struct Mismatch {
    std::size_t trial = 0;
    std::string what;
    Instance inst;
};

struct HarnessReport {
    std::size_t trials = 0;
    std::size_t agree = 0;
    std::size_t yes = 0;             // oracle YES count among agreeing trials
    std::size_t case_exhaustion = 0;  // Hamilton dispatch found no case
    std::size_t violations = 0;       // characterization or promise errors
    std::vector<Mismatch> mismatches;  // in trial order
};

HarnessReport run_harness(Problem p, std::size_t trials, int size, std::uint64_t seed, bool parallel);

// ---- exhaustive sweeps over labelled graphs ----

// Graph on n vertices from the bits of `mask` over pairs (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_mask(int n, std::uint64_t mask);

struct ReductionSweep {
    std::size_t graphs = 0;
    std::size_t c5_mismatch = 0;
    std::size_t star_mismatch = 0;
    std::size_t five_colourable = 0;
    std::size_t three_colourable = 0;
};
ReductionSweep sweep_reductions(int max_n, bool parallel);

struct CriticalSweep {
    std::size_t graphs = 0;  // connected labelled graphs visited
    std::size_t critical = 0;
    std::size_t counterexamples = 0;
    std::vector<Graph> examples;  // counterexamples, capped
};
CriticalSweep sweep_c5_critical(int max_n, bool parallel);

// ---- merge-rule instances ----

struct ConflictInstance {
    Graph g;
    TerminalSpec t;
    ConflictSite site;
};
// Two terminal paths joined at an interior edge x1x2, with random extra
// edges around the site; none when the draw is not H2-free or breaks the
// neighbourhood condition.
std::optional<ConflictInstance> make_conflict_instance(std::uint64_t seed);

struct MergeCheck {
    bool verdict_kept = false;
    bool h2_free_after = false;
    MergeRule rule = MergeRule::Rule1;
};
MergeCheck check_merge(const ConflictInstance& c);

}  // namespace hfree
