#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfree/certify.hpp"
#include "hfree/graph.hpp"
#include "hfree/patterns.hpp"

namespace hfree {

enum class Promise { Verify, Trust };

// The input (or a graph derived from it) contains a forbidden pattern.
struct PromiseViolation : Error {
    FamilyHit witness;
    PromiseViolation(const std::string& what, FamilyHit w) : Error(what), witness(std::move(w)) {}
};

// The Hamilton case dispatch found no applicable case.
struct CaseExhaustion : Error {
    using Error::Error;
};

// Five or more branch vertices but no obstruction located.
struct CharacterizationViolation : Error {
    using Error::Error;
};

struct Verdict {
    bool yes = false;
    std::optional<FamilyHit> witness;  // NO certificate
    std::optional<Colouring> colouring;
};

// Throws PromiseViolation when g contains a member of f.
void require_free(const Graph& g, const Family& f, const std::string& what);

Verdict solve_c5col_h3free(const Graph& g, Promise mode);

struct HamiltonStats {
    long diamond = 0;
    long bull = 0;
    long base = 0;
};
bool solve_hamilton_h1free(const Graph& g, Promise mode, HamiltonStats* stats = nullptr);

// Exhaustive k-Disjoint Paths (paths need not be mutually induced).
std::optional<PathSystem> k_disjoint_paths(const Graph& g, const TerminalSpec& t);

bool solve_kidp_h1free(const Graph& g, const TerminalSpec& t, Promise mode);

struct Branch {
    Graph g;
    TerminalSpec t;  // pairs whose path is still open
};
std::vector<Branch> preprocess_kidp_h2(const Graph& g, const TerminalSpec& t);

struct ConflictSite {
    int x1 = -1, x2 = -1;
    int z1 = -1, z3 = -1;  // path neighbours of x1
    int z2 = -1, z4 = -1;  // path neighbours of x2
};
std::optional<ConflictSite> find_conflict(const Graph& g, const PathSystem& p);

enum class MergeRule { Rule1, Rule2 };
struct MergeResult {
    Relabelled r;  // x1 and x2 both map to the merged vertex
    MergeRule rule;
};
MergeResult apply_merge_rule(const Graph& g, const ConflictSite& c);

struct H2Stats {
    long branches = 0;
    long merges = 0;
};
bool solve_kidp_h2free(const Graph& g, const TerminalSpec& t, Promise mode, H2Stats* stats = nullptr);

Verdict solve_star3col_bipartite(const Graph& g, Promise mode);
Verdict solve_star3col_general(const Graph& g, Promise mode);
// Shortens long threads and caps parallel-thread multiplicity.
Graph compress_threads(const Graph& g);

Colouring greedy_injective_10col(const Graph& g);

}  // namespace hfree
