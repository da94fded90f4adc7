#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/certify.hpp"
#include "hfree/graph.hpp"
#include "hfree/patterns.hpp"

namespace hfree {

// ---- 3-SAT ----

struct CnfFormula {
    int n = 0;                              // variables 1..n
    std::vector<std::array<int, 3>> clauses;  // signed variable indices
};

// xi[i-1] is the value of variable i.
using Assignment = std::vector<int>;

CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);
bool satisfies(const CnfFormula& f, const Assignment& xi);
// Brute force over all assignments; n <= 20.
std::optional<Assignment> solve_sat(const CnfFormula& f);

// ---- hole gadget ----

using GadgetLayout = std::map<std::string, int>;

struct LongPath {
    int a = -1, b = -1;
    std::vector<int> inner;
    std::string group;  // "P^+_i" / "P^-_i" on variable paths, empty elsewhere
};

struct SatGadget {
    Graph g;
    GadgetLayout layout;
    std::vector<LongPath> paths;  // every l-path, in creation order
    int ell = 0;
    int x = -1, y = -1;
};

SatGadget gen_2idp_sat(const CnfFormula& f, int ell);

struct HoleBuild {
    Hole hole;  // sorted
    std::vector<int> literal_picks;   // literal sides chosen by truth value
    std::vector<int> variable_picks;  // alpha^2+/alpha^3+ reached from variable paths
    std::vector<int> clause_picks;    // alpha^2-/alpha^3- chosen for clauses
};
HoleBuild build_hole_certificate(const CnfFormula& f, const Assignment& xi, const SatGadget& gad);

// ---- colouring reductions ----

Graph reduce_5col_to_c5col(const Graph& g);
Graph reduce_3col_to_star3col(const Graph& g);

struct GirthGadget {
    Graph g;
    GadgetLayout layout;
    int param = 0;  // cycle length 12 * param in the vertex gadgets
    // per base vertex: its four f vertices and the e vertices they hang from
    std::vector<std::array<int, 4>> f, e;
    // per base edge (m < n): the four f' and four e' of the interposed gadget
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::array<int, 4>> f2, e2;
};

GirthGadget gen_bipartite_star_gadget(const Graph& g, int girth_target);
Colouring build_gadget_star_colouring(const Graph& base, const Colouring& c, const GirthGadget& gad);

// Completes a partial colouring (-1 = open) to a star colouring, visiting
// open vertices in the given order.
std::optional<Colouring> extend_star_colouring(const Graph& g, Colouring partial, const std::vector<int>& order,
                                               int colours = 3);

// ---- constructive lemmas ----

// Vertices x, x+-1, ... , y of a length-N walk in C5 (N + 1 entries).
std::optional<std::vector<int>> c5_walk(int x, int y, int len);
// Colours 0..2 along a path on `vertices` vertices whose ends have equal or
// different colours; first entry 0, last entry 0 (same) or nonzero (different).
// Throws for 6 vertices with equal ends, where no such sequence exists.
std::vector<int> subdivision_sequence(int vertices, bool same);
// Threads of 6 vertices between equal colours are completed by backtracking.
Colouring star_colour_subdivision(const Graph& g, int k);

// ---- random instances ----

Graph gen_random_free(int n, double edge_prob, const Family& family, std::uint64_t seed);
// Deletes the lexicographically first edge of each found embedding until g is family-free.
Graph repair_free(Graph g, const Family& family);

}  // namespace hfree
