#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

enum class PatternKind {
    H,               // a = ell
    Claw,
    K,               // a = r
    C,               // a = r
    Kb,              // a, b
    Diamond,
    DiamondPendant,
    Bull,
    Bowtie,
    A,
    E1,
    E2,
    E3,
    Flower,          // a = petals
    Racket,          // a = path order
    Theta,           // alpha = a, i = b, beta = c, j = d
};

struct PatternId {
    PatternKind kind = PatternKind::K;
    int a = 0, b = 0, c = 0, d = 0;

    static PatternId h(int ell) { return {PatternKind::H, ell}; }
    static PatternId flower(int n) { return {PatternKind::Flower, n}; }
    static PatternId cycle(int r) { return {PatternKind::C, r}; }
    static PatternId complete(int r) { return {PatternKind::K, r}; }
    static PatternId theta(int alpha, int i, int beta, int j) { return {PatternKind::Theta, alpha, i, beta, j}; }
    static PatternId of(PatternKind k) { return {k}; }

    bool operator==(const PatternId&) const = default;
};

std::string to_string(const PatternId& id);
PatternId parse_pattern(std::string_view text);
Graph build_pattern(const PatternId& id);

// pattern vertex -> host vertex
using Embedding = std::vector<int>;

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);
std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern);
// Reference search over all injections; only for tiny hosts.
std::optional<Embedding> find_subgraph_naive(const Graph& host, const Graph& pattern);
std::optional<Embedding> contains_subgraph(const Graph& g, const PatternId& id);

// A family expression such as "H:odd,A" or "H:1mod3,2mod3".
struct HSelector {
    enum Kind { Exact, Range, Residue } kind;
    int lo = 0, hi = 0;     // Exact uses lo; Range uses [lo, hi]
    int residue = 0, mod = 1;
    bool matches(int ell) const;
};

struct Family {
    std::vector<HSelector> h;
    std::vector<PatternId> fixed;
    // Members that can possibly embed in a graph on n vertices.
    std::vector<PatternId> instantiate(int n) const;
};

Family parse_family(std::string_view text);
Family family_of(const std::vector<PatternId>& ids);
Family h_family(std::vector<HSelector> sel);

struct FamilyHit {
    PatternId id;
    Embedding emb;
};

std::optional<FamilyHit> find_family_member(const Graph& g, const std::vector<PatternId>& members);
std::optional<FamilyHit> find_family_member(const Graph& g, const Family& f);
bool is_family_free(const Graph& g, const Family& f);

// A 4-cycle (in cycle order) with at least three vertices of degree >= 3.
std::optional<std::vector<int>> find_c4_three_branch(const Graph& g);

struct FlowerHit {
    int centre = -1;
    int petals = 0;
    Embedding emb;  // onto build_pattern(Flower(petals))
};

struct FlowerStats {
    long centres_tested = 0;
    long aux_odd = 0;            // auxiliary graph had an odd cycle
    long aux_odd_no_flower = 0;  // ... but no flower with that centre exists
};

std::optional<FlowerHit> detect_odd_flower(const Graph& g, FlowerStats* stats = nullptr);
// Exhaustive per-n embedding search, used as the cross-check.
std::optional<FlowerHit> find_odd_flower_exhaustive(const Graph& g);

bool is_in_class_S(const Graph& g);

}  // namespace hfree
