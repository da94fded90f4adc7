#pragma once

#include <utility>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

using Colouring = std::vector<int>;
using HamCycle = std::vector<int>;
using Path = std::vector<int>;
using PathSystem = std::vector<Path>;
using Hole = std::vector<int>;

struct TerminalSpec {
    std::vector<std::pair<int, int>> pairs;

    int k() const { return static_cast<int>(pairs.size()); }
    std::vector<int> all() const;
    // Throws unless all 2k terminals are distinct vertices of a graph on n vertices.
    void validate(int n) const;
};

// All verifiers throw Error on a colouring whose length differs from n or
// that holds a negative entry.
bool verify_c5_hom(const Graph& g, const Colouring& c);
bool verify_proper(const Graph& g, const Colouring& c, int colours);
bool verify_star_colouring(const Graph& g, const Colouring& c, int colours);
// Distinct colours on every pair at distance <= 2.
bool verify_distance2(const Graph& g, const Colouring& c, int colours);
bool verify_hamilton(const Graph& g, const HamCycle& h);
bool verify_path_system(const Graph& g, const TerminalSpec& t, const PathSystem& p, bool induced);
bool verify_hole(const Graph& g, int x, int y, const Hole& h);

}  // namespace hfree
