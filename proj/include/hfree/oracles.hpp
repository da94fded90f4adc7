#pragma once

#include <optional>

#include "hfree/certify.hpp"
#include "hfree/graph.hpp"

namespace hfree {

struct BoundExceeded : Error {
    using Error::Error;
};

// Vertex-count caps for the exhaustive solvers.
struct OracleConfig {
    int c5 = 24;
    int hamilton = 20;
    int star = 30;
    int paths = 16;
    int hole = 24;
    int kcol = 24;

    // Defaults, with every cap replaced by $SUITE_ORACLE_BOUND when set.
    static OracleConfig standard();
    static OracleConfig uniform(int bound);
};

std::optional<Colouring> oracle_c5_colouring(const Graph& g, const OracleConfig& cfg = OracleConfig::standard());
bool oracle_c5_critical(const Graph& g, const OracleConfig& cfg = OracleConfig::standard());
std::optional<HamCycle> oracle_hamilton(const Graph& g, const OracleConfig& cfg = OracleConfig::standard());
std::optional<Colouring> oracle_star3col(const Graph& g, const OracleConfig& cfg = OracleConfig::standard());
std::optional<PathSystem> oracle_disjoint_paths(const Graph& g, const TerminalSpec& t, bool induced,
                                                const OracleConfig& cfg = OracleConfig::standard());
std::optional<Hole> oracle_hole_through(const Graph& g, int x, int y,
                                        const OracleConfig& cfg = OracleConfig::standard());
std::optional<Colouring> oracle_k_colouring(const Graph& g, int k, const OracleConfig& cfg = OracleConfig::standard());

}  // namespace hfree
