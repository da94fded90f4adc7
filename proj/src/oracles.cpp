#include "hfree/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace hfree {

OracleConfig OracleConfig::uniform(int bound) {
    if (bound < 1) throw Error("oracle bound must be positive");
    OracleConfig c;
    c.c5 = c.hamilton = c.star = c.paths = c.hole = c.kcol = bound;
    return c;
}

OracleConfig OracleConfig::standard() {
    const char* env = std::getenv("SUITE_ORACLE_BOUND");
    if (env == nullptr || *env == '\0') return OracleConfig{};
    int v = 0;
    try {
        std::size_t used = 0;
        v = std::stoi(env, &used);
        if (env[used] != '\0') throw Error("");
    } catch (const std::exception&) {
        throw Error(std::string("SUITE_ORACLE_BOUND is not an integer: ") + env);
    }
    return uniform(v);
}

namespace {

void check_bound(const Graph& g, int bound, const char* what) {
    if (g.n() > bound)
        throw BoundExceeded(std::string(what) + " oracle: " + std::to_string(g.n()) + " vertices exceeds bound " +
                            std::to_string(bound));
}

// Index-order backtracking over colour domains held as bitmasks. `allowed(c)`
// is the set of colours a neighbour of a c-coloured vertex may take.
std::optional<Colouring> domain_search(const Graph& g, int colours, const std::function<std::uint32_t(int)>& allowed) {
    int n = g.n();
    std::uint32_t full = colours >= 32 ? ~0U : (1U << colours) - 1;
    std::vector<std::uint32_t> dom(static_cast<std::size_t>(n), full);
    Colouring col(static_cast<std::size_t>(n), -1);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        std::uint32_t d = dom[v];
        for (int c = 0; c < colours; ++c) {
            if (!((d >> c) & 1U)) continue;
            std::uint32_t mask = allowed(c);
            std::vector<std::pair<int, std::uint32_t>> saved;
            bool ok = true;
            for (int w : g.nbrs(v)) {
                if (w <= v) continue;
                saved.emplace_back(w, dom[w]);
                dom[w] &= mask;
                if (dom[w] == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                col[v] = c;
                if (rec(v + 1)) return true;
                col[v] = -1;
            }
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) dom[it->first] = it->second;
        }
        return false;
    };
    if (rec(0)) return col;
    return std::nullopt;
}

std::optional<Colouring> c5_search(const Graph& g) {
    return domain_search(g, 5, [](int c) { return (1U << ((c + 1) % 5)) | (1U << ((c + 4) % 5)); });
}

}  // namespace

std::optional<Colouring> oracle_c5_colouring(const Graph& g, const OracleConfig& cfg) {
    check_bound(g, cfg.c5, "C5-colouring");
    return c5_search(g);
}

bool oracle_c5_critical(const Graph& g, const OracleConfig& cfg) {
    check_bound(g, cfg.c5, "C5-criticality");
    if (c5_search(g)) return false;
    for (auto [u, v] : g.edges())
        if (!c5_search(without_edge(g, u, v))) return false;
    return true;
}

std::optional<Colouring> oracle_k_colouring(const Graph& g, int k, const OracleConfig& cfg) {
    check_bound(g, cfg.kcol, "k-colouring");
    if (k < 0 || k > 31) throw Error("k-colouring oracle supports 0 <= k <= 31");
    if (g.n() == 0) return Colouring{};
    if (k == 0) return std::nullopt;
    std::uint32_t full = (1U << k) - 1;
    return domain_search(g, k, [full](int c) { return full & ~(1U << c); });
}

std::optional<HamCycle> oracle_hamilton(const Graph& g, const OracleConfig& cfg) {
    check_bound(g, std::min(cfg.hamilton, 24), "Hamilton");
    int n = g.n();
    if (n < 3) return std::nullopt;
    std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.nbrs(v)) nb[v] |= 1U << w;
    std::size_t states = std::size_t{1} << n;
    // ends[mask]: vertices v such that some path from 0 covers exactly mask and ends at v
    std::vector<std::uint32_t> ends(states, 0);
    ends[1] = 1;
    for (std::size_t mask = 1; mask < states; mask += 2) {
        std::uint32_t e = ends[mask];
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t next = nb[v] & ~static_cast<std::uint32_t>(mask);
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                ends[mask | (std::size_t{1} << w)] |= 1U << w;
            }
        }
    }
    std::size_t full = states - 1;
    std::uint32_t closing = ends[full] & nb[0];
    if (!closing) return std::nullopt;
    int cur = std::countr_zero(closing);
    std::size_t mask = full;
    HamCycle rev{cur};
    while (mask != 1) {
        std::size_t prev_mask = mask & ~(std::size_t{1} << cur);
        int prev = std::countr_zero(ends[prev_mask] & nb[cur]);
        rev.push_back(prev);
        mask = prev_mask;
        cur = prev;
    }
    return HamCycle(rev.rbegin(), rev.rend());
}

std::optional<Colouring> oracle_star3col(const Graph& g, const OracleConfig& cfg) {
    check_bound(g, cfg.star, "star 3-colouring");
    int n = g.n();
    Colouring col(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> dom(static_cast<std::size_t>(n), 7);
    // bichromatic P4 through v among coloured vertices
    auto p4_clash = [&](int v) {
        for (int b : g.nbrs(v)) {
            if (col[b] < 0) continue;
            for (int c : g.nbrs(b)) {
                if (c == v || col[c] != col[v]) continue;
                for (int d : g.nbrs(c))
                    if (d != b && d != v && col[d] == col[b]) return true;  // v-b-c-d
            }
            for (int c : g.nbrs(v)) {
                if (c == b || col[c] != col[b]) continue;
                for (int d : g.nbrs(c))
                    if (d != v && d != b && col[d] == col[v]) return true;  // b-v-c-d
            }
        }
        return false;
    };
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int c = 0; c < 3; ++c) {
            if (!((dom[v] >> c) & 1U)) continue;
            col[v] = c;
            if (!p4_clash(v)) {
                std::vector<std::pair<int, std::uint8_t>> saved;
                bool ok = true;
                for (int w : g.nbrs(v)) {
                    if (col[w] >= 0) continue;
                    saved.emplace_back(w, dom[w]);
                    dom[w] &= static_cast<std::uint8_t>(~(1U << c));
                    if (!dom[w]) {
                        ok = false;
                        break;
                    }
                }
                if (ok && rec(v + 1)) return true;
                for (auto it = saved.rbegin(); it != saved.rend(); ++it) dom[it->first] = it->second;
            }
            col[v] = -1;
        }
        return false;
    };
    if (rec(0)) return col;
    return std::nullopt;
}

std::optional<PathSystem> oracle_disjoint_paths(const Graph& g, const TerminalSpec& t, bool induced,
                                                const OracleConfig& cfg) {
    check_bound(g, cfg.paths, "disjoint paths");
    t.validate(g.n());
    int k = t.k();
    // owner: pair index for terminals and placed path vertices, -1 when free
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) owner[t.pairs[i].first] = owner[t.pairs[i].second] = i;
    PathSystem paths(static_cast<std::size_t>(k));

    // Each path may be taken chordless: shortcutting keeps a solution valid.
    auto clean = [&](int w, int i, int from) {
        for (int x : g.nbrs(w)) {
            if (owner[x] == -1) continue;
            if (owner[x] == i) {
                if (x != from && x != t.pairs[i].second) {
                    for (int p : paths[i])
                        if (p == x) return false;
                }
            } else if (induced) {
                return false;
            }
        }
        return true;
    };

    std::function<bool(int)> solve_pair;
    std::function<bool(int, int)> walk = [&](int i, int u) {
        int target = t.pairs[i].second;
        for (int w : g.nbrs(u)) {
            if (w == target) {
                if (!clean(w, i, u)) continue;
                paths[i].push_back(w);
                if (solve_pair(i + 1)) return true;
                paths[i].pop_back();
                continue;
            }
            if (owner[w] != -1 || !clean(w, i, u)) continue;
            owner[w] = i;
            paths[i].push_back(w);
            if (walk(i, w)) return true;
            paths[i].pop_back();
            owner[w] = -1;
        }
        return false;
    };
    solve_pair = [&](int i) {
        if (i == k) return true;
        int s = t.pairs[i].first;
        if (induced)
            for (int x : g.nbrs(s))
                if (owner[x] != -1 && owner[x] != i) return false;
        paths[i] = {s};
        if (walk(i, s)) return true;
        paths[i].clear();
        return false;
    };
    if (solve_pair(0)) return paths;
    return std::nullopt;
}

std::optional<Hole> oracle_hole_through(const Graph& g, int x, int y, const OracleConfig& cfg) {
    check_bound(g, cfg.hole, "hole");
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw Error("hole endpoints out of range");
    std::vector<int> path{x};
    std::vector<char> on(static_cast<std::size_t>(g.n()), 0);
    on[x] = 1;
    bool has_y = x == y;
    std::function<bool()> rec = [&]() {
        int u = path.back();
        std::size_t len = path.size();
        for (int w : g.nbrs(u)) {
            if (on[w]) continue;
            bool to_x = false, chord = false;
            for (int z : g.nbrs(w)) {
                if (!on[z] || z == u) continue;
                if (z == x) to_x = true;
                else chord = true;
            }
            if (chord) continue;
            bool y_here = has_y || w == y;
            if (to_x) {
                if (len >= 3 && y_here) {
                    path.push_back(w);
                    return true;
                }
                continue;
            }
            on[w] = 1;
            path.push_back(w);
            bool saved = has_y;
            has_y = y_here;
            if (rec()) return true;
            has_y = saved;
            path.pop_back();
            on[w] = 0;
        }
        return false;
    };
    if (rec()) return path;
    return std::nullopt;
}

}  // namespace hfree
