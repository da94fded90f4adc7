#include <algorithm>
#include <functional>

#include "hfree/solvers.hpp"

namespace hfree {

// ---- exhaustive k-Disjoint Paths ----

std::optional<PathSystem> k_disjoint_paths(const Graph& g, const TerminalSpec& t) {
    t.validate(g.n());
    int k = t.k();
    std::vector<int> mark(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) mark[t.pairs[i].first] = mark[t.pairs[i].second] = i;
    PathSystem out(static_cast<std::size_t>(k));
    std::vector<int> depth(static_cast<std::size_t>(g.n()), -1);  // position on the current path

    std::function<bool(int)> pair;
    std::function<bool(int, int)> dfs = [&](int i, int u) {
        int goal = t.pairs[i].second;
        if (g.adjacent(u, goal)) {
            out[i].push_back(goal);
            if (pair(i + 1)) return true;
            out[i].pop_back();
            return false;  // a detour would only shortcut back here
        }
        for (int w : g.nbrs(u)) {
            if (mark[w] != -1) continue;
            // keep paths chordless
            bool chord = false;
            for (int z : g.nbrs(w))
                if (z != u && depth[z] >= 0 && mark[z] == i) chord = true;
            if (chord) continue;
            mark[w] = i;
            depth[w] = static_cast<int>(out[i].size());
            out[i].push_back(w);
            if (dfs(i, w)) return true;
            out[i].pop_back();
            depth[w] = -1;
            mark[w] = -1;
        }
        return false;
    };
    pair = [&](int i) {
        if (i == k) return true;
        int s = t.pairs[i].first;
        out[i] = {s};
        depth[s] = 0;
        if (dfs(i, s)) return true;
        depth[s] = -1;
        out[i].clear();
        return false;
    };
    if (pair(0)) return out;
    return std::nullopt;
}

namespace {

bool terminals_touch(const Graph& g, const TerminalSpec& t) {
    for (int i = 0; i < t.k(); ++i)
        for (int j = i + 1; j < t.k(); ++j)
            for (int a : {t.pairs[i].first, t.pairs[i].second})
                for (int b : {t.pairs[j].first, t.pairs[j].second})
                    if (g.adjacent(a, b)) return true;
    return false;
}

// Fixed vertices of one pair plus the vertices its choice removes.
struct PairChoice {
    std::vector<int> fixed;
    std::vector<int> removed;
    bool open = false;     // path continues between `ends`
    std::pair<int, int> ends{-1, -1};
};

// Combines one choice per pair; returns the reduced graph and open pairs, or
// nothing when the choices clash.
std::optional<Branch> combine(const Graph& g, const std::vector<const PairChoice*>& picks) {
    int n = g.n();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < picks.size(); ++i)
        for (int v : picks[i]->fixed) {
            if (owner[v] != -1) return std::nullopt;
            owner[v] = static_cast<int>(i);
        }
    for (std::size_t i = 0; i < picks.size(); ++i)
        for (int v : picks[i]->fixed)
            for (int w : g.nbrs(v))
                if (owner[w] != -1 && owner[w] != static_cast<int>(i)) return std::nullopt;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (const auto* p : picks)
        for (int v : p->removed) {
            if (owner[v] != -1) return std::nullopt;
            gone[v] = 1;
        }
    VertexSet del;
    for (int v = 0; v < n; ++v)
        if (gone[v]) del.push_back(v);
    for (const auto* p : picks)
        if (!p->open)
            for (int v : p->fixed) del.push_back(v);
    auto r = delete_vertices(g, del);
    Branch b{std::move(r.g), {}};
    for (const auto* p : picks)
        if (p->open) b.t.pairs.emplace_back(r.old_to_new[p->ends.first], r.old_to_new[p->ends.second]);
    return b;
}

void for_each_combination(const std::vector<std::vector<PairChoice>>& opts,
                          const std::function<bool(const std::vector<const PairChoice*>&)>& visit) {
    std::vector<const PairChoice*> picks(opts.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == opts.size()) return visit(picks);
        for (const auto& c : opts[i]) {
            picks[i] = &c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    rec(0);
}

std::vector<int> nbhd_minus(const Graph& g, const std::vector<int>& of, const std::vector<int>& keep) {
    std::vector<int> out;
    for (int v : of)
        for (int w : g.nbrs(v))
            if (std::find(keep.begin(), keep.end(), w) == keep.end()) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

// ---- H1-free ----

bool solve_kidp_h1free(const Graph& g, const TerminalSpec& t, Promise mode) {
    t.validate(g.n());
    if (mode == Promise::Verify) require_free(g, family_of({PatternId::h(1)}), "input");
    int k = t.k();
    if (k == 0) return true;
    if (terminals_touch(g, t)) return false;
    if (k == 1) {
        auto d = bfs_distances(g, t.pairs[0].first);
        return d[t.pairs[0].second] >= 0;
    }
    std::vector<std::vector<PairChoice>> opts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto [s, e] = t.pairs[i];
        auto& o = opts[i];
        if (g.adjacent(s, e)) {
            o.push_back({{s, e}, nbhd_minus(g, {s, e}, {s, e}), false, {}});
            continue;
        }
        for (int m : g.nbrs(s))
            if (g.adjacent(m, e)) o.push_back({{s, m, e}, nbhd_minus(g, {s, m, e}, {s, m, e}), false, {}});
        for (int a : g.nbrs(s)) {
            if (g.adjacent(a, e)) continue;
            for (int b : g.nbrs(e)) {
                if (b == a || g.adjacent(b, s)) continue;
                PairChoice c;
                c.fixed = {s, a, b, e};
                c.removed = nbhd_minus(g, {s, e}, c.fixed);
                c.open = true;
                c.ends = {a, b};
                o.push_back(std::move(c));
            }
        }
    }
    bool found = false;
    for_each_combination(opts, [&](const std::vector<const PairChoice*>& picks) {
        auto b = combine(g, picks);
        if (!b) return false;
        // the guessed neighbours stand in for the removed terminals
        if (b->t.k() == 0 || k_disjoint_paths(b->g, b->t)) found = true;
        return found;
    });
    return found;
}

// ---- H2-free ----

namespace {

// Chordless paths from s of exactly `len` edges avoiding `avoid`.
void chordless_paths(const Graph& g, int s, int len, const std::vector<char>& avoid,
                     const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> path{s};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(path.size()) == len + 1) {
            emit(path);
            return;
        }
        int u = path.back();
        for (int w : g.nbrs(u)) {
            if (avoid[w] || std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool chord = false;
            for (std::size_t j = 0; j + 1 < path.size(); ++j)
                if (g.adjacent(w, path[j])) chord = true;
            if (chord) continue;
            path.push_back(w);
            rec();
            path.pop_back();
        }
    };
    rec();
}

}  // namespace

std::vector<Branch> preprocess_kidp_h2(const Graph& g, const TerminalSpec& t) {
    t.validate(g.n());
    int k = t.k();
    std::vector<Branch> out;
    if (k == 0) {
        out.push_back({g, t});
        return out;
    }
    if (terminals_touch(g, t)) return out;
    std::vector<std::vector<PairChoice>> opts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto [s, e] = t.pairs[i];
        std::vector<char> avoid(static_cast<std::size_t>(g.n()), 0);
        for (int j = 0; j < k; ++j)
            if (j != i) avoid[t.pairs[j].first] = avoid[t.pairs[j].second] = 1;
        // short paths are fixed outright
        for (int len = 1; len <= 6; ++len) {
            std::vector<char> av = avoid;
            chordless_paths(g, s, len, av, [&](const std::vector<int>& p) {
                if (p.back() != e) return;
                for (std::size_t j = 1; j + 1 < p.size(); ++j)
                    if (p[j] == e) return;
                opts[i].push_back({p, nbhd_minus(g, p, p), false, {}});
            });
        }
        // long paths: fix three steps from each end
        std::vector<char> av = avoid;
        av[e] = 1;
        std::vector<std::vector<int>> pre, suf;
        chordless_paths(g, s, 3, av, [&](const std::vector<int>& p) { pre.push_back(p); });
        av[e] = 0;
        av[s] = 1;
        chordless_paths(g, e, 3, av, [&](const std::vector<int>& p) { suf.push_back(p); });
        for (const auto& a : pre)
            for (const auto& b : suf) {
                bool ok = true;
                for (int x = 0; x < 4 && ok; ++x)
                    for (int y = 0; y < 4 && ok; ++y) {
                        if (a[x] == b[y]) ok = false;
                        else if (g.adjacent(a[x], b[y]) && !(x == 3 && y == 3)) ok = false;
                    }
                if (!ok) continue;
                PairChoice c;
                c.fixed = {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
                c.removed = nbhd_minus(g, {a[0], a[1], a[2], b[0], b[1], b[2]}, c.fixed);
                c.open = true;
                c.ends = {s, e};
                opts[i].push_back(std::move(c));
            }
    }
    for_each_combination(opts, [&](const std::vector<const PairChoice*>& picks) {
        if (auto b = combine(g, picks)) out.push_back(std::move(*b));
        return false;
    });
    return out;
}

std::optional<ConflictSite> find_conflict(const Graph& g, const PathSystem& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t a = 1; a + 1 < p[i].size(); ++a)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                for (std::size_t b = 1; b + 1 < p[j].size(); ++b)
                    if (g.adjacent(p[i][a], p[j][b]))
                        return ConflictSite{p[i][a], p[j][b], p[i][a - 1], p[i][a + 1], p[j][b - 1], p[j][b + 1]};
    return std::nullopt;
}

MergeResult apply_merge_rule(const Graph& g, const ConflictSite& c) {
    std::vector<int> s{c.z1, c.x1, c.z3, c.z2, c.x2, c.z4};
    for (int v : s)
        if (v < 0 || v >= g.n()) throw Error("conflict site vertex out of range");
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("conflict site vertices are not distinct");
    if (!g.adjacent(c.x1, c.x2) || !g.adjacent(c.x1, c.z1) || !g.adjacent(c.x1, c.z3) || !g.adjacent(c.x2, c.z2) ||
        !g.adjacent(c.x2, c.z4))
        throw Error("conflict site edges missing");
    for (int z : {c.z1, c.z3, c.z2, c.z4}) {
        int out = 0;
        for (int w : g.nbrs(z)) out += std::find(s.begin(), s.end(), w) == s.end();
        if (out > 1)
            throw Error("conflict site: vertex " + std::to_string(z) + " has more than one neighbour outside the site");
    }
    bool cross = false;
    for (int a : {c.z1, c.z3})
        for (int b : {c.z2, c.z4}) cross = cross || g.adjacent(a, b);
    return {contract_set(g, {c.x1, c.x2}), cross ? MergeRule::Rule2 : MergeRule::Rule1};
}

bool solve_kidp_h2free(const Graph& g, const TerminalSpec& t, Promise mode, H2Stats* stats) {
    t.validate(g.n());
    const Family h2 = family_of({PatternId::h(2)});
    if (mode == Promise::Verify) require_free(g, h2, "input");
    for (auto& br : preprocess_kidp_h2(g, t)) {
        if (stats) ++stats->branches;
        Graph cur = br.g;
        TerminalSpec ts = br.t;
        while (true) {
            if (ts.k() == 0) return true;
            auto sol = k_disjoint_paths(cur, ts);
            if (!sol) break;
            if (verify_path_system(cur, ts, *sol, true)) return true;
            auto site = find_conflict(cur, *sol);
            if (!site) throw Error("paths touch but no interior conflict was located");
            auto m = apply_merge_rule(cur, *site);
            if (stats) ++stats->merges;
            for (auto& [a, b] : ts.pairs) {
                a = m.r.old_to_new[a];
                b = m.r.old_to_new[b];
            }
            cur = std::move(m.r.g);
            if (mode == Promise::Verify) require_free(cur, h2, "merged graph");
        }
    }
    return false;
}

}  // namespace hfree
