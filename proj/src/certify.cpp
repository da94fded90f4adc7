#include "hfree/certify.hpp"

#include <algorithm>
#include <set>

namespace hfree {

std::vector<int> TerminalSpec::all() const {
    std::vector<int> out;
    for (auto [s, t] : pairs) {
        out.push_back(s);
        out.push_back(t);
    }
    return out;
}

void TerminalSpec::validate(int n) const {
    auto ts = all();
    for (int v : ts)
        if (v < 0 || v >= n) throw Error("terminal " + std::to_string(v) + " out of range");
    std::sort(ts.begin(), ts.end());
    if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) throw Error("terminals are not pairwise distinct");
}

namespace {

void check_total(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.size()) != g.n()) throw Error("colouring is partial");
    for (int x : c)
        if (x < 0) throw Error("colouring is partial");
}

bool few_colours(const Colouring& c, int colours) {
    std::set<int> used(c.begin(), c.end());
    return static_cast<int>(used.size()) <= colours;
}

}  // namespace

bool verify_c5_hom(const Graph& g, const Colouring& c) {
    check_total(g, c);
    for (auto [u, v] : g.edges()) {
        int d = ((c[u] - c[v]) % 5 + 5) % 5;
        if (d != 1 && d != 4) return false;
    }
    return true;
}

bool verify_proper(const Graph& g, const Colouring& c, int colours) {
    check_total(g, c);
    if (!few_colours(c, colours)) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

bool verify_star_colouring(const Graph& g, const Colouring& c, int colours) {
    if (!verify_proper(g, c, colours)) return false;
    // every path a-b-e-d on four vertices, keyed by its middle edge b-e
    for (auto [b, e] : g.edges())
        for (int a : g.nbrs(b)) {
            if (a == e || c[a] != c[e]) continue;
            for (int d : g.nbrs(e))
                if (d != b && d != a && c[d] == c[b]) return false;
        }
    return true;
}

bool verify_distance2(const Graph& g, const Colouring& c, int colours) {
    if (!verify_proper(g, c, colours)) return false;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.nbrs(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (c[nb[i]] == c[nb[j]]) return false;
    }
    return true;
}

bool verify_hamilton(const Graph& g, const HamCycle& h) {
    int n = g.n();
    if (n < 3 || static_cast<int>(h.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : h) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(h[i], h[(i + 1) % n])) return false;
    return true;
}

bool verify_path_system(const Graph& g, const TerminalSpec& t, const PathSystem& p, bool induced) {
    if (static_cast<int>(p.size()) != t.k()) return false;
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < t.k(); ++i) {
        const auto& path = p[i];
        if (path.empty() || path.front() != t.pairs[i].first || path.back() != t.pairs[i].second) return false;
        for (std::size_t j = 0; j < path.size(); ++j) {
            int v = path[j];
            if (v < 0 || v >= g.n() || owner[v] != -1) return false;
            owner[v] = i;
            if (j > 0 && !g.adjacent(path[j - 1], v)) return false;
        }
    }
    if (induced)
        for (auto [u, v] : g.edges())
            if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) return false;
    return true;
}

bool verify_hole(const Graph& g, int x, int y, const Hole& h) {
    if (h.size() < 4) return false;
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : h) {
        if (v < 0 || v >= g.n() || in[v]) return false;
        in[v] = 1;
    }
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n() || !in[x] || !in[y]) return false;
    // induced 2-regular and connected
    for (int v : h) {
        int d = 0;
        for (int w : g.nbrs(v)) d += in[w];
        if (d != 2) return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> stack{h.front()};
    seen[h.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.nbrs(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == h.size();
}

}  // namespace hfree
