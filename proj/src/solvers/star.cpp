#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "hfree/solvers.hpp"

namespace hfree {

namespace {

const Family& even_h() {
    static const Family f = parse_family("H:even");
    return f;
}

// Star 3-colouring search in BFS order, first vertex of each component fixed to colour 0.
std::optional<Colouring> star3_search(const Graph& g) {
    int n = g.n();
    std::vector<int> order, first;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::size_t head = order.size();
        order.push_back(r);
        first.push_back(r);
        seen[r] = 1;
        while (head < order.size()) {
            int v = order[head++];
            for (int w : g.nbrs(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }
    std::vector<char> is_root(static_cast<std::size_t>(n), 0);
    for (int r : first) is_root[r] = 1;
    Colouring col(static_cast<std::size_t>(n), -1);

    auto clash = [&](int v) {
        int cv = col[v];
        for (int a : g.nbrs(v)) {
            int ca = col[a];
            if (ca < 0) continue;
            if (ca == cv) return true;
            // v-a-b-d
            for (int b : g.nbrs(a)) {
                if (b == v || col[b] != cv) continue;
                for (int d : g.nbrs(b))
                    if (d != a && d != v && col[d] == ca) return true;
            }
            // a-v-b-d
            for (int b : g.nbrs(v)) {
                if (b == a || col[b] != ca) continue;
                for (int d : g.nbrs(b))
                    if (d != v && d != a && col[d] == cv) return true;
            }
        }
        return false;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        int top = is_root[v] ? 1 : 3;
        for (int c = 0; c < top; ++c) {
            col[v] = c;
            if (!clash(v) && rec(i + 1)) return true;
        }
        col[v] = -1;
        return false;
    };
    if (rec(0)) return col;
    return std::nullopt;
}

FamilyHit lift(const FamilyHit& h, const std::vector<int>& comp) {
    FamilyHit out = h;
    for (auto& v : out.emb) v = comp[v];
    return out;
}

int compressed_length(int len) { return len > 12 ? 10 + (len - 10) % 3 : len; }

}  // namespace

Graph compress_threads(const Graph& g) {
    int n = g.n();
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int kept = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) id[v] = kept++;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::map<std::tuple<int, int, int>, int> threads;  // (a, b, length) -> multiplicity
    std::vector<int> cycles;
    for (int v = 0; v < n; ++v) {
        if (id[v] < 0) continue;
        for (int w : g.nbrs(v)) {
            int prev = v, cur = w, len = 1;
            std::vector<int> inner;
            while (id[cur] < 0) {
                inner.push_back(cur);
                int next = g.nbrs(cur)[0] == prev ? g.nbrs(cur)[1] : g.nbrs(cur)[0];
                prev = cur;
                cur = next;
                ++len;
            }
            if (cur < v) continue;
            if (cur == v && (inner.empty() || inner.front() > inner.back())) continue;
            if (inner.empty() && cur == v) continue;
            if (!inner.empty() && used[inner.front()]) continue;
            for (int x : inner) used[x] = 1;
            auto& m = threads[{id[v], id[cur], compressed_length(len)}];
            m = std::min(m + 1, 729);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (id[v] >= 0 || used[v]) continue;
        int prev = -1, cur = v, len = 0;
        do {
            used[cur] = 1;
            int next = g.nbrs(cur)[0] == prev ? g.nbrs(cur)[1] : g.nbrs(cur)[0];
            if (prev == -1) next = g.nbrs(cur)[0];
            prev = cur;
            cur = next;
            ++len;
        } while (cur != v);
        cycles.push_back(compressed_length(len));
    }
    GraphBuilder b(kept);
    for (const auto& [key, mult] : threads) {
        auto [a, c, len] = key;
        for (int i = 0; i < mult; ++i) b.add_path(a, c, len);
    }
    for (int len : cycles) {
        int s = b.add_vertex();
        b.add_path(s, s, len);
    }
    return b.build();
}

Verdict solve_star3col_bipartite(const Graph& g, Promise mode) {
    if (mode == Promise::Verify) {
        if (!is_bipartite(g)) throw Error("input is not bipartite");
        require_free(g, even_h(), "input");
    }
    Verdict v;
    for (const auto& id : {PatternId::of(PatternKind::A), PatternId::theta(2, 4, 3, 6)})
        if (auto e = contains_subgraph(g, id)) {
            v.witness = FamilyHit{id, *e};
            return v;
        }
    v.yes = true;
    return v;
}

Verdict solve_star3col_general(const Graph& g, Promise mode) {
    if (mode == Promise::Verify) require_free(g, even_h(), "input");
    Verdict v;
    Colouring full(static_cast<std::size_t>(g.n()), 0);
    bool have_colouring = true;
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp).g;
        int branch = 0;
        for (int x = 0; x < sub.n(); ++x) branch += sub.degree(x) >= 3;
        if (branch >= 5) {
            for (const auto& id : {PatternId::of(PatternKind::A), PatternId::cycle(5)})
                if (auto e = contains_subgraph(sub, id)) {
                    v.witness = lift(FamilyHit{id, *e}, comp);
                    return v;
                }
            if (auto c4 = find_c4_three_branch(sub)) {
                v.witness = lift(FamilyHit{PatternId::cycle(4), *c4}, comp);
                return v;
            }
            throw CharacterizationViolation("component with " + std::to_string(branch) +
                                            " branch vertices has no obstruction");
        }
        Graph small = compress_threads(sub);
        auto col = star3_search(small);
        if (!col) return v;
        if (small.n() == sub.n() && small.m() == sub.m()) {
            auto direct = star3_search(sub);
            for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = (*direct)[i];
        } else {
            have_colouring = false;
        }
    }
    v.yes = true;
    if (have_colouring) v.colouring = full;
    return v;
}

Colouring greedy_injective_10col(const Graph& g) {
    if (g.max_degree() > 3) throw Error("graph is not subcubic");
    int n = g.n();
    Colouring col(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        unsigned taken = 0;
        for (int w : g.nbrs(v)) {
            if (col[w] >= 0) taken |= 1U << col[w];
            for (int x : g.nbrs(w))
                if (x != v && col[x] >= 0) taken |= 1U << col[x];
        }
        int c = 0;
        while ((taken >> c) & 1U) ++c;
        if (c >= 10) throw Error("greedy colouring ran out of colours");
        col[v] = c;
    }
    return col;
}

}  // namespace hfree
