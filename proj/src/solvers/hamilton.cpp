#include <algorithm>
#include <numeric>

#include "hfree/solvers.hpp"

namespace hfree {

namespace {

bool tiny_hamiltonian(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // fix vertex 0 first
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % n]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

std::vector<int> common(const Graph& g, int u, int v) {
    std::vector<int> out;
    std::set_intersection(g.nbrs(u).begin(), g.nbrs(u).end(), g.nbrs(v).begin(), g.nbrs(v).end(),
                          std::back_inserter(out));
    return out;
}

std::vector<int> outside(const Graph& g, int p, const std::vector<int>& s) {
    std::vector<int> out;
    for (int w : g.nbrs(p))
        if (std::find(s.begin(), s.end(), w) == s.end()) out.push_back(w);
    return out;
}

enum class Step { Yes, No, Contract };

struct Outcome {
    Step step;
    VertexSet contract;
};

// One round of the case dispatch on a connected, 2-connected graph with
// n >= 6, minimum degree 2 and a branch vertex.
Outcome dispatch(const Graph& g, HamiltonStats* stats) {
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) != 3 || g.degree(v) != 3) continue;
        auto c = common(g, u, v);
        if (c.size() == 2) {
            int p = c[0], q = c[1];
            std::vector<int> s{u, v, p, q};
            auto op = outside(g, p, s), oq = outside(g, q, s);
            if (op.empty() && oq.empty()) return {Step::Yes, {}};
            if (op.empty() != oq.empty()) return {Step::No, {}};
            if (op.size() == 1 && oq.size() == 1 && op[0] != oq[0]) {
                if (stats) ++stats->diamond;
                return {Step::Contract, s};
            }
            continue;
        }
        if (c.size() == 1) {
            int p = c[0];
            if (g.degree(p) <= 3) {
                if (stats) ++stats->bull;
                return {Step::Contract, {u, v, p}};
            }
        }
    }
    throw CaseExhaustion("no diamond or bull configuration applies (n = " + std::to_string(g.n()) + ")");
}

}  // namespace

bool solve_hamilton_h1free(const Graph& input, Promise mode, HamiltonStats* stats) {
    const Family h1 = family_of({PatternId::h(1)});
    if (mode == Promise::Verify) require_free(input, h1, "input");
    Graph g = input;
    while (true) {
        int n = g.n();
        if (n < 3) return false;
        if (!is_connected(g)) return false;
        int min_deg = n, max_deg = 0;
        for (int v = 0; v < n; ++v) {
            min_deg = std::min(min_deg, g.degree(v));
            max_deg = std::max(max_deg, g.degree(v));
        }
        if (min_deg <= 1) return false;
        if (max_deg <= 2) return true;
        if (!is_two_connected(g)) return false;
        if (n <= 5) {
            if (stats) ++stats->base;
            return tiny_hamiltonian(g);
        }
        // a vertex with three degree-2 neighbours would need three cycle edges
        for (int v = 0; v < n; ++v) {
            int twos = 0;
            for (int w : g.nbrs(v)) twos += g.degree(w) == 2;
            if (twos >= 3) return false;
        }
        Outcome o = dispatch(g, stats);
        if (o.step != Step::Contract) return o.step == Step::Yes;
        g = contract_set(g, o.contract).g;
        if (mode == Promise::Verify) require_free(g, h1, "contracted graph");
    }
}

}  // namespace hfree
