#include "hfree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace hfree {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v) throw Error("self-loop at " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error("duplicate edge");
    }
    g.m_ = edges.size();
    return g;
}

Graph Graph::simplified(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> keep;
    keep.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) continue;
        keep.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return from_edges(n, keep);
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = nbrs(u);
    const auto& b = nbrs(v);
    if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
    return std::binary_search(b.begin(), b.end(), u);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : nbrs(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> GraphBuilder::add_path(int u, int v, int len) {
    if (len < 1) throw Error("path length must be positive");
    std::vector<int> inner;
    int prev = u;
    for (int i = 1; i < len; ++i) {
        int w = add_vertex();
        inner.push_back(w);
        add_edge(prev, w);
        prev = w;
    }
    add_edge(prev, v);
    return inner;
}

// ---- text format ----

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        long long val = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), val);
        if (ec != std::errc() || ptr == line.data() + i)
            throw ParseError(line_no, "expected integer near '" + std::string(line.substr(i, 8)) + "'");
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t')
            throw ParseError(line_no, "unexpected character '" + std::string(1, line[i]) + "'");
        out.push_back(val);
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    // trailing blank lines are tolerated
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos)
        lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header 'n m'");

    auto head = parse_ints(lines[0], 1);
    if (head.size() != 2) throw ParseError(1, "header must be 'n m'");
    if (head[0] < 0 || head[1] < 0) throw ParseError(1, "negative count");
    if (head[0] > 50'000'000) throw ParseError(1, "vertex count too large");
    int n = static_cast<int>(head[0]);
    long long m = head[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(static_cast<int>(lines.size()),
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        int ln = static_cast<int>(i) + 1;
        auto nums = parse_ints(lines[i], ln);
        if (nums.size() != 2) throw ParseError(ln, "edge line must be 'u v'");
        for (auto x : nums)
            if (x < 0 || x >= n) throw ParseError(ln, "vertex " + std::to_string(x) + " out of range");
        int u = static_cast<int>(nums[0]);
        int v = static_cast<int>(nums[1]);
        if (u == v) throw ParseError(ln, "self-loop at " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    // duplicate check with line numbers
    std::vector<std::pair<Edge, int>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        keyed.push_back({{std::min(u, v), std::max(u, v)}, static_cast<int>(i) + 2});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw ParseError(std::max(keyed[i].second, keyed[i - 1].second),
                             "duplicate edge " + std::to_string(keyed[i].first.first) + " " +
                                 std::to_string(keyed[i].first.second));
    return Graph::from_edges(n, edges);
}

std::string serialize(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

// ---- edits ----

Graph k_subdivide(const Graph& g, int k) {
    if (k < 0) throw Error("negative subdivision count");
    GraphBuilder b(g.n());
    for (auto [u, v] : g.edges()) b.add_path(u, v, k + 1);
    return b.build();
}

Relabelled contract_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw Error("contract_set: empty set");
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw Error("contract_set: vertex out of range");
        in[v] = 1;
    }
    std::vector<int> map(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!in[v]) map[v] = next++;
    int fresh = next;
    for (int v : s) map[v] = fresh;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(map[u], map[v]);
    return {Graph::simplified(fresh + 1, edges), map};
}

Relabelled delete_vertices(const Graph& g, const VertexSet& s) {
    std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
    for (int v : s)
        if (v >= 0 && v < g.n()) gone[v] = 1;
    std::vector<int> map(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) map[v] = next++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0) edges.emplace_back(map[u], map[v]);
    return {Graph::from_edges(next, edges), map};
}

Relabelled induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : keep) in[v] = 1;
    VertexSet drop;
    for (int v = 0; v < g.n(); ++v)
        if (!in[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

Graph with_edge(const Graph& g, int u, int v) {
    auto e = g.edges();
    e.emplace_back(u, v);
    return Graph::from_edges(g.n(), e);
}

Graph without_edge(const Graph& g, int u, int v) {
    auto e = g.edges();
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::find(e.begin(), e.end(), key);
    if (it == e.end()) throw Error("without_edge: edge not present");
    e.erase(it);
    return Graph::from_edges(g.n(), e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edges(a.n() + b.n(), e);
}

// ---- queries ----

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.nbrs(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(g.n())), par(static_cast<std::size_t>(g.n()));
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        par[s] = -1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[u] + 1 >= best) break;
            for (int w : g.nbrs(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push(w);
                } else if (par[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int w : g.nbrs(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    std::vector<int> col(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.nbrs(u)) {
                if (col[w] < 0) {
                    col[w] = 1 - col[u];
                    stack.push_back(w);
                } else if (col[w] == col[u]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = col;
    return true;
}

std::vector<int> cut_vertices(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> cut(static_cast<std::size_t>(n), 0);
    int timer = 0;
    // iterative DFS: (vertex, parent, next neighbour index)
    struct Frame {
        int v, parent;
        std::size_t idx;
        int children;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> st{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            auto& f = st.back();
            const auto& nb = g.nbrs(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    st.push_back({w, f.v, 0, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (!st.empty()) {
                    auto& p = st.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (p.parent >= 0 && low[done.v] >= disc[p.v]) cut[p.v] = 1;
                } else if (done.children > 1) {
                    cut[done.v] = 1;
                }
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    if (g.n() < 3) return false;
    return is_connected(g) && cut_vertices(g).empty();
}

Structure structural_queries(const Graph& g) {
    Structure s;
    s.connected = is_connected(g);
    s.bipartite = is_bipartite(g);
    s.subcubic = g.max_degree() <= 3;
    s.two_connected = is_two_connected(g);
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 3) s.branch_vertices.push_back(v);
    return s;
}

}  // namespace hfree
