#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;

// Simple undirected graph on 0..n-1 with sorted adjacency lists. Values are
// never mutated after construction; edits build a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    // Throws on loops, out-of-range endpoints and repeated edges.
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    // Drops loops and merges repeated edges.
    static Graph simplified(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    const std::vector<int>& nbrs(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(nbrs(v).size()); }
    bool adjacent(int u, int v) const;
    int max_degree() const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

// Accumulates edges then freezes them into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}
    int add_vertex() { return n_++; }
    int add_vertices(int k) {
        int first = n_;
        n_ += k;
        return first;
    }
    void add_edge(int u, int v) { edges_.emplace_back(u, v); }
    // Appends a path of `len` edges between u and v; returns its interior.
    std::vector<int> add_path(int u, int v, int len);
    int n() const { return n_; }
    Graph build() const { return Graph::from_edges(n_, edges_); }
    Graph build_simple() const { return Graph::simplified(n_, edges_); }

private:
    int n_;
    std::vector<Edge> edges_;
};

// A derived graph plus the old->new index map (-1 for vertices that vanished).
struct Relabelled {
    Graph g;
    std::vector<int> old_to_new;
};

Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);

Graph k_subdivide(const Graph& g, int k);
// Replaces s by one fresh vertex, placed last in the new numbering.
Relabelled contract_set(const Graph& g, const VertexSet& s);
Relabelled delete_vertices(const Graph& g, const VertexSet& s);
Relabelled induced_subgraph(const Graph& g, const VertexSet& keep);
Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);
Graph disjoint_union(const Graph& a, const Graph& b);

std::optional<int> girth(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool is_two_connected(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int src);

struct Structure {
    bool connected = false;
    bool bipartite = false;
    bool subcubic = false;
    bool two_connected = false;
    VertexSet branch_vertices;
};
Structure structural_queries(const Graph& g);

}  // namespace hfree
