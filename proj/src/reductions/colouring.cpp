#include <algorithm>
#include <functional>

#include "hfree/reductions.hpp"

namespace hfree {

Graph reduce_5col_to_c5col(const Graph& g) { return k_subdivide(g, 2); }

Graph reduce_3col_to_star3col(const Graph& g) {
    GraphBuilder b(g.n());
    for (auto [u, v] : g.edges())
        for (int i = 0; i < 3; ++i) {
            int w = b.add_vertex();
            b.add_edge(u, w);
            b.add_edge(w, v);
        }
    return b.build();
}

// ---- star colouring search ----

std::optional<Colouring> extend_star_colouring(const Graph& g, Colouring col, const std::vector<int>& order,
                                               int colours) {
    if (static_cast<int>(col.size()) != g.n()) throw Error("partial colouring has wrong length");
    auto clash = [&](int v) {
        int cv = col[v];
        for (int a : g.nbrs(v)) {
            int ca = col[a];
            if (ca < 0) continue;
            if (ca == cv) return true;
            for (int b : g.nbrs(a)) {
                if (b == v || col[b] != cv) continue;
                for (int d : g.nbrs(b))
                    if (d != a && d != v && col[d] == ca) return true;
            }
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
        if (col[v] >= 0) return rec(i + 1);
        for (int c = 0; c < colours; ++c) {
            col[v] = c;
            if (!clash(v) && rec(i + 1)) return true;
        }
        col[v] = -1;
        return false;
    };
    if (!rec(0)) return std::nullopt;
    for (int c : col)
        if (c < 0) return std::nullopt;
    if (!verify_star_colouring(g, col, colours)) return std::nullopt;
    return col;
}

// ---- girth gadget ----

namespace {

struct VertexGadget {
    std::vector<int> d, e;
    std::array<int, 4> f{};
    std::array<int, 4> ef{};  // e_{3ig}
};

// f1 >= 0 reuses an existing vertex as f_1.
VertexGadget add_vertex_gadget(GraphBuilder& b, GadgetLayout& layout, const std::string& name, int g, int f1) {
    VertexGadget v;
    int len = 12 * g;
    for (int i = 1; i <= len; ++i) {
        v.d.push_back(b.add_vertex());
        v.e.push_back(b.add_vertex());
        layout[name + ".d_" + std::to_string(i)] = v.d.back();
        layout[name + ".e_" + std::to_string(i)] = v.e.back();
        b.add_edge(v.d.back(), v.e.back());
        if (i > 1) b.add_edge(v.d[i - 2], v.d[i - 1]);
    }
    b.add_edge(v.d.back(), v.d.front());
    for (int i = 1; i <= 4; ++i) {
        int fv = (i == 1 && f1 >= 0) ? f1 : b.add_vertex();
        v.f[i - 1] = fv;
        v.ef[i - 1] = v.e[3 * i * g - 1];
        layout[name + ".f_" + std::to_string(i)] = fv;
        b.add_edge(fv, v.ef[i - 1]);
    }
    return v;
}

}  // namespace

GirthGadget gen_bipartite_star_gadget(const Graph& g, int girth_target) {
    if (girth_target < 4 || girth_target % 2 != 0) throw Error("girth target must be even and at least 4");
    if (g.max_degree() > 4) throw Error("input has a vertex of degree above 4");
    GirthGadget out;
    out.param = girth_target;
    GraphBuilder b;
    std::vector<VertexGadget> vg;
    for (int x = 0; x < g.n(); ++x) {
        vg.push_back(add_vertex_gadget(b, out.layout, "V_" + std::to_string(x), out.param, -1));
        out.f.push_back(vg.back().f);
        out.e.push_back(vg.back().ef);
    }
    auto position = [&](int m, int n) {
        const auto& nb = g.nbrs(m);
        return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), n) - nb.begin());
    };
    for (auto [m, n] : g.edges()) {
        int i = position(m, n), j = position(n, m);
        std::string name = "W_" + std::to_string(m) + "-" + std::to_string(n);
        auto w = add_vertex_gadget(b, out.layout, name, out.param + 1, vg[m].f[i]);
        b.add_edge(w.f[1], vg[n].f[j]);
        out.base_edges.emplace_back(m, n);
        out.f2.push_back(w.f);
        out.e2.push_back(w.ef);
    }
    out.g = b.build();
    return out;
}

Colouring build_gadget_star_colouring(const Graph& base, const Colouring& c, const GirthGadget& gad) {
    if (static_cast<int>(c.size()) != base.n()) throw Error("colouring has wrong length");
    for (int x : c)
        if (x < 0 || x > 2) throw Error("colouring uses colours outside 0..2");
    if (!verify_proper(base, c, 3)) throw Error("colouring of the base graph is not proper");
    Colouring col(static_cast<std::size_t>(gad.g.n()), -1);
    for (int x = 0; x < base.n(); ++x)
        for (int i = 0; i < 4; ++i) {
            col[gad.f[x][i]] = c[x];
            col[gad.e[x][i]] = (c[x] + 1) % 3;
        }
    for (std::size_t k = 0; k < gad.base_edges.size(); ++k) {
        int m = gad.base_edges[k].first;
        for (int i = 0; i < 4; ++i) {
            col[gad.f2[k][i]] = c[m];
            col[gad.e2[k][i]] = (c[m] + 1) % 3;
        }
    }
    std::vector<int> order(static_cast<std::size_t>(gad.g.n()));
    for (int v = 0; v < gad.g.n(); ++v) order[v] = v;
    auto out = extend_star_colouring(gad.g, col, order, 3);
    if (!out) throw Error("pre-colouring does not extend to a star 3-colouring");
    return *out;
}

// ---- walks in C5 ----

std::optional<std::vector<int>> c5_walk(int x, int y, int len) {
    if (x < 0 || x > 4 || y < 0 || y > 4) throw Error("C5 vertices are 0..4");
    if (len < 0) return std::nullopt;
    auto run = [&](const std::vector<int>& steps) {
        std::vector<int> w{x};
        for (int s : steps) w.push_back(((w.back() + s) % 5 + 5) % 5);
        return w;
    };
    if (len < 4) {
        std::vector<int> steps;
        std::function<bool(int)> rec = [&](int pos) {
            if (static_cast<int>(steps.size()) == len) return pos == y;
            for (int s : {+1, -1}) {
                steps.push_back(s);
                if (rec(((pos + s) % 5 + 5) % 5)) return true;
                steps.pop_back();
            }
            return false;
        };
        if (rec(x)) return run(steps);
        return std::nullopt;
    }
    int d = ((y - x) % 5 + 5) % 5;
    static const int four[5][4] = {{+1, +1, -1, -1}, {-1, -1, -1, -1}, {-1, +1, +1, +1}, {+1, -1, -1, -1},
                                   {+1, +1, +1, +1}};
    static const int five[5][5] = {{+1, +1, +1, +1, +1}, {+1, +1, -1, -1, +1}, {-1, +1, -1, -1, -1},
                                   {+1, -1, +1, +1, +1}, {-1, -1, +1, +1, -1}};
    std::vector<int> steps;
    int base = (len - 4) % 2 == 0 ? 4 : 5;
    for (int i = 0; i < (len - base) / 2; ++i) {
        steps.push_back(+1);
        steps.push_back(-1);
    }
    if (base == 4) steps.insert(steps.end(), four[d], four[d] + 4);
    else steps.insert(steps.end(), five[d], five[d] + 5);
    return run(steps);
}

// ---- subdivision colourings ----

std::vector<int> subdivision_sequence(int vertices, bool same) {
    if (vertices < 5) throw Error("sequence needs at least 5 vertices");
    std::vector<int> s;
    auto rep = [&](int times) {
        for (int i = 0; i < times; ++i)
            for (int c : {0, 1, 2}) s.push_back(c);
    };
    auto tail = [&](std::initializer_list<int> t) { s.insert(s.end(), t.begin(), t.end()); };
    switch (vertices % 3) {
        case 0:
            if (same) {
                // (012)^j 120 repeats a colour pair; no valid sequence exists on 6 vertices
                if (vertices == 6) throw Error("no same-ends sequence on 6 vertices");
                rep(vertices / 3 - 2);
                tail({0, 1, 0, 2, 1, 0});
            } else {
                rep(vertices / 3);
            }
            break;
        case 1:
            if (same) {
                rep((vertices - 1) / 3);
                tail({0});
            } else {
                rep((vertices - 1) / 3 - 1);
                tail({1, 0, 2, 1});
            }
            break;
        default:
            rep((vertices - 2) / 3);
            if (same) tail({1, 0});
            else tail({0, 1});
            break;
    }
    return s;
}

Colouring star_colour_subdivision(const Graph& g, int k) {
    if (k < 3) throw Error("subdivision count must be at least 3");
    Graph sub = k_subdivide(g, k);
    Colouring col(static_cast<std::size_t>(sub.n()), -1);
    for (int v = 0; v < g.n(); ++v) col[v] = v % 3;
    auto edges = g.edges();
    std::vector<int> open;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        bool same = col[u] == col[v];
        int first = g.n() + static_cast<int>(e) * k;
        if (same && k + 2 == 6) {
            for (int t = 0; t < k; ++t) open.push_back(first + t);
            continue;
        }
        auto seq = subdivision_sequence(k + 2, same);
        // relabel sequence colours so its ends match u and v
        int map[3];
        map[0] = col[u];
        int last = seq.back();
        if (same) {
            map[1] = (col[u] + 1) % 3;
            map[2] = (col[u] + 2) % 3;
        } else {
            map[last] = col[v];
            map[3 - last] = 3 - col[u] - col[v];
        }
        for (int t = 0; t < k; ++t) col[first + t] = map[seq[t + 1]];
    }
    if (open.empty()) return col;
    if (auto out = extend_star_colouring(sub, col, open, 3)) return *out;
    // free every thread and keep only the original vertices fixed
    for (int v = g.n(); v < sub.n(); ++v) col[v] = -1;
    open.clear();
    for (int v = g.n(); v < sub.n(); ++v) open.push_back(v);
    if (auto out = extend_star_colouring(sub, col, open, 3)) return *out;
    throw Error("threads of length 6 between equal colours could not be completed");
}

}  // namespace hfree
