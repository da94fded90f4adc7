#include "hfree/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <functional>

namespace hfree {

namespace {

int to_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string to_string(const PatternId& id) {
    auto s = [](int x) { return std::to_string(x); };
    switch (id.kind) {
        case PatternKind::H: return "H:" + s(id.a);
        case PatternKind::Claw: return "claw";
        case PatternKind::K: return "K:" + s(id.a);
        case PatternKind::C: return "C:" + s(id.a);
        case PatternKind::Kb: return "Kb:" + s(id.a) + "," + s(id.b);
        case PatternKind::Diamond: return "diamond";
        case PatternKind::DiamondPendant: return "diamond-pendant";
        case PatternKind::Bull: return "bull";
        case PatternKind::Bowtie: return "bowtie";
        case PatternKind::A: return "A";
        case PatternKind::E1: return "E1";
        case PatternKind::E2: return "E2";
        case PatternKind::E3: return "E3";
        case PatternKind::Flower: return "flower:" + s(id.a);
        case PatternKind::Racket: return "racket:" + s(id.a);
        case PatternKind::Theta: return "theta:" + s(id.a) + "x" + s(id.b) + "+" + s(id.c) + "x" + s(id.d);
    }
    return "?";
}

PatternId parse_pattern(std::string_view text) {
    auto colon = text.find(':');
    std::string name = lower(text.substr(0, colon));
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw Error("pattern '" + std::string(text) + "' needs a parameter");
    };
    auto no_arg = [&] {
        if (colon != std::string_view::npos) throw Error("pattern '" + name + "' takes no parameter");
    };
    PatternId id;
    if (name == "h") { need_arg(); id = PatternId::h(to_int(arg, "ell")); }
    else if (name == "flower") { need_arg(); id = PatternId::flower(to_int(arg, "petal count")); }
    else if (name == "c") { need_arg(); id = PatternId::cycle(to_int(arg, "cycle length")); }
    else if (name == "k") { need_arg(); id = PatternId::complete(to_int(arg, "clique size")); }
    else if (name == "racket") { need_arg(); id = {PatternKind::Racket, to_int(arg, "path order")}; }
    else if (name == "kb") {
        need_arg();
        auto parts = split(arg, ',');
        if (parts.size() != 2) throw Error("Kb needs 'a,b'");
        id = {PatternKind::Kb, to_int(parts[0], "side"), to_int(parts[1], "side")};
    } else if (name == "theta") {
        need_arg();
        auto terms = split(arg, '+');
        if (terms.size() > 2) throw Error("theta takes at most two terms");
        int vals[4] = {0, 2, 0, 2};
        for (std::size_t t = 0; t < terms.size(); ++t) {
            auto xy = split(terms[t], 'x');
            if (xy.size() != 2) throw Error("theta term must be 'count x order'");
            vals[2 * t] = to_int(xy[0], "path count");
            vals[2 * t + 1] = to_int(xy[1], "path order");
        }
        id = PatternId::theta(vals[0], vals[1], vals[2], vals[3]);
    }
    else if (name == "a") { no_arg(); id = PatternId::of(PatternKind::A); }
    else if (name == "e1") { no_arg(); id = PatternId::of(PatternKind::E1); }
    else if (name == "e2") { no_arg(); id = PatternId::of(PatternKind::E2); }
    else if (name == "e3") { no_arg(); id = PatternId::of(PatternKind::E3); }
    else if (name == "bowtie") { no_arg(); id = PatternId::of(PatternKind::Bowtie); }
    else if (name == "diamond") { no_arg(); id = PatternId::of(PatternKind::Diamond); }
    else if (name == "diamond-pendant") { no_arg(); id = PatternId::of(PatternKind::DiamondPendant); }
    else if (name == "bull") { no_arg(); id = PatternId::of(PatternKind::Bull); }
    else if (name == "claw") { no_arg(); id = PatternId::of(PatternKind::Claw); }
    else throw Error("unknown pattern '" + std::string(text) + "'");
    build_pattern(id);  // validates parameters
    return id;
}

namespace {

void cycle_edges(GraphBuilder& b, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) b.add_edge(vs[i], vs[(i + 1) % vs.size()]);
}

Graph e_graph(PatternKind k) {
    // v1..v5 = 0..4, u2 = 5, u3 = 6, u4 = 7, m = 8
    GraphBuilder b(k == PatternKind::E1 ? 9 : 8);
    cycle_edges(b, {0, 1, 2, 3, 4});
    b.add_edge(0, 5);
    b.add_edge(5, 6);
    b.add_edge(6, 7);
    b.add_edge(7, 4);
    if (k == PatternKind::E1) {
        b.add_edge(2, 8);
        b.add_edge(8, 7);
    } else if (k == PatternKind::E2) {
        b.add_edge(2, 6);
    } else {
        b.add_edge(1, 7);
    }
    return b.build();
}

}  // namespace

Graph build_pattern(const PatternId& id) {
    switch (id.kind) {
        case PatternKind::H: {
            int ell = id.a;
            if (ell < 0) throw Error("H needs ell >= 0");
            if (ell == 0) {
                GraphBuilder b(5);
                for (int i = 1; i <= 4; ++i) b.add_edge(0, i);
                return b.build();
            }
            // a-b-c = 0-1-2, d-e-f = 3-4-5, then b ... e through ell-1 fresh vertices
            GraphBuilder b(6);
            b.add_edge(0, 1);
            b.add_edge(1, 2);
            b.add_edge(3, 4);
            b.add_edge(4, 5);
            b.add_path(1, 4, ell);
            return b.build();
        }
        case PatternKind::Claw: {
            GraphBuilder b(4);
            for (int i = 1; i <= 3; ++i) b.add_edge(0, i);
            return b.build();
        }
        case PatternKind::K: {
            if (id.a < 1) throw Error("K needs r >= 1");
            GraphBuilder b(id.a);
            for (int u = 0; u < id.a; ++u)
                for (int v = u + 1; v < id.a; ++v) b.add_edge(u, v);
            return b.build();
        }
        case PatternKind::C: {
            if (id.a < 3) throw Error("C needs r >= 3");
            GraphBuilder b(id.a);
            std::vector<int> vs(static_cast<std::size_t>(id.a));
            for (int i = 0; i < id.a; ++i) vs[i] = i;
            cycle_edges(b, vs);
            return b.build();
        }
        case PatternKind::Kb: {
            if (id.a < 1 || id.b < 1) throw Error("Kb needs positive sides");
            GraphBuilder b(id.a + id.b);
            for (int u = 0; u < id.a; ++u)
                for (int v = 0; v < id.b; ++v) b.add_edge(u, id.a + v);
            return b.build();
        }
        case PatternKind::Diamond:
        case PatternKind::DiamondPendant: {
            // 0 and 3 are the degree-2 vertices, 1-2 the chord
            GraphBuilder b(id.kind == PatternKind::Diamond ? 4 : 5);
            b.add_edge(0, 1);
            b.add_edge(0, 2);
            b.add_edge(1, 2);
            b.add_edge(1, 3);
            b.add_edge(2, 3);
            if (id.kind == PatternKind::DiamondPendant) b.add_edge(0, 4);
            return b.build();
        }
        case PatternKind::Bull: {
            GraphBuilder b(5);
            cycle_edges(b, {0, 1, 2});
            b.add_edge(1, 3);
            b.add_edge(2, 4);
            return b.build();
        }
        case PatternKind::Bowtie: {
            GraphBuilder b(5);
            cycle_edges(b, {0, 1, 2});
            cycle_edges(b, {0, 3, 4});
            return b.build();
        }
        case PatternKind::A: {
            GraphBuilder b(6);
            cycle_edges(b, {0, 1, 2, 3});
            b.add_edge(0, 4);
            b.add_edge(1, 5);
            return b.build();
        }
        case PatternKind::E1:
        case PatternKind::E2:
        case PatternKind::E3: return e_graph(id.kind);
        case PatternKind::Flower: {
            int n = id.a;
            if (n < 3) throw Error("flower needs n >= 3");
            GraphBuilder b(3 * n + 1);
            std::vector<int> rim(static_cast<std::size_t>(3 * n));
            for (int i = 0; i < 3 * n; ++i) rim[i] = i;
            cycle_edges(b, rim);
            for (int i = 0; i < n; ++i) b.add_edge(3 * n, 3 * i);
            return b.build();
        }
        case PatternKind::Racket: {
            int i = id.a;
            if (i < 1) throw Error("racket needs a path on >= 1 vertex");
            GraphBuilder b(4);
            cycle_edges(b, {0, 1, 2, 3});
            int prev = 0;
            for (int k = 1; k < i; ++k) {
                int w = b.add_vertex();
                b.add_edge(prev, w);
                prev = w;
            }
            return b.build();
        }
        case PatternKind::Theta: {
            int alpha = id.a, i = id.b, beta = id.c, j = id.d;
            if (alpha < 0 || beta < 0 || i < 2 || j < 2) throw Error("theta needs counts >= 0 and orders >= 2");
            if (alpha + beta < 1) throw Error("theta needs at least one path");
            int direct = (i == 2 ? alpha : 0) + (j == 2 ? beta : 0);
            if (direct > 1) throw Error("theta with two order-2 paths is not simple");
            GraphBuilder b(2);
            for (int t = 0; t < alpha; ++t) b.add_path(0, 1, i - 1);
            for (int t = 0; t < beta; ++t) b.add_path(0, 1, j - 1);
            return b.build();
        }
    }
    throw Error("unknown pattern kind");
}

// ---- subgraph search ----

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (static_cast<int>(emb.size()) != pattern.n()) return false;
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    for (int v : emb) {
        if (v < 0 || v >= host.n() || used[v]) return false;
        used[v] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.adjacent(emb[u], emb[v])) return false;
    return true;
}

namespace {

class Matcher {
public:
    Matcher(const Graph& host, const Graph& pat) : h_(host), p_(pat) {
        plan();
        int n = h_.n();
        if (n <= 8192) {
            words_ = (static_cast<std::size_t>(n) + 63) / 64;
            bits_.assign(words_ * static_cast<std::size_t>(n), 0);
            for (int u = 0; u < n; ++u)
                for (int v : h_.nbrs(u)) bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }

    std::optional<Embedding> run() {
        int k = p_.n();
        if (k == 0) return Embedding{};
        if (k > h_.n() || p_.m() > h_.m()) return std::nullopt;
        img_.assign(static_cast<std::size_t>(k), -1);
        used_.assign(static_cast<std::size_t>(h_.n()), 0);
        if (!extend(0)) return std::nullopt;
        Embedding e(static_cast<std::size_t>(k));
        for (int pos = 0; pos < k; ++pos) e[order_[pos]] = img_[pos];
        return e;
    }

private:
    bool adj(int u, int v) const {
        if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
        return h_.adjacent(u, v);
    }

    void plan() {
        int k = p_.n();
        std::vector<int> placed_nbrs(static_cast<std::size_t>(k), 0);
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        std::vector<int> pos_of(static_cast<std::size_t>(k), -1);
        for (int step = 0; step < k; ++step) {
            int best = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v]) continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && p_.degree(v) > p_.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            pos_of[best] = step;
            order_.push_back(best);
            for (int w : p_.nbrs(best)) ++placed_nbrs[w];
        }
        parent_.assign(static_cast<std::size_t>(k), -1);
        back_.assign(static_cast<std::size_t>(k), {});
        for (int pos = 0; pos < k; ++pos) {
            int v = order_[pos];
            for (int w : p_.nbrs(v))
                if (pos_of[w] < pos) back_[pos].push_back(pos_of[w]);
            std::sort(back_[pos].begin(), back_[pos].end());
            if (!back_[pos].empty()) parent_[pos] = back_[pos].front();
        }
    }

    bool fits(int pos, int hv) const {
        if (used_[hv]) return false;
        if (h_.degree(hv) < p_.degree(order_[pos])) return false;
        for (int q : back_[pos])
            if (!adj(img_[q], hv)) return false;
        return true;
    }

    bool extend(int pos) {
        if (pos == p_.n()) return true;
        auto attempt = [&](int hv) {
            if (!fits(pos, hv)) return false;
            img_[pos] = hv;
            used_[hv] = 1;
            if (extend(pos + 1)) return true;
            used_[hv] = 0;
            img_[pos] = -1;
            return false;
        };
        if (parent_[pos] >= 0) {
            for (int hv : h_.nbrs(img_[parent_[pos]]))
                if (attempt(hv)) return true;
        } else {
            for (int hv = 0; hv < h_.n(); ++hv)
                if (attempt(hv)) return true;
        }
        return false;
    }

    const Graph& h_;
    const Graph& p_;
    std::vector<int> order_, parent_;
    std::vector<std::vector<int>> back_;
    std::vector<int> img_;
    std::vector<char> used_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern) {
    return Matcher(host, pattern).run();
}

std::optional<Embedding> find_subgraph_naive(const Graph& host, const Graph& pattern) {
    int k = pattern.n();
    if (k > host.n()) return std::nullopt;
    Embedding emb(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == k) return verify_embedding(host, pattern, emb);
        for (int v = 0; v < host.n(); ++v) {
            if (used[v]) continue;
            used[v] = 1;
            emb[i] = v;
            if (rec(i + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    if (rec(0)) return emb;
    return std::nullopt;
}

std::optional<Embedding> contains_subgraph(const Graph& g, const PatternId& id) {
    return find_subgraph(g, build_pattern(id));
}

// ---- families ----

bool HSelector::matches(int ell) const {
    switch (kind) {
        case Exact: return ell == lo;
        case Range: return ell >= lo && ell <= hi;
        case Residue: return ell >= 1 && ell % mod == residue % mod;
    }
    return false;
}

std::vector<PatternId> Family::instantiate(int n) const {
    std::vector<PatternId> out;
    for (int ell = 0; ell <= n - 5; ++ell) {
        bool hit = std::any_of(h.begin(), h.end(), [&](const HSelector& s) { return s.matches(ell); });
        if (hit) out.push_back(PatternId::h(ell));
    }
    for (const auto& id : fixed)
        if (build_pattern(id).n() <= n) out.push_back(id);
    return out;
}

namespace {

HSelector parse_h_selector(std::string_view s) {
    std::string t = lower(s);
    if (t == "odd") return {HSelector::Residue, 0, 0, 1, 2};
    if (t == "even") return {HSelector::Residue, 0, 0, 0, 2};
    if (auto dots = t.find(".."); dots != std::string::npos) {
        int lo = to_int(std::string_view(t).substr(0, dots), "range start");
        int hi = to_int(std::string_view(t).substr(dots + 2), "range end");
        if (lo < 0 || hi < lo) throw Error("bad H range '" + t + "'");
        return {HSelector::Range, lo, hi};
    }
    if (auto mod = t.find("mod"); mod != std::string::npos) {
        int r = to_int(std::string_view(t).substr(0, mod), "residue");
        int m = to_int(std::string_view(t).substr(mod + 3), "modulus");
        if (m < 1 || r < 0) throw Error("bad residue class '" + t + "'");
        return {HSelector::Residue, 0, 0, r % m, m};
    }
    int ell = to_int(t, "ell");
    if (ell < 0) throw Error("H needs ell >= 0");
    return {HSelector::Exact, ell, ell};
}

bool is_bare_name(std::string_view tok) {
    static const char* names[] = {"a", "e1", "e2", "e3", "bowtie", "diamond", "diamond-pendant", "bull", "claw"};
    std::string t = lower(tok);
    return std::any_of(std::begin(names), std::end(names), [&](const char* n) { return t == n; });
}

}  // namespace

Family parse_family(std::string_view text) {
    Family fam;
    auto toks = split(text, ',');
    // tokens without a name continue the previous parameter list ("H:1mod3,2mod3", "Kb:2,3")
    std::vector<std::string> groups;
    for (auto tok : toks) {
        std::string t(tok);
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
        if (t.empty()) throw Error("empty item in family expression");
        if (t.find(':') == std::string::npos && !is_bare_name(t)) {
            if (groups.empty()) throw Error("family item '" + t + "' has no pattern name");
            groups.back() += "," + t;
        } else {
            groups.push_back(t);
        }
    }
    for (const auto& grp : groups) {
        auto colon = grp.find(':');
        if (colon != std::string::npos && lower(grp.substr(0, colon)) == "h") {
            for (auto part : split(std::string_view(grp).substr(colon + 1), ','))
                fam.h.push_back(parse_h_selector(part));
        } else {
            fam.fixed.push_back(parse_pattern(grp));
        }
    }
    return fam;
}

Family family_of(const std::vector<PatternId>& ids) {
    Family f;
    for (const auto& id : ids) {
        if (id.kind == PatternKind::H)
            f.h.push_back({HSelector::Exact, id.a, id.a});
        else
            f.fixed.push_back(id);
    }
    return f;
}

Family h_family(std::vector<HSelector> sel) {
    Family f;
    f.h = std::move(sel);
    return f;
}

std::optional<FamilyHit> find_family_member(const Graph& g, const std::vector<PatternId>& members) {
    for (const auto& id : members)
        if (auto e = contains_subgraph(g, id)) return FamilyHit{id, *e};
    return std::nullopt;
}

std::optional<FamilyHit> find_family_member(const Graph& g, const Family& f) {
    return find_family_member(g, f.instantiate(g.n()));
}

bool is_family_free(const Graph& g, const Family& f) { return !find_family_member(g, f).has_value(); }

// ---- special detectors ----

std::optional<std::vector<int>> find_c4_three_branch(const Graph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int b : g.nbrs(a)) {
            if (b <= a) continue;
            for (int c : g.nbrs(b)) {
                if (c <= a) continue;
                for (int d : g.nbrs(c)) {
                    if (d <= b || d == a || !g.adjacent(d, a)) continue;
                    int branch = (g.degree(a) >= 3) + (g.degree(b) >= 3) + (g.degree(c) >= 3) + (g.degree(d) >= 3);
                    if (branch >= 3) return std::vector<int>{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

namespace {

bool aux_has_odd_cycle(const Graph& g, int c, std::vector<char>& is_nb) {
    const auto& nb = g.nbrs(c);
    int k = static_cast<int>(nb.size());
    std::vector<int> idx(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) idx[nb[i]] = i;
    std::vector<Edge> seen;
    for (int i = 0; i < k; ++i) {
        int a = nb[i];
        for (int x : g.nbrs(a)) {
            if (x == c) continue;
            for (int y : g.nbrs(x)) {
                if (y == c || y == a) continue;
                for (int b : g.nbrs(y)) {
                    if (!is_nb[b] || b == x || b <= a) continue;
                    seen.emplace_back(i, idx[b]);
                }
            }
        }
    }
    Graph aux_g = Graph::simplified(k, seen);
    return !is_bipartite(aux_g);
}

struct FlowerSearch {
    const Graph& g;
    int c;
    const std::vector<char>& is_nb;
    std::vector<char> used;
    std::vector<int> rim;  // a1 x1 y1 a2 x2 y2 ...
    int a1 = -1;

    bool grow() {
        int a = rim[rim.size() - 1];
        int petals = static_cast<int>(rim.size()) / 3 + 1;  // petal count once this petal closes
        for (int x : g.nbrs(a)) {
            if (x == c || used[x]) continue;
            used[x] = 1;
            for (int y : g.nbrs(x)) {
                if (y == c || used[y]) continue;
                used[y] = 1;
                rim.push_back(x);
                rim.push_back(y);
                if (petals >= 3 && petals % 2 == 1 && g.adjacent(y, a1)) return true;
                for (int b : g.nbrs(y)) {
                    if (!is_nb[b] || used[b] || b <= a1) continue;
                    used[b] = 1;
                    rim.push_back(b);
                    if (grow()) return true;
                    rim.pop_back();
                    used[b] = 0;
                }
                rim.pop_back();
                rim.pop_back();
                used[y] = 0;
            }
            used[x] = 0;
        }
        return false;
    }

    std::optional<FlowerHit> run() {
        used.assign(static_cast<std::size_t>(g.n()), 0);
        used[c] = 1;
        for (int a : g.nbrs(c)) {
            a1 = a;
            used[a] = 1;
            rim = {a};
            if (grow()) {
                FlowerHit hit;
                hit.centre = c;
                hit.petals = static_cast<int>(rim.size()) / 3;
                hit.emb = rim;
                hit.emb.push_back(c);
                return hit;
            }
            used[a] = 0;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<FlowerHit> detect_odd_flower(const Graph& g, FlowerStats* stats) {
    std::vector<char> is_nb(static_cast<std::size_t>(g.n()), 0);
    for (int c = 0; c < g.n(); ++c) {
        if (g.degree(c) < 3) continue;
        for (int w : g.nbrs(c)) is_nb[w] = 1;
        if (stats) ++stats->centres_tested;
        std::optional<FlowerHit> hit;
        if (aux_has_odd_cycle(g, c, is_nb)) {
            if (stats) ++stats->aux_odd;
            hit = FlowerSearch{g, c, is_nb, {}, {}}.run();
            if (!hit && stats) ++stats->aux_odd_no_flower;
        }
        for (int w : g.nbrs(c)) is_nb[w] = 0;
        if (hit) return hit;
    }
    return std::nullopt;
}

std::optional<FlowerHit> find_odd_flower_exhaustive(const Graph& g) {
    for (int n = 3; 3 * n + 1 <= g.n(); n += 2) {
        if (auto e = find_subgraph(g, build_pattern(PatternId::flower(n)))) {
            FlowerHit hit;
            hit.petals = n;
            hit.centre = (*e)[3 * n];
            hit.emb = *e;
            return hit;
        }
    }
    return std::nullopt;
}

bool is_in_class_S(const Graph& g) {
    for (const auto& comp : components(g)) {
        std::size_t deg_sum = 0;
        int high = 0;
        for (int v : comp) {
            deg_sum += static_cast<std::size_t>(g.degree(v));
            if (g.degree(v) > 3) return false;
            if (g.degree(v) == 3) ++high;
        }
        if (deg_sum / 2 != comp.size() - 1) return false;  // must be a tree
        if (high > 1) return false;
    }
    return true;
}

}  // namespace hfree
