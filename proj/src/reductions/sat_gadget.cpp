#include <algorithm>
#include <set>

#include "hfree/reductions.hpp"

namespace hfree {

namespace {

std::string idx(int i) { return std::to_string(i); }

class GadgetBuilder {
public:
    explicit GadgetBuilder(int ell) : ell_(ell) {}

    int named(const std::string& label) {
        int v = b_.add_vertex();
        layout_.emplace(label, v);
        return v;
    }
    int at(const std::string& label) const { return layout_.at(label); }
    void edge(int u, int v) { b_.add_edge(u, v); }
    void lpath(int u, int v, std::string group = {}) {
        paths_.push_back({u, v, b_.add_path(u, v, ell_), std::move(group)});
    }

    SatGadget finish(int x, int y) {
        SatGadget out;
        out.g = b_.build();
        out.layout = std::move(layout_);
        out.paths = std::move(paths_);
        out.ell = ell_;
        out.x = x;
        out.y = y;
        return out;
    }

private:
    int ell_;
    GraphBuilder b_;
    GadgetLayout layout_;
    std::vector<LongPath> paths_;
};

std::string lit(const std::string& name, int j) { return name + "_" + idx(j); }

}  // namespace

SatGadget gen_2idp_sat(const CnfFormula& f, int ell) {
    if (ell < 5) throw Error("ell must be at least 5");
    if (f.clauses.empty()) throw Error("formula has no clauses");
    int m = static_cast<int>(f.clauses.size());
    int n = f.n;
    GadgetBuilder b(ell);

    // literal gadgets y_1..y_3m
    for (int j = 1; j <= 3 * m; ++j) {
        for (std::string s : {"alpha", "beta"}) {
            b.named(lit(s, j));
            b.named(lit(s + "'", j));
            for (std::string sign : {"+", "-"})
                for (int i = 1; i <= 4; ++i) b.named(lit(s + "^" + idx(i) + sign, j));
        }
        for (std::string s : {"alpha", "beta"})
            for (std::string sign : {"+", "-"}) {
                for (int i = 1; i <= 3; ++i)
                    b.lpath(b.at(lit(s + "^" + idx(i) + sign, j)), b.at(lit(s + "^" + idx(i + 1) + sign, j)));
                b.edge(b.at(lit(s, j)), b.at(lit(s + "^1" + sign, j)));
                b.edge(b.at(lit(s + "^4" + sign, j)), b.at(lit(s + "'", j)));
            }
        b.edge(b.at(lit("alpha^1+", j)), b.at(lit("beta^1-", j)));
        b.edge(b.at(lit("alpha^1-", j)), b.at(lit("beta^1+", j)));
        b.edge(b.at(lit("alpha^4+", j)), b.at(lit("beta^4-", j)));
        b.edge(b.at(lit("alpha^4-", j)), b.at(lit("beta^4+", j)));
    }

    // clause gadgets C_1..C_m
    for (int i = 1; i <= m; ++i) {
        for (std::string sign : {"+", "-"})
            for (std::string part : {"1", "2", "3", "0", "12"}) b.named(lit("c^" + part + sign, i));
        for (std::string sign : {"+", "-"}) {
            auto c = [&](const std::string& part) { return b.at(lit("c^" + part + sign, i)); };
            b.lpath(c("12"), c("1"));
            b.lpath(c("12"), c("2"));
            b.lpath(c("0"), c("12"));
            b.lpath(c("0"), c("3"));
        }
        for (int j = 1; j <= 3; ++j) {
            int k = 3 * (i - 1) + j;
            b.edge(b.at(lit("alpha^2-", k)), b.at(lit("c^" + idx(j) + "+", i)));
            b.edge(b.at(lit("alpha^3-", k)), b.at(lit("c^" + idx(j) + "-", i)));
            b.edge(b.at(lit("beta^2-", k)), b.at(lit("c^" + idx(j) + "+", i)));
            b.edge(b.at(lit("beta^3-", k)), b.at(lit("c^" + idx(j) + "-", i)));
        }
    }

    // variable gadgets: P^+_i serves the occurrences of the negated variable,
    // P^-_i those of the plain variable
    for (int i = 1; i <= n; ++i) {
        int dp = b.named("d^+_" + idx(i));
        int dm = b.named("d^-_" + idx(i));
        for (std::string sign : {"+", "-"}) {
            std::vector<int> occ;
            for (int k = 1; k <= 3 * m; ++k) {
                int l = f.clauses[(k - 1) / 3][(k - 1) % 3];
                bool negated = l < 0;
                if (std::abs(l) == i && negated == (sign == "+")) occ.push_back(k);
            }
            std::string group = "P^" + sign + "_" + idx(i);
            int prev = dp;
            for (std::size_t j = 1; j <= occ.size(); ++j) {
                std::string base = "p^" + sign + "_" + idx(i) + "," ;
                int p1 = b.named(base + idx(static_cast<int>(2 * j - 1)));
                int p2 = b.named(base + idx(static_cast<int>(2 * j)));
                b.lpath(prev, p1, group);
                int k = occ[j - 1];
                b.edge(p1, b.at(lit("alpha^2+", k)));
                b.edge(p1, b.at(lit("beta^2+", k)));
                b.edge(p2, b.at(lit("alpha^3+", k)));
                b.edge(p2, b.at(lit("beta^3+", k)));
                prev = p2;
            }
            b.lpath(prev, dm, group);
        }
    }

    // chains between consecutive gadgets
    for (int j = 1; j < 3 * m; ++j) {
        b.lpath(b.at(lit("alpha'", j)), b.at(lit("alpha", j + 1)));
        b.lpath(b.at(lit("beta'", j)), b.at(lit("beta", j + 1)));
    }
    for (int j = 1; j < m; ++j) b.lpath(b.at(lit("c^0-", j)), b.at(lit("c^0+", j + 1)));
    for (int i = 1; i < n; ++i) b.lpath(b.at("d^-_" + idx(i)), b.at("d^+_" + idx(i + 1)));
    b.lpath(b.at(lit("alpha'", 3 * m)), b.at("d^+_1"));
    b.lpath(b.at(lit("beta'", 3 * m)), b.at(lit("c^0+", 1)));
    int x = b.named("x");
    b.lpath(x, b.at(lit("alpha", 1)));
    b.lpath(x, b.at(lit("beta", 1)));
    int y = b.named("y");
    b.lpath(y, b.at(lit("c^0-", m)));
    b.lpath(y, b.at("d^-_" + idx(n)));
    return b.finish(x, y);
}

HoleBuild build_hole_certificate(const CnfFormula& f, const Assignment& xi, const SatGadget& gad) {
    if (!satisfies(f, xi)) throw Error("assignment does not satisfy the formula");
    int m = static_cast<int>(f.clauses.size());
    const auto& L = gad.layout;
    auto at = [&](const std::string& s) { return L.at(s); };
    auto literal_true = [&](int k) {
        int l = f.clauses[(k - 1) / 3][(k - 1) % 3];
        return (l > 0) == (xi[std::abs(l) - 1] != 0);
    };
    std::set<int> pick{gad.x, gad.y};
    HoleBuild out;
    for (int k = 1; k <= 3 * m; ++k)
        for (std::string s : {"alpha", "beta"}) {
            pick.insert(at(lit(s, k)));
            pick.insert(at(lit(s + "'", k)));
            std::string sign = literal_true(k) ? "+" : "-";
            for (int i = 1; i <= 4; ++i) {
                int v = at(lit(s + "^" + idx(i) + sign, k));
                pick.insert(v);
                out.literal_picks.push_back(v);
            }
        }
    std::set<int> alpha23plus;
    for (int k = 1; k <= 3 * m; ++k) {
        alpha23plus.insert(at(lit("alpha^2+", k)));
        alpha23plus.insert(at(lit("alpha^3+", k)));
    }
    for (int i = 1; i <= f.n; ++i) {
        std::string sign = xi[i - 1] ? "+" : "-";
        int dp = at("d^+_" + idx(i)), dm = at("d^-_" + idx(i));
        pick.insert(dp);
        pick.insert(dm);
        std::vector<int> pv;
        for (int j = 1;; ++j) {
            auto it = L.find("p^" + sign + "_" + idx(i) + "," + idx(j));
            if (it == L.end()) break;
            pv.push_back(it->second);
        }
        for (int v : pv) {
            pick.insert(v);
            for (int w : gad.g.nbrs(v))
                if (alpha23plus.count(w)) {
                    pick.insert(w);
                    out.variable_picks.push_back(w);
                }
        }
    }
    for (int i = 1; i <= m; ++i) {
        pick.insert(at(lit("c^0+", i)));
        pick.insert(at(lit("c^0-", i)));
        int j = 0;
        for (int cand = 3 * i - 2; cand <= 3 * i; ++cand)
            if (literal_true(cand)) {
                j = cand;
                break;
            }
        for (std::string a : {"alpha^2-", "alpha^3-"}) {
            pick.insert(at(lit(a, j)));
            out.clause_picks.push_back(at(lit(a, j)));
        }
        int which = j - 3 * (i - 1);
        if (which <= 2) {
            pick.insert(at(lit("c^12+", i)));
            pick.insert(at(lit("c^12-", i)));
        }
        pick.insert(at(lit("c^" + idx(which) + "+", i)));
        pick.insert(at(lit("c^" + idx(which) + "-", i)));
    }
    std::set<std::string> unused;
    for (int i = 1; i <= f.n; ++i) unused.insert("P^" + std::string(xi[i - 1] ? "-" : "+") + "_" + idx(i));
    for (const auto& p : gad.paths)
        if (pick.count(p.a) && pick.count(p.b) && !unused.count(p.group)) pick.insert(p.inner.begin(), p.inner.end());
    out.hole.assign(pick.begin(), pick.end());
    return out;
}

}  // namespace hfree
