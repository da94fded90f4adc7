#include <algorithm>
#include <random>
#include <sstream>

#include "hfree/reductions.hpp"

namespace hfree {

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool header = false;
    long declared = 0;
    std::vector<int> cur;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        if (line[first] == '%') break;
        std::istringstream ls(line);
        if (line[first] == 'p') {
            std::string p, kind;
            long n = -1;
            if (header) throw ParseError(line_no, "second problem line");
            if (!(ls >> p >> kind >> n >> declared) || kind != "cnf" || n < 0 || declared < 0)
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing text after header");
            f.n = static_cast<int>(n);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
        std::string tok;
        while (ls >> tok) {
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad literal '" + tok + "'");
            }
            if (lit == 0) {
                if (cur.size() != 3)
                    throw ParseError(line_no, "clause width " + std::to_string(cur.size()) + ", expected 3");
                f.clauses.push_back({cur[0], cur[1], cur[2]});
                cur.clear();
                continue;
            }
            if (std::abs(lit) > f.n) throw ParseError(line_no, "variable " + std::to_string(std::abs(lit)) + " out of range");
            cur.push_back(lit);
        }
    }
    if (!header) throw Error("missing 'p cnf' header");
    if (!cur.empty()) throw Error("last clause is not terminated by 0");
    if (static_cast<long>(f.clauses.size()) != declared)
        throw Error("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

bool satisfies(const CnfFormula& f, const Assignment& xi) {
    if (static_cast<int>(xi.size()) != f.n) throw Error("assignment has wrong length");
    for (const auto& c : f.clauses) {
        bool ok = false;
        for (int lit : c) ok = ok || ((lit > 0) == (xi[std::abs(lit) - 1] != 0));
        if (!ok) return false;
    }
    return true;
}

std::optional<Assignment> solve_sat(const CnfFormula& f) {
    if (f.n > 20) throw Error("brute-force SAT limited to 20 variables");
    Assignment xi(static_cast<std::size_t>(f.n), 0);
    for (std::uint32_t bits = 0; bits < (1U << f.n); ++bits) {
        for (int i = 0; i < f.n; ++i) xi[i] = (bits >> i) & 1U;
        if (satisfies(f, xi)) return xi;
    }
    return std::nullopt;
}

Graph gen_random_free(int n, double edge_prob, const Family& family, std::uint64_t seed) {
    if (n < 0) throw Error("vertex count must be non-negative");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(edge_prob, 0.0, 1.0));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return repair_free(Graph::from_edges(n, edges), family);
}

Graph repair_free(Graph g, const Family& family) {
    int n = g.n();
    while (auto hit = find_family_member(g, family)) {
        Graph pat = build_pattern(hit->id);
        Edge first{n, n};
        for (auto [a, b] : pat.edges()) {
            Edge e = std::minmax(hit->emb[a], hit->emb[b]);
            first = std::min(first, e);
        }
        g = without_edge(g, first.first, first.second);
    }
    return g;
}

}  // namespace hfree
