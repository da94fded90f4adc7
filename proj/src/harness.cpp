#include "hfree/harness.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "hfree/oracles.hpp"
#include "hfree/reductions.hpp"

#ifdef HFREE_HAVE_OPENMP
#include <omp.h>
#endif

namespace hfree {

namespace {

const std::map<std::string, Problem>& problem_names() {
    static const std::map<std::string, Problem> m{
        {"c5col-h3", Problem::C5ColH3}, {"hamilton-h1", Problem::HamiltonH1}, {"kidp-h1", Problem::KidpH1},
        {"kidp-h2", Problem::KidpH2},   {"star3-bip", Problem::Star3Bip},     {"star3", Problem::Star3},
        {"star10-subcubic", Problem::Star10Subcubic}};
    return m;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Graph random_gnp(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Hamilton cycle on a random vertex order plus a few chords.
Graph random_cycle_chords(Rng& rng, int n, int chords) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(std::minmax(perm[i], perm[(i + 1) % n]));
    for (int c = 0; c < chords; ++c) {
        int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
        if (u != v) edges.push_back(std::minmax(u, v));
    }
    return Graph::simplified(n, edges);
}

Graph largest_component(const Graph& g) {
    auto comps = components(g);
    if (comps.empty()) return g;
    auto best = std::max_element(comps.begin(), comps.end(),
                                 [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return induced_subgraph(g, *best).g;
}

Graph random_subcubic(Rng& rng, int n) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    int tries = uniform_int(rng, n / 2, 2 * n);
    for (int i = 0; i < tries; ++i) {
        int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
        if (u == v || deg[u] == 3 || deg[v] == 3) continue;
        Edge e = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        ++deg[u];
        ++deg[v];
    }
    return Graph::from_edges(n, edges);
}

TerminalSpec random_terminals(Rng& rng, int n, int k) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);
    TerminalSpec t;
    for (int i = 0; i < k; ++i) t.pairs.emplace_back(v[2 * i], v[2 * i + 1]);
    return t;
}

const Family& fam_h1() {
    static const Family f = family_of({PatternId::h(1)});
    return f;
}
const Family& fam_h2() {
    static const Family f = family_of({PatternId::h(2)});
    return f;
}
const Family& fam_h3() {
    static const Family f = family_of({PatternId::h(3)});
    return f;
}
const Family& fam_even() {
    static const Family f = parse_family("H:even");
    return f;
}

struct Outcome {
    bool agree = false;
    bool yes = false;
    bool exhaustion = false;
    bool violation = false;
    std::string what;
};

std::string yn(bool b) { return b ? "YES" : "NO"; }

bool witness_ok(const Graph& g, const std::optional<FamilyHit>& w) {
    return w && verify_embedding(g, build_pattern(w->id), w->emb);
}

Outcome run_trial(Problem p, const Instance& in) {
    Outcome o;
    const Graph& g = in.g;
    try {
        switch (p) {
            case Problem::C5ColH3: {
                bool truth = oracle_c5_colouring(g).has_value();
                auto v = solve_c5col_h3free(g, Promise::Trust);
                o.yes = truth;
                o.agree = v.yes == truth && (v.yes || witness_ok(g, v.witness));
                if (!o.agree) o.what = "solver " + yn(v.yes) + ", oracle " + yn(truth);
                break;
            }
            case Problem::HamiltonH1: {
                auto cyc = oracle_hamilton(g);
                if (cyc && !verify_hamilton(g, *cyc)) throw Error("oracle Hamilton cycle fails verification");
                bool got = solve_hamilton_h1free(g, Promise::Verify);
                o.yes = cyc.has_value();
                o.agree = got == o.yes;
                if (!o.agree) o.what = "solver " + yn(got) + ", oracle " + yn(o.yes);
                break;
            }
            case Problem::KidpH1:
            case Problem::KidpH2: {
                auto ps = oracle_disjoint_paths(g, in.t, true);
                if (ps && !verify_path_system(g, in.t, *ps, true)) throw Error("oracle path system fails verification");
                bool got = p == Problem::KidpH1 ? solve_kidp_h1free(g, in.t, Promise::Verify)
                                                : solve_kidp_h2free(g, in.t, Promise::Verify);
                o.yes = ps.has_value();
                o.agree = got == o.yes;
                if (!o.agree) o.what = "solver " + yn(got) + ", oracle " + yn(o.yes);
                break;
            }
            case Problem::Star3Bip:
            case Problem::Star3: {
                auto col = oracle_star3col(g);
                if (col && !verify_star_colouring(g, *col, 3)) throw Error("oracle colouring fails verification");
                auto v = p == Problem::Star3Bip ? solve_star3col_bipartite(g, Promise::Verify)
                                                : solve_star3col_general(g, Promise::Verify);
                o.yes = col.has_value();
                // the general solver decides few-branch components by search, without a witness
                bool cert = v.yes ? (!v.colouring || verify_star_colouring(g, *v.colouring, 3))
                                  : (witness_ok(g, v.witness) || (p == Problem::Star3 && !v.witness));
                o.agree = v.yes == o.yes && cert;
                if (!o.agree) o.what = "solver " + yn(v.yes) + ", oracle " + yn(o.yes) + (cert ? "" : ", bad certificate");
                break;
            }
            case Problem::Star10Subcubic: {
                auto c = greedy_injective_10col(g);
                o.yes = true;
                o.agree = verify_distance2(g, c, 10) && verify_star_colouring(g, c, 10);
                if (!o.agree) o.what = "colouring fails verification";
                break;
            }
        }
    } catch (const CaseExhaustion& e) {
        o.exhaustion = true;
        o.what = std::string("case exhaustion: ") + e.what();
    } catch (const CharacterizationViolation& e) {
        o.violation = true;
        o.what = std::string("characterization violation: ") + e.what();
    } catch (const PromiseViolation& e) {
        o.violation = true;
        o.what = std::string("promise violation: ") + e.what();
    } catch (const std::exception& e) {
        o.what = std::string("error: ") + e.what();
    }
    return o;
}

}  // namespace

Problem parse_problem(const std::string& name) {
    auto it = problem_names().find(name);
    if (it == problem_names().end()) throw Error("unknown problem '" + name + "'");
    return it->second;
}

std::string to_string(Problem p) {
    for (const auto& [name, q] : problem_names())
        if (q == p) return name;
    return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) { return splitmix(splitmix(seed) ^ splitmix(i + 1)); }

Instance random_instance(Problem p, int size, std::uint64_t seed) {
    Rng rng(seed);
    Instance in;
    switch (p) {
        case Problem::C5ColH3: {
            int n = uniform_int(rng, std::min(3, size), size);
            in.g = repair_free(random_gnp(rng, n, uniform_real(rng, 0.15, 0.6)), fam_h3());
            break;
        }
        case Problem::HamiltonH1: {
            if (size < 3) throw Error("hamilton instances need size >= 3");
            do {
                int n = uniform_int(rng, 3, size);
                Graph start = uniform_int(rng, 0, 1) ? random_cycle_chords(rng, n, uniform_int(rng, 0, n))
                                                     : random_gnp(rng, n, uniform_real(rng, 0.2, 0.6));
                in.g = largest_component(repair_free(start, fam_h1()));
            } while (in.g.n() < 3);
            break;
        }
        case Problem::KidpH1:
        case Problem::KidpH2: {
            if (size < 4) throw Error("two terminal pairs need size >= 4");
            int n = uniform_int(rng, 4, size);
            const Family& f = p == Problem::KidpH1 ? fam_h1() : fam_h2();
            if (uniform_int(rng, 0, 1)) {
                in.g = repair_free(random_gnp(rng, n, uniform_real(rng, 0.1, 0.4)), f);
                in.t = random_terminals(rng, n, 2);
                break;
            }
            // planted: two vertex-disjoint paths over a random order, then noise
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            int len1 = uniform_int(rng, 2, n - 2);
            int len2 = uniform_int(rng, 2, n - len1);
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < len1; ++i) edges.push_back(std::minmax(perm[i], perm[i + 1]));
            for (int i = len1; i + 1 < len1 + len2; ++i) edges.push_back(std::minmax(perm[i], perm[i + 1]));
            std::bernoulli_distribution noise(uniform_real(rng, 0.05, 0.3));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (noise(rng)) edges.emplace_back(u, v);
            in.g = repair_free(Graph::simplified(n, edges), f);
            in.t.pairs = {{perm[0], perm[len1 - 1]}, {perm[len1], perm[len1 + len2 - 1]}};
            break;
        }
        case Problem::Star3Bip: {
            int n = uniform_int(rng, std::min(2, size), size);
            std::vector<int> side(static_cast<std::size_t>(n));
            for (int& s : side) s = uniform_int(rng, 0, 1);
            std::bernoulli_distribution coin(uniform_real(rng, 0.2, 0.7));
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (side[u] != side[v] && coin(rng)) edges.emplace_back(u, v);
            in.g = repair_free(Graph::from_edges(n, edges), fam_even());
            break;
        }
        case Problem::Star3: {
            int n = uniform_int(rng, std::min(2, size), size);
            in.g = repair_free(random_gnp(rng, n, uniform_real(rng, 0.1, 0.5)), fam_even());
            break;
        }
        case Problem::Star10Subcubic:
            in.g = random_subcubic(rng, uniform_int(rng, std::min(1, size), size));
            break;
    }
    return in;
}

HarnessReport run_harness(Problem p, std::size_t trials, int size, std::uint64_t seed, bool parallel) {
    if (size < 1) throw Error("instance size must be positive");
    std::vector<Instance> inst(trials);
    std::vector<Outcome> out(trials);
    long long count = static_cast<long long>(trials);
#ifdef HFREE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < count; ++i) {
        try {
            inst[i] = random_instance(p, size, trial_seed(seed, static_cast<std::uint64_t>(i)));
            out[i] = run_trial(p, inst[i]);
        } catch (const std::exception& e) {
            out[i].what = std::string("error: ") + e.what();
        }
    }
    (void)parallel;
    HarnessReport r;
    r.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto& o = out[i];
        if (o.agree) {
            ++r.agree;
            r.yes += o.yes;
            continue;
        }
        r.case_exhaustion += o.exhaustion;
        r.violations += o.violation;
        r.mismatches.push_back({i, o.what, std::move(inst[i])});
    }
    return r;
}

// ---- sweeps ----

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

ReductionSweep sweep_reductions(int max_n, bool parallel) {
    if (max_n > 6) throw Error("reduction sweep limited to 6 vertices");
    const OracleConfig cfg = OracleConfig::uniform(max_n + 3 * max_n * (max_n - 1) / 2);
    ReductionSweep s;
    for (int n = 1; n <= max_n; ++n) {
        long long total = 1LL << (n * (n - 1) / 2);
        std::size_t c5_bad = 0, star_bad = 0, five = 0, three = 0;
#ifdef HFREE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : c5_bad, star_bad, five, three) if (parallel)
#endif
        for (long long mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            bool k5 = oracle_k_colouring(g, 5, cfg).has_value();
            Graph sub = reduce_5col_to_c5col(g);
            auto c5 = oracle_c5_colouring(sub, cfg);
            if (c5 && !verify_c5_hom(sub, *c5)) ++c5_bad;
            else if (k5 != c5.has_value()) ++c5_bad;
            bool k3 = oracle_k_colouring(g, 3, cfg).has_value();
            Graph rep = reduce_3col_to_star3col(g);
            auto st = oracle_star3col(rep, cfg);
            if (st && !verify_star_colouring(rep, *st, 3)) ++star_bad;
            else if (k3 != st.has_value()) ++star_bad;
            five += k5;
            three += k3;
        }
        s.graphs += static_cast<std::size_t>(total);
        s.c5_mismatch += c5_bad;
        s.star_mismatch += star_bad;
        s.five_colourable += five;
        s.three_colourable += three;
    }
    (void)parallel;
    return s;
}

namespace {

bool is_k3_or_flower(const Graph& g) {
    if (g.n() == 3 && g.m() == 3) return true;
    if (g.n() < 4 || (g.n() - 1) % 3 != 0) return false;
    Graph f = build_pattern(PatternId::flower((g.n() - 1) / 3));
    return f.m() == g.m() && find_subgraph(g, f).has_value();
}

}  // namespace

CriticalSweep sweep_c5_critical(int max_n, bool parallel) {
    if (max_n > 8) throw Error("criticality sweep limited to 8 vertices");
    CriticalSweep s;
    for (int n = 1; n <= max_n; ++n) {
        long long total = 1LL << (n * (n - 1) / 2);
        std::size_t graphs = 0, critical = 0, bad = 0;
        std::vector<Graph> found;
#ifdef HFREE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : graphs, critical, bad) if (parallel)
#endif
        for (long long mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            if (!is_connected(g)) continue;
            ++graphs;
            if (!oracle_c5_critical(g) || !is_family_free(g, fam_h3())) continue;
            ++critical;
            if (is_k3_or_flower(g)) continue;
            ++bad;
#ifdef HFREE_HAVE_OPENMP
#pragma omp critical
#endif
            found.push_back(g);
        }
        s.graphs += graphs;
        s.critical += critical;
        s.counterexamples += bad;
        for (auto& g : found)
            if (s.examples.size() < 10) s.examples.push_back(std::move(g));
    }
    (void)parallel;
    return s;
}

// ---- merge-rule instances ----

std::optional<ConflictInstance> make_conflict_instance(std::uint64_t seed) {
    Rng rng(seed);
    GraphBuilder b;
    // s1 .. z1 x1 z3 .. t1 and s2 .. z2 x2 z4 .. t2, terminals of degree 1
    int budget = 2;
    auto leg = [&](int from) {
        int cur = from;
        if (budget > 0 && uniform_int(rng, 0, 3) == 0) {
            --budget;
            int a = b.add_vertex();
            b.add_edge(cur, a);
            cur = a;
        }
        return cur;
    };
    int s1 = b.add_vertex(), t1 = b.add_vertex(), s2 = b.add_vertex(), t2 = b.add_vertex();
    ConflictSite c;
    c.z1 = b.add_vertex();
    c.x1 = b.add_vertex();
    c.z3 = b.add_vertex();
    c.z2 = b.add_vertex();
    c.x2 = b.add_vertex();
    c.z4 = b.add_vertex();
    b.add_edge(leg(s1), c.z1);
    b.add_edge(leg(t1), c.z3);
    b.add_edge(leg(s2), c.z2);
    b.add_edge(leg(t2), c.z4);
    b.add_edge(c.z1, c.x1);
    b.add_edge(c.x1, c.z3);
    b.add_edge(c.z2, c.x2);
    b.add_edge(c.x2, c.z4);
    b.add_edge(c.x1, c.x2);

    std::bernoulli_distribution dotted(0.3);
    const Edge cand[] = {{c.z1, c.z2}, {c.z1, c.x2}, {c.z1, c.z4}, {c.z2, c.x1}, {c.z3, c.x2},
                         {c.z4, c.x1}, {c.z3, c.z4}, {c.z2, c.z3}};
    for (auto [u, v] : cand)
        if (dotted(rng)) b.add_edge(u, v);

    // extra vertices hang off non-terminal vertices
    int first_free = 4;
    int extras = uniform_int(rng, 0, budget);
    for (int i = 0; i < extras; ++i) {
        int q = b.add_vertex();
        int deg = uniform_int(rng, 1, 3);
        std::vector<int> pool;
        for (int v = first_free; v < q; ++v) pool.push_back(v);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int j = 0; j < deg && j < static_cast<int>(pool.size()); ++j) b.add_edge(q, pool[j]);
    }

    ConflictInstance out;
    out.g = b.build_simple();
    out.t.pairs = {{s1, t1}, {s2, t2}};
    out.site = c;
    if (!is_family_free(out.g, fam_h2())) return std::nullopt;
    const int site[] = {c.z1, c.x1, c.z3, c.z2, c.x2, c.z4};
    for (int z : {c.z1, c.z3, c.z2, c.z4}) {
        int outside = 0;
        for (int w : out.g.nbrs(z)) outside += std::find(std::begin(site), std::end(site), w) == std::end(site);
        if (outside > 1) return std::nullopt;
    }
    return out;
}

MergeCheck check_merge(const ConflictInstance& c) {
    MergeCheck r;
    bool before = oracle_disjoint_paths(c.g, c.t, true).has_value();
    auto m = apply_merge_rule(c.g, c.site);
    TerminalSpec t2 = c.t;
    for (auto& [a, b] : t2.pairs) {
        a = m.r.old_to_new[a];
        b = m.r.old_to_new[b];
    }
    bool after = oracle_disjoint_paths(m.r.g, t2, true).has_value();
    r.verdict_kept = before == after;
    r.h2_free_after = is_family_free(m.r.g, fam_h2());
    r.rule = m.rule;
    return r;
}

}  // namespace hfree
