// hfree command-line front end. Exit codes: 0 YES/success, 1 NO/disagreement,
// 2 usage, parse or promise error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hfree/harness.hpp"
#include "hfree/oracles.hpp"
#include "hfree/reductions.hpp"
#include "hfree/solvers.hpp"

using json = nlohmann::json;
using namespace hfree;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

// "0-5,2-7"
TerminalSpec parse_pairs(const std::string& text) {
    TerminalSpec t;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw Error("terminal pair '" + item + "' is not 'u-v'");
        try {
            t.pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::logic_error&) {
            throw Error("terminal pair '" + item + "' is not 'u-v'");
        }
    }
    if (t.pairs.empty()) throw Error("no terminal pairs given");
    return t;
}

json hit_json(const FamilyHit& h) { return {{"pattern", to_string(h.id)}, {"embedding", h.emb}}; }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct Common {
    bool json_out = false;
};

void emit(const Common& c, const json& obj, const std::string& line, const std::string& detail = {}) {
    if (c.json_out) {
        std::cout << obj.dump() << '\n';
        return;
    }
    std::cout << line << '\n';
    if (!detail.empty()) std::cout << detail << '\n';
}

// ---- detect ----

int cmd_detect(const Common& c, const std::string& family, const std::string& file) {
    Family f = parse_family(family);
    Graph g = load_graph(file);
    auto hit = find_family_member(g, f);
    if (!hit) {
        emit(c, {{"result", "FREE"}}, "FREE");
        return 0;
    }
    emit(c, {{"result", "FOUND"}, {"witness", hit_json(*hit)}}, "FOUND " + to_string(hit->id), join(hit->emb));
    return 0;
}

// ---- solve ----

struct SolveArgs {
    std::string problem, file, pairs;
    bool trust = false, emit_cert = false;
};

int cmd_solve(const Common& c, const SolveArgs& a) {
    Graph g = load_graph(a.file);
    Promise mode = a.trust ? Promise::Trust : Promise::Verify;
    Problem p = parse_problem(a.problem);
    json obj{{"problem", a.problem}};
    bool yes = false;
    std::string detail;
    switch (p) {
        case Problem::C5ColH3:
        case Problem::Star3Bip:
        case Problem::Star3: {
            Verdict v = p == Problem::C5ColH3   ? solve_c5col_h3free(g, mode)
                        : p == Problem::Star3Bip ? solve_star3col_bipartite(g, mode)
                                                 : solve_star3col_general(g, mode);
            yes = v.yes;
            if (a.emit_cert) {
                if (v.witness) {
                    obj["witness"] = hit_json(*v.witness);
                    detail = "witness " + to_string(v.witness->id) + ": " + join(v.witness->emb);
                }
                if (v.colouring) {
                    obj["colouring"] = *v.colouring;
                    detail = "colouring: " + join(*v.colouring);
                }
            }
            break;
        }
        case Problem::HamiltonH1: {
            HamiltonStats st;
            yes = solve_hamilton_h1free(g, mode, &st);
            if (a.emit_cert) obj["contractions"] = {{"diamond", st.diamond}, {"bull", st.bull}};
            break;
        }
        case Problem::KidpH1:
        case Problem::KidpH2: {
            TerminalSpec t = parse_pairs(a.pairs);
            yes = p == Problem::KidpH1 ? solve_kidp_h1free(g, t, mode) : solve_kidp_h2free(g, t, mode);
            break;
        }
        case Problem::Star10Subcubic: {
            Colouring col = greedy_injective_10col(g);
            yes = true;
            if (a.emit_cert) {
                obj["colouring"] = col;
                detail = "colouring: " + join(col);
            }
            break;
        }
    }
    obj["result"] = yes ? "YES" : "NO";
    emit(c, obj, yes ? "YES" : "NO", detail);
    return yes ? 0 : 1;
}

// ---- oracle ----

struct OracleArgs {
    std::string problem, file, pairs;
    int x = -1, y = -1, k = 3, bound = 0;
};

int cmd_oracle(const Common& c, const OracleArgs& a) {
    Graph g = load_graph(a.file);
    OracleConfig cfg = a.bound > 0 ? OracleConfig::uniform(a.bound) : OracleConfig::standard();
    json obj{{"problem", a.problem}};
    std::optional<json> cert;
    std::string detail;
    bool yes = false;
    auto take = [&](const auto& r) {
        yes = r.has_value();
        if (r) cert = json(*r);
    };
    if (a.problem == "c5col") take(oracle_c5_colouring(g, cfg));
    else if (a.problem == "c5-critical") yes = oracle_c5_critical(g, cfg);
    else if (a.problem == "hamilton") take(oracle_hamilton(g, cfg));
    else if (a.problem == "star3") take(oracle_star3col(g, cfg));
    else if (a.problem == "kcol") take(oracle_k_colouring(g, a.k, cfg));
    else if (a.problem == "paths" || a.problem == "induced-paths")
        take(oracle_disjoint_paths(g, parse_pairs(a.pairs), a.problem == "induced-paths", cfg));
    else if (a.problem == "hole") take(oracle_hole_through(g, a.x, a.y, cfg));
    else throw Error("unknown oracle problem '" + a.problem + "'");
    obj["result"] = yes ? "YES" : "NO";
    if (cert) {
        obj["certificate"] = *cert;
        detail = cert->dump();
    }
    emit(c, obj, yes ? "YES" : "NO", detail);
    return yes ? 0 : 1;
}

// ---- generate ----

struct GenArgs {
    std::string kind, input, out, layout, cnf, family = "H:1", pattern;
    int ell = 5, k = 2, girth = 4, n = 10;
    double p = 0.3;
    std::uint64_t seed = 1;
};

int cmd_generate(const Common& c, const GenArgs& a) {
    Graph g;
    std::optional<json> layout;
    if (a.kind == "2idp-sat") {
        if (a.cnf.empty()) throw Error("--cnf is required");
        SatGadget gad = gen_2idp_sat(parse_dimacs(read_input(a.cnf)), a.ell);
        g = gad.g;
        layout = json(gad.layout);
    } else if (a.kind == "c5col-from-5col") {
        g = reduce_5col_to_c5col(load_graph(a.input));
    } else if (a.kind == "star3-from-3col") {
        g = reduce_3col_to_star3col(load_graph(a.input));
    } else if (a.kind == "star3-bip-girth") {
        GirthGadget gad = gen_bipartite_star_gadget(load_graph(a.input), a.girth);
        g = gad.g;
        layout = json(gad.layout);
    } else if (a.kind == "subdivide") {
        g = k_subdivide(load_graph(a.input), a.k);
    } else if (a.kind == "random-free") {
        g = gen_random_free(a.n, a.p, parse_family(a.family), a.seed);
    } else if (a.kind == "pattern") {
        g = build_pattern(parse_pattern(a.input));
    } else {
        throw Error("unknown generator '" + a.kind + "'");
    }
    write_output(a.out, serialize(g));
    if (layout) {
        if (!a.layout.empty()) write_output(a.layout, layout->dump(2) + "\n");
        else if (!a.out.empty() && a.out != "-") write_output(a.out + ".layout.json", layout->dump(2) + "\n");
    }
    if (c.json_out && !a.out.empty() && a.out != "-")
        std::cout << json{{"n", g.n()}, {"m", g.m()}, {"output", a.out}}.dump() << '\n';
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string kind, file, cert, pairs;
    int colours = 3, x = -1, y = -1;
    bool induced = false;
};

int cmd_verify(const Common& c, const VerifyArgs& a) {
    Graph g = load_graph(a.file);
    json cert;
    try {
        cert = json::parse(read_input(a.cert));
    } catch (const json::exception& e) {
        throw Error(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (cert.is_object() && cert.contains("certificate")) cert = cert["certificate"];
    else if (cert.is_object() && cert.contains("colouring")) cert = cert["colouring"];
    bool ok = false;
    try {
        if (a.kind == "c5") ok = verify_c5_hom(g, cert.get<Colouring>());
        else if (a.kind == "proper") ok = verify_proper(g, cert.get<Colouring>(), a.colours);
        else if (a.kind == "star") ok = verify_star_colouring(g, cert.get<Colouring>(), a.colours);
        else if (a.kind == "distance2") ok = verify_distance2(g, cert.get<Colouring>(), a.colours);
        else if (a.kind == "hamilton") ok = verify_hamilton(g, cert.get<HamCycle>());
        else if (a.kind == "paths") ok = verify_path_system(g, parse_pairs(a.pairs), cert.get<PathSystem>(), a.induced);
        else if (a.kind == "hole") ok = verify_hole(g, a.x, a.y, cert.get<Hole>());
        else throw Error("unknown certificate kind '" + a.kind + "'");
    } catch (const json::exception& e) {
        throw Error(std::string("certificate has the wrong shape: ") + e.what());
    }
    emit(c, {{"kind", a.kind}, {"valid", ok}}, ok ? "VALID" : "INVALID");
    return ok ? 0 : 1;
}

// ---- harness ----

struct HarnessArgs {
    std::string problem;
    std::size_t trials = 100;
    int size = 10;
    std::uint64_t seed = 1;
    bool serial = false;
};

int cmd_harness(const Common& c, const HarnessArgs& a) {
    Problem p = parse_problem(a.problem);
    HarnessReport r = run_harness(p, a.trials, a.size, a.seed, !a.serial);
    std::string line = std::to_string(r.agree) + "/" + std::to_string(r.trials) + " agree";
    if (c.json_out) {
        json mm = json::array();
        for (const auto& m : r.mismatches)
            mm.push_back({{"trial", m.trial}, {"what", m.what}, {"graph", serialize(m.inst.g)}, {"pairs", m.inst.t.pairs}});
        std::cout << json{{"problem", a.problem}, {"trials", r.trials}, {"agree", r.agree}, {"yes", r.yes},
                          {"case_exhaustion", r.case_exhaustion}, {"violations", r.violations}, {"mismatches", mm}}
                         .dump()
                  << '\n';
    } else {
        std::cout << line << '\n';
        std::cout << "oracle YES " << r.yes << ", case exhaustion " << r.case_exhaustion << ", violations "
                  << r.violations << '\n';
        for (const auto& m : r.mismatches) {
            std::cout << "trial " << m.trial << ": " << m.what << '\n' << serialize(m.inst.g);
            for (auto [s, t] : m.inst.t.pairs) std::cout << "pair " << s << ' ' << t << '\n';
        }
    }
    return r.agree == r.trials ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algorithms, oracles and reductions for H-subgraph-free graph problems"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json_out, "Emit a single JSON object");

    std::string family, detect_file;
    auto* detect = app.add_subcommand("detect", "Find a member of a pattern family");
    detect->add_option("--family", family, "Family expression, e.g. H:odd,A")->required();
    detect->add_option("graph", detect_file, "Graph file or -")->required();

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Run a polynomial solver");
    solve->add_option("problem", sa.problem, "c5col-h3, hamilton-h1, kidp-h1, kidp-h2, star3-bip, star3, star10-subcubic")
        ->required();
    solve->add_option("graph", sa.file, "Graph file or -")->required();
    solve->add_option("--pairs", sa.pairs, "Terminal pairs, e.g. 0-5,2-7");
    solve->add_flag("--trust", sa.trust, "Skip the subgraph-freeness check");
    solve->add_flag("--emit-cert", sa.emit_cert, "Print the witness or colouring");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Run an exhaustive oracle");
    oracle->add_option("problem", oa.problem, "c5col, c5-critical, hamilton, star3, kcol, paths, induced-paths, hole")
        ->required();
    oracle->add_option("graph", oa.file, "Graph file or -")->required();
    oracle->add_option("--pairs", oa.pairs, "Terminal pairs");
    oracle->add_option("--x", oa.x, "Hole vertex x");
    oracle->add_option("--y", oa.y, "Hole vertex y");
    oracle->add_option("--k", oa.k, "Colours for kcol")->check(CLI::Range(0, 31));
    oracle->add_option("--bound", oa.bound, "Vertex cap for every oracle")->check(CLI::PositiveNumber);

    GenArgs ga;
    auto* gen = app.add_subcommand("generate", "Build reductions, gadgets and random instances");
    gen->add_option("kind", ga.kind,
                    "2idp-sat, c5col-from-5col, star3-from-3col, star3-bip-girth, subdivide, random-free, pattern")
        ->required();
    gen->add_option("input", ga.input, "Input graph (or pattern name for 'pattern')");
    gen->add_option("-o,--output", ga.out, "Output graph file (default stdout)");
    gen->add_option("--layout", ga.layout, "Layout JSON file");
    gen->add_option("--cnf", ga.cnf, "DIMACS formula");
    gen->add_option("--ell", ga.ell, "Path length for 2idp-sat")->check(CLI::PositiveNumber);
    gen->add_option("--k", ga.k, "Subdivision count")->check(CLI::NonNegativeNumber);
    gen->add_option("--girth", ga.girth, "Girth target")->check(CLI::PositiveNumber);
    gen->add_option("--n", ga.n, "Vertices for random-free")->check(CLI::NonNegativeNumber);
    gen->add_option("--p", ga.p, "Edge probability for random-free")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--family", ga.family, "Forbidden family for random-free");
    gen->add_option("--seed", ga.seed, "Random seed");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check a certificate");
    ver->add_option("kind", va.kind, "c5, proper, star, distance2, hamilton, paths, hole")->required();
    ver->add_option("graph", va.file, "Graph file or -")->required();
    ver->add_option("certificate", va.cert, "JSON certificate file")->required();
    ver->add_option("--colours", va.colours, "Colour budget")->check(CLI::PositiveNumber);
    ver->add_option("--pairs", va.pairs, "Terminal pairs");
    ver->add_flag("--induced", va.induced, "Require mutually induced paths");
    ver->add_option("--x", va.x, "Hole vertex x");
    ver->add_option("--y", va.y, "Hole vertex y");

    HarnessArgs ha;
    auto* har = app.add_subcommand("harness", "Compare a solver against its oracle on random instances");
    har->add_option("problem", ha.problem, "Problem name as for solve")->required();
    har->add_option("--trials", ha.trials, "Number of trials")->check(CLI::PositiveNumber);
    har->add_option("--size", ha.size, "Maximum vertex count")->check(CLI::PositiveNumber);
    har->add_option("--seed", ha.seed, "Random seed");
    har->add_flag("--serial", ha.serial, "Run trials on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*detect) return cmd_detect(common, family, detect_file);
        if (*solve) return cmd_solve(common, sa);
        if (*oracle) return cmd_oracle(common, oa);
        if (*gen) return cmd_generate(common, ga);
        if (*ver) return cmd_verify(common, va);
        if (*har) return cmd_harness(common, ha);
    } catch (const PromiseViolation& e) {
        if (common.json_out)
            std::cout << json{{"result", "PROMISE VIOLATION"}, {"error", e.what()}, {"witness", hit_json(e.witness)}}.dump()
                      << '\n';
        else
            std::cout << "PROMISE VIOLATION: " << e.what() << '\n' << join(e.witness.emb) << '\n';
        return 2;
    } catch (const std::exception& e) {
        if (common.json_out) std::cout << json{{"result", "ERROR"}, {"error", e.what()}}.dump() << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
