#include "lamps/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "lamps/edge_vertex.hpp"
#include "lamps/errors.hpp"
#include "lamps/graph.hpp"
#include "lamps/io.hpp"
#include "lamps/matching.hpp"
#include "lamps/oracle.hpp"
#include "lamps/suites.hpp"
#include "lamps/vertex_edge.hpp"
#include "lamps/vertex_vertex.hpp"

namespace lamps::cli {

namespace {

using json = nlohmann::ordered_json;

Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return parse_graph_auto(in);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_graph_auto(f);
}

WeightedGraph load_weighted(const std::string& path, std::istream& in) {
    if (path == "-") return parse_weighted_graph(in);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_weighted_graph(f);
}

int need_int(const std::vector<std::string>& p, size_t i, const char* what) {
    if (i >= p.size())
        throw std::invalid_argument(std::string("gen: missing ") + what);
    try {
        size_t pos = 0;
        int v = std::stoi(p[i], &pos);
        if (pos != p[i].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("gen: bad " + std::string(what) + " '" + p[i] + "'");
    }
}

double need_double(const std::vector<std::string>& p, size_t i, const char* what) {
    if (i >= p.size())
        throw std::invalid_argument(std::string("gen: missing ") + what);
    try {
        size_t pos = 0;
        double v = std::stod(p[i], &pos);
        if (pos != p[i].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("gen: bad " + std::string(what) + " '" + p[i] + "'");
    }
}

int run_gen(const std::string& kind, const std::vector<std::string>& params,
            uint64_t seed, std::ostream& out) {
    Graph g;
    if (kind == "path")
        g = path_graph(need_int(params, 0, "vertex count"));
    else if (kind == "cycle")
        g = cycle_graph(need_int(params, 0, "vertex count"));
    else if (kind == "star")
        g = star_graph(need_int(params, 0, "vertex count"));
    else if (kind == "complete")
        g = complete_graph(need_int(params, 0, "vertex count"));
    else if (kind == "complete_bipartite")
        g = complete_bipartite_graph(need_int(params, 0, "side a"),
                                     need_int(params, 1, "side b"));
    else if (kind == "tree")
        g = random_tree(need_int(params, 0, "vertex count"), seed);
    else if (kind == "random")
        g = random_graph(need_int(params, 0, "vertex count"),
                         need_double(params, 1, "edge probability"), seed);
    else
        throw std::invalid_argument("gen: unknown kind '" + kind + "'");
    write_graph(out, g, Format::edgelist);
    return 0;
}

struct SolveResult {
    bool feasible = false;
    std::optional<int> size;
    std::vector<int> witness;
    bool optimal = false;
    std::optional<long> lower, upper;
    std::string diagnostics;
};

SolveResult solve_problem(const Graph& g, const std::string& problem,
                          bool minimum, int nullity_cap) {
    SolveResult r;
    if (problem == "ev") {
        auto comps = components(g);
        auto sol = min_ev(g);
        r.feasible = sol.has_value();
        if (sol) {
            r.size = sol->size;
            r.witness = sol->edges.ids();
            r.optimal = true;
            long lo = 0, hi = 0;
            for (const VertexSet& c : comps) {
                lo += c.count() / 2;
                hi += c.count() - 1;
            }
            r.lower = lo;
            r.upper = hi;
            r.diagnostics = "minimized per component (" +
                            std::to_string(comps.size()) + " components)";
        } else {
            r.diagnostics = "odd-order component";
        }
    } else if (problem == "ve") {
        auto sol = solve_ve(g);
        r.feasible = sol.has_value();
        if (sol) {
            r.size = sol->chosen_min.count();
            r.witness = sol->chosen_min.ids();
            r.optimal = true;
            r.lower = *r.size;
            r.upper = *r.size;
            r.diagnostics = sol->degenerate
                                ? "degenerate: no edges, every vertex subset solves"
                                : "smaller color class per component";
        } else {
            r.diagnostics = "not bipartite";
        }
    } else if (problem == "vv" || problem == "ee") {
        bool vv = problem == "vv";
        int universe = vv ? g.n() : g.m();
        r.feasible = true;
        if (minimum) {
            auto x = vv ? min_vv(g, nullity_cap) : min_ee(g, nullity_cap);
            if (!x)
                throw BudgetError("solution-space dimension exceeds --nullity-cap " +
                                  std::to_string(nullity_cap));
            r.size = x->count();
            r.witness = x->ids();
            r.optimal = true;
            r.lower = *r.size;
            r.upper = *r.size;
            r.diagnostics = "minimum over the affine solution space";
        } else {
            Bitset x = vv ? solve_vv(g) : solve_ee(g);
            r.size = x.count();
            r.witness = x.ids();
            r.optimal = false;
            r.lower = 0;
            r.upper = universe;
            r.diagnostics = "particular solution; rerun with --minimum for the optimum";
        }
    } else {
        throw std::invalid_argument("unknown problem '" + problem + "'");
    }
    return r;
}

void emit_solution(const Graph& g, const std::string& problem,
                   const SolveResult& r, const std::string& format,
                   std::ostream& out) {
    if (format == "json") {
        json j;
        j["problem"] = problem;
        j["n"] = g.n();
        j["m"] = g.m();
        j["feasible"] = r.feasible;
        j["size"] = r.size ? json(*r.size) : json(nullptr);
        j["witness"] = r.witness;
        j["optimal"] = r.optimal;
        j["bounds"] = {{"lower", r.lower ? json(*r.lower) : json(nullptr)},
                       {"upper", r.upper ? json(*r.upper) : json(nullptr)}};
        j["diagnostics"] = r.diagnostics;
        out << j.dump(2) << "\n";
        return;
    }
    out << "problem: " << problem << "\n";
    out << "n: " << g.n() << "\n";
    out << "m: " << g.m() << "\n";
    out << "feasible: " << (r.feasible ? "yes" : "no") << "\n";
    if (r.size) out << "size: " << *r.size << "\n";
    if (r.feasible) {
        out << "witness:";
        for (int id : r.witness) out << " " << id;
        out << "\n";
        out << "optimal: " << (r.optimal ? "yes" : "no") << "\n";
    }
    if (r.lower && r.upper)
        out << "bounds: [" << *r.lower << ", " << *r.upper << "]\n";
    if (!r.diagnostics.empty()) out << "diagnostics: " << r.diagnostics << "\n";
}

/// Witness file: either whitespace-separated ids or a solve JSON report
/// (first non-space character '{'), whose witness array is used.
std::vector<int> load_witness(const std::string& path, const std::string& problem) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    std::string text = buffer.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    std::vector<int> ids;
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("witness JSON: ") + e.what());
        }
        if (j.contains("problem") && j["problem"] != problem)
            throw ParseError("witness JSON is for problem '" +
                             j["problem"].get<std::string>() + "', not '" + problem + "'");
        if (!j.contains("witness") || !j["witness"].is_array())
            throw ParseError("witness JSON lacks a witness array");
        for (const auto& v : j["witness"]) ids.push_back(v.get<int>());
        return ids;
    }
    std::istringstream is(text);
    long v = 0;
    while (is >> v) ids.push_back(int(v));
    if (!is.eof()) throw ParseError("witness file: expected whitespace-separated ids");
    return ids;
}

Bitset ids_to_set(const std::vector<int>& ids, int universe, const char* what) {
    Bitset s(universe);
    for (int id : ids) {
        if (id < 0 || id >= universe)
            throw ParseError(std::string(what) + " id " + std::to_string(id) +
                             " out of range [0, " + std::to_string(universe) + ")");
        s.set(id);
    }
    return s;
}

int run_verify(const Graph& g, const std::string& problem,
               const std::string& witness_path, std::ostream& out) {
    std::vector<int> ids = load_witness(witness_path, problem);
    bool ok = false;
    if (problem == "vv")
        ok = verify_vv(g, ids_to_set(ids, g.n(), "vertex"));
    else if (problem == "ve")
        ok = verify_ve(g, ids_to_set(ids, g.n(), "vertex"));
    else if (problem == "ev")
        ok = verify_ev(g, ids_to_set(ids, g.m(), "edge"));
    else if (problem == "ee")
        ok = verify_ee(g, ids_to_set(ids, g.m(), "edge"));
    else
        throw std::invalid_argument("unknown problem '" + problem + "'");
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? 0 : 1;
}

int run_reduce(const Graph& g, const std::string& map_out, std::ostream& out) {
    GadgetGraph gadget = build_gadget(g);
    write_weighted_graph(out, gadget.star);
    std::ostringstream map;
    for (int e = 0; e < g.m(); ++e)
        map << "cross " << gadget.cross_of_original[size_t(e)] << " " << e << "\n";
    if (map_out.empty()) {
        // keep stdout parseable as a weighted graph: map lines as comments
        std::istringstream lines(map.str());
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << "\n";
    } else {
        std::ofstream f(map_out);
        if (!f) throw ParseError("cannot open " + map_out);
        f << map.str();
    }
    return 0;
}

int run_match(const WeightedGraph& wg, std::ostream& out) {
    auto m = min_weight_perfect_matching(wg);
    if (!m) {
        out << "none\n";
        return 1;
    }
    out << "weight " << m->total_weight << "\n";
    for (int e : m->edges.ids())
        out << wg.graph.edge(e).u << " " << wg.graph.edge(e).v << "\n";
    return 0;
}

int run_oracle(const Graph& g, const std::string& problem, std::ostream& out) {
    std::vector<Bitset> sols;
    if (problem == "ev")
        sols = oracle::brute_solutions_ev(g);
    else if (problem == "ve")
        sols = oracle::brute_solutions_ve(g);
    else if (problem == "vv")
        sols = oracle::brute_solutions_vv(g);
    else if (problem == "ee")
        sols = oracle::brute_solutions_ee(g);
    else
        throw std::invalid_argument("unknown problem '" + problem + "'");
    out << "count " << sols.size() << "\n";
    for (const Bitset& s : sols) {
        bool first = true;
        for (int id : s.ids()) {
            out << (first ? "" : " ") << id;
            first = false;
        }
        out << "\n";
    }
    return 0;
}

int run_check(const std::string& suite, std::optional<int> limit_n,
              std::optional<uint64_t> seed, std::ostream& out) {
    suites::SuiteReport rep = suites::run_suite(suite, limit_n, seed);
    out << rep.summary() << "\n";
    for (const std::string& note : rep.notes) out << "  note: " << note << "\n";
    return rep.passed() ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
    CLI::App app{"lamp-lighting solvers over undirected graphs"};
    app.require_subcommand(1);

    std::string kind, input = "-", problem, format = "text";
    std::string witness_path, map_out, suite;
    std::vector<std::string> params;
    uint64_t seed = 1;
    bool minimum = false;
    int nullity_cap = 20;
    std::optional<int> limit_n;
    std::optional<uint64_t> check_seed;

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("kind", kind,
                    "path|cycle|star|complete|complete_bipartite|tree|random")
        ->required();
    gen->add_option("params", params, "size parameters for the kind");
    gen->add_option("--seed", seed, "seed for random kinds");

    CLI::App* solve = app.add_subcommand("solve", "solve one lamp problem");
    solve->add_option("--problem", problem, "vv|ve|ev|ee")
        ->required()
        ->check(CLI::IsMember({"vv", "ve", "ev", "ee"}));
    solve->add_flag("--minimum", minimum, "minimize the witness (vv/ee enumerate)");
    solve->add_option("--nullity-cap", nullity_cap,
                      "enumeration budget for vv/ee minimization");
    solve->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_option("graph", input, "graph file, - for stdin");

    CLI::App* verify = app.add_subcommand("verify", "verify a witness");
    verify->add_option("--problem", problem, "vv|ve|ev|ee")->required();
    verify->add_option("--witness", witness_path, "id list or solve JSON")
        ->required();
    verify->add_option("graph", input, "graph file, - for stdin");

    CLI::App* reduce = app.add_subcommand(
        "reduce", "emit the minimization gadget as a weighted graph");
    reduce->add_option("graph", input, "graph file, - for stdin");
    reduce->add_option("--map-out", map_out,
                       "write 'cross <gadget-edge> <original-edge>' lines here "
                       "instead of stdout comments");

    CLI::App* match = app.add_subcommand("match", "minimum-weight perfect matching");
    match->add_option("graph", input, "weighted graph file, - for stdin");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "enumerate all solutions by brute force");
    oracle_cmd->add_option("--problem", problem, "vv|ve|ev|ee")->required();
    oracle_cmd->add_option("graph", input, "graph file, - for stdin");

    CLI::App* check = app.add_subcommand("check", "run a theorem suite");
    check->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suites::suite_names()));
    check->add_option("--limit-n", limit_n, "shrink exhaustive populations");
    check->add_option("--seed", check_seed, "reseed random populations");

    std::vector<const char*> argv{"lamps"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(kind, params, seed, out);
        if (solve->parsed()) {
            Graph g = load_graph(input, in);
            SolveResult r = solve_problem(g, problem, minimum, nullity_cap);
            emit_solution(g, problem, r, format, out);
            return r.feasible ? 0 : 1;
        }
        if (verify->parsed())
            return run_verify(load_graph(input, in), problem, witness_path, out);
        if (reduce->parsed()) return run_reduce(load_graph(input, in), map_out, out);
        if (match->parsed()) return run_match(load_weighted(input, in), out);
        if (oracle_cmd->parsed())
            return run_oracle(load_graph(input, in), problem, out);
        if (check->parsed()) return run_check(suite, limit_n, check_seed, out);
        err << "no subcommand\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lamps::cli
