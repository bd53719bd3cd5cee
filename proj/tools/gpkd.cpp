// gpkd — compute, check, and cross-verify k-general d-position numbers.
//
// Exit codes: 0 success / valid, 1 verification mismatch or invalid set,
// 2 invalid input, 3 search budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpkd/families.hpp"
#include "gpkd/formulas.hpp"
#include "gpkd/io.hpp"
#include "gpkd/position.hpp"
#include "gpkd/random.hpp"
#include "gpkd/solver.hpp"

using nlohmann::json;

namespace {

struct GraphSource {
    std::string family;
    std::string file;

    gpkd::Graph build() const {
        if (!family.empty()) return gpkd::build_family(family);
        if (!file.empty()) return gpkd::read_edge_list_file(file);
        throw std::invalid_argument("need --graph or --graph-file");
    }
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    auto* fam = cmd->add_option("--graph", src.family, "family descriptor, e.g. path:14, grid:3x4");
    auto* fil = cmd->add_option("--graph-file", src.file, "edge-list file (header 'n m', then 'u v' lines)");
    fam->excludes(fil);
    fil->excludes(fam);
}

// Comma-separated vertices; on grid-family graphs a token may be a 1-based
// `col.row` pair instead of a 0-based index.
gpkd::VertexSet parse_vertex_set(const std::string& text, const gpkd::Graph& g) {
    gpkd::VertexSet out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dot = tok.find('.');
        if (dot != std::string::npos) {
            auto shape = gpkd::family_grid_shape(g);
            if (!shape) throw std::invalid_argument("i.j vertices need a grid-family graph");
            int i = gpkd::detail::parse_positive_int(tok.substr(0, dot), "grid column");
            int j = gpkd::detail::parse_positive_int(tok.substr(dot + 1), "grid row");
            if (i > shape->first || j > shape->second)
                throw std::invalid_argument("i.j vertex out of grid bounds");
            out.push_back(gpkd::grid_vertex_id(i - 1, j - 1, shape->second));
        } else {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad vertex token: " + tok);
            out.push_back(v);
        }
    }
    return gpkd::normalized_vertex_set(out, g.n());
}

std::string graph_label(const gpkd::Graph& g) {
    if (!g.family_tag().empty()) return g.family_tag();
    return "n=" + std::to_string(g.n()) + ",m=" + std::to_string(g.edge_count());
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

const char* method_name(gpkd::SolveMethod m) {
    return m == gpkd::SolveMethod::brute ? "brute" : "branch-and-bound";
}

gpkd::SolveResult solve_with(const gpkd::Graph& g, const gpkd::PositionParams& p,
                             const std::string& method, const gpkd::SearchOptions& opts,
                             int cutoff) {
    if (method == "brute") return gpkd::solve_bruteforce(g, p, cutoff);
    if (method == "bnb") return gpkd::solve_exact(g, p, opts);
    return g.n() <= 16 ? gpkd::solve_bruteforce(g, p, std::max(cutoff, 16))
                       : gpkd::solve_exact(g, p, opts);
}

struct SolveFlags {
    std::string method = "auto";
    int workers = 1;
    std::uint64_t node_budget = 0;
    double time_budget = 0.0;
    bool no_warm_start = false;
    int cutoff = 20;

    gpkd::SearchOptions options() const {
        gpkd::SearchOptions o;
        o.workers = workers;
        o.node_budget = node_budget;
        o.time_budget_seconds = time_budget;
        o.warm_start = !no_warm_start;
        return o;
    }
};

void add_solve_options(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--method", f.method, "auto | brute | bnb")
        ->check(CLI::IsMember({"auto", "brute", "bnb"}));
    cmd->add_option("--workers", f.workers, "branch-and-bound worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", f.node_budget, "abort after this many search nodes (0 = unlimited)");
    cmd->add_option("--time-budget", f.time_budget, "abort after this many seconds (0 = unlimited)");
    cmd->add_flag("--no-warm-start", f.no_warm_start, "do not seed the incumbent from a family construction");
    cmd->add_option("--cutoff", f.cutoff, "largest n accepted by the brute-force method");
}

int run_compute(const GraphSource& src, int k, int d, const SolveFlags& flags, bool as_json) {
    gpkd::Graph g = src.build();
    gpkd::PositionParams p(k, d);
    gpkd::SolveResult r = solve_with(g, p, flags.method, flags.options(), flags.cutoff);
    if (as_json) {
        json j{{"graph", graph_label(g)}, {"n", g.n()},          {"k", k},
               {"d", d},                  {"effective_d", r.effective_d},
               {"value", r.value},        {"witness", r.witness}, {"method", method_name(r.method)},
               {"nodes_explored", r.nodes_explored}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graph: " << graph_label(g) << "\n"
                  << "k: " << k << "  d: " << d << "  effective d: " << r.effective_d << "\n"
                  << "value: " << r.value << "\n"
                  << "witness: " << join_ints(r.witness) << "\n"
                  << "method: " << method_name(r.method) << "  nodes: " << r.nodes_explored << "\n";
    }
    return 0;
}

int run_check(const GraphSource& src, int k, int d, const std::string& set_text, bool as_json) {
    gpkd::Graph g = src.build();
    gpkd::PositionParams p(k, d);
    gpkd::DistMatrix dm(g);
    gpkd::VertexSet s = parse_vertex_set(set_text, g);
    auto viol = gpkd::find_violation(g, dm, s, p);
    if (as_json) {
        json j{{"graph", graph_label(g)},
               {"k", k},
               {"d", d},
               {"effective_d", gpkd::effective_d(dm, p)},
               {"set", s},
               {"valid", !viol.has_value()}};
        if (viol)
            j["violation"] = json{{"u", viol->witness.u},
                                  {"v", viol->witness.v},
                                  {"length", viol->witness.length()},
                                  {"vertices", viol->witness.vertices},
                                  {"marked", viol->witness.count_in_s}};
        std::cout << j.dump(2) << "\n";
    } else if (!viol) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid\n"
                  << "violating geodesic " << viol->witness.u << "-" << viol->witness.v
                  << " (length " << viol->witness.length() << ", " << viol->witness.count_in_s
                  << " marked): " << join_ints(viol->witness.vertices) << "\n";
    }
    return viol ? 1 : 0;
}

int run_formula(const std::string& family, int n, int k, int d, bool as_json) {
    gpkd::PositionParams p(k, d);
    int value = 0;
    std::string case_label;
    std::string method = "formula";
    if (family == "path") {
        value = gpkd::gp_path(n, p);
    } else if (family == "cycle") {
        try {
            value = gpkd::gp_cycle(n, p);
        } catch (const std::domain_error& e) {
            std::cerr << e.what() << "\n";
            value = gpkd::solve_exact(gpkd::build_family("cycle:" + std::to_string(n)), p).value;
            method = "solver";
        }
    } else if (family == "prism") {
        gpkd::PrismValue pv = gpkd::gp_prism_case(n, p);
        value = pv.value;
        case_label = pv.case_label;
    } else {
        throw std::invalid_argument("--family must be path, cycle, or prism");
    }
    if (as_json) {
        json j{{"family", family}, {"n", n}, {"k", k}, {"d", d}, {"value", value}, {"method", method}};
        if (!case_label.empty()) j["case"] = case_label;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
        if (!case_label.empty()) std::cout << "case: " << case_label << "\n";
    }
    return 0;
}

int run_table(const GraphSource& src, int kmax, const SolveFlags& flags, bool as_csv, bool as_json) {
    gpkd::Graph g = src.build();
    gpkd::LatticeTable t = gpkd::lattice_table(
        g, kmax, [&](const gpkd::Graph& gg, const gpkd::PositionParams& pp) {
            return solve_with(gg, pp, flags.method, flags.options(), std::max(flags.cutoff, gg.n()))
                .value;
        });
    if (as_csv) {
        for (const auto& row : t.values) std::cout << join_ints(row) << "\n";
    } else if (as_json) {
        json j{{"graph", graph_label(g)}, {"k_min", 2}, {"k_max", t.k_max},
               {"d_max", t.d_max},        {"values", t.values}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d\\k";
        for (int k = 2; k <= t.k_max; ++k) std::cout << "\t" << k;
        std::cout << "\n";
        for (int d = 1; d <= t.d_max; ++d) {
            std::cout << d;
            for (int v : t.values[static_cast<std::size_t>(d) - 1]) std::cout << "\t" << v;
            std::cout << "\n";
        }
    }
    return 0;
}

struct ConstructArgs {
    std::string what;
    int n = 0, m = 0, r = 0;
    int k = 0, d = 0;
    int radius = 0, rows = 0, cols = 0;
    std::string center;
    bool coords = false;
};

int run_construct(const ConstructArgs& a, bool as_json, bool as_csv) {
    gpkd::VertexSet s;
    int coord_cols = 0;  // when nonzero, ids live on a grid with this many columns per row
    json params;
    if (a.what == "jset") {
        s = gpkd::j_set(a.n, a.m, a.r);
        params = {{"n", a.n}, {"m", a.m}, {"r", a.r}};
    } else if (a.what == "path-blocks") {
        s = gpkd::path_block_set(a.k, a.d, a.n);
        params = {{"k", a.k}, {"d", a.d}, {"n", a.n}};
    } else if (a.what == "grid-a") {
        s = gpkd::thin_grid_A(a.k, a.d, a.n);
        coord_cols = 2;
        params = {{"k", a.k}, {"d", a.d}, {"n", a.n}};
    } else if (a.what == "grid-b") {
        s = gpkd::thin_grid_B(a.k, a.d, a.n);
        coord_cols = 2;
        params = {{"k", a.k}, {"d", a.d}, {"n", a.n}};
    } else if (a.what == "diamond") {
        if (a.rows < 1 || a.cols < 1) throw std::invalid_argument("diamond needs --rows and --cols");
        int ci = a.radius, cj = a.radius;
        if (!a.center.empty()) {
            auto dot = a.center.find('.');
            if (dot == std::string::npos)
                throw std::invalid_argument("--center wants a 1-based i.j pair");
            ci = gpkd::detail::parse_positive_int(a.center.substr(0, dot), "center row") - 1;
            cj = gpkd::detail::parse_positive_int(a.center.substr(dot + 1), "center column") - 1;
        }
        s = gpkd::diamond_set(a.radius, {ci, cj}, a.rows, a.cols);
        coord_cols = a.cols;
        params = {{"radius", a.radius}, {"center_i", ci}, {"center_j", cj},
                  {"rows", a.rows},     {"cols", a.cols}};
    } else {
        throw std::invalid_argument("--what must be jset, path-blocks, grid-a, grid-b, or diamond");
    }

    std::vector<std::string> rendered;
    if (a.coords) {
        if (coord_cols == 0) throw std::invalid_argument("--coords applies to grid constructions only");
        for (int v : s)
            rendered.push_back(std::to_string(v / coord_cols + 1) + "." +
                               std::to_string(v % coord_cols + 1));
    } else {
        for (int v : s) rendered.push_back(std::to_string(v));
    }

    if (as_json) {
        json j{{"what", a.what}, {"params", params}, {"size", s.size()}, {"vertices", s}};
        if (a.coords) j["coords"] = rendered;
        std::cout << j.dump(2) << "\n";
    } else {
        std::string line;
        for (std::size_t i = 0; i < rendered.size(); ++i) {
            if (i) line += ',';
            line += rendered[i];
        }
        std::cout << line << "\n";
        if (!as_csv) std::cerr << "size: " << s.size() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string family;
    bool random = false;
    int nmax = 10;
    int kmax = 5;
    int dmax = 6;
    std::uint64_t seed = 1;
    int count = 50;
};

int run_verify(const VerifyArgs& a, const SolveFlags& flags, bool as_json) {
    long points = 0;
    json mismatches = json::array();
    auto report = [&](const std::string& where, int k, int d, int expected, int got) {
        mismatches.push_back(json{{"graph", where}, {"k", k}, {"d", d},
                                  {"formula", expected}, {"solver", got}});
        std::cerr << "mismatch " << where << " k=" << k << " d=" << d << ": formula " << expected
                  << " vs solver " << got << "\n";
    };

    if (!a.family.empty()) {
        for (int n = (a.family == "cycle" ? 3 : 1); n <= a.nmax; ++n) {
            gpkd::Graph g = gpkd::build_family(a.family + ":" + std::to_string(n));
            for (int k = 2; k <= a.kmax; ++k)
                for (int d = 1; d <= a.dmax; ++d) {
                    gpkd::PositionParams p(k, d);
                    int expected;
                    if (a.family == "path")
                        expected = gpkd::gp_path(n, p);
                    else if (a.family == "cycle") {
                        if (d > p.k - 2 && d > n / 2) continue;  // outside the proven range
                        expected = gpkd::gp_cycle(n, p);
                    } else
                        expected = gpkd::gp_prism(n, p);
                    int got = solve_with(g, p, flags.method, flags.options(),
                                         std::max(flags.cutoff, g.n()))
                                  .value;
                    ++points;
                    if (expected != got) report(graph_label(g), k, d, expected, got);
                }
        }
    } else if (a.random) {
        if (a.nmax < 4) throw std::invalid_argument("verify --random needs --nmax >= 4");
        std::mt19937 rng(static_cast<std::mt19937::result_type>(a.seed));
        for (int i = 0; i < a.count; ++i) {
            int n = 4 + gpkd::rand_below(rng, a.nmax - 3);
            gpkd::Graph g = gpkd::random_connected_graph(rng, n, 150);
            gpkd::DistMatrix dm(g);
            int k = 2 + gpkd::rand_below(rng, a.kmax - 1);
            int d = 1 + gpkd::rand_below(rng, std::max(1, dm.diameter()));
            gpkd::PositionParams p(k, d);
            gpkd::SolveResult brute = gpkd::solve_bruteforce(g, p, g.n());
            gpkd::SolveResult bnb = gpkd::solve_exact(g, p, flags.options());
            ++points;
            std::string label = "random[" + std::to_string(i) + "],n=" + std::to_string(n);
            if (brute.value != bnb.value) report(label, k, d, brute.value, bnb.value);
            if (!gpkd::is_kgdp(g, dm, brute.witness, p) || !gpkd::is_kgdp(g, dm, bnb.witness, p))
                report(label + " (witness)", k, d, brute.value, bnb.value);
        }
    } else {
        throw std::invalid_argument("verify needs --family or --random");
    }

    if (as_json) {
        json j{{"points", points}, {"mismatches", mismatches}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verified " << points << " points, " << mismatches.size() << " mismatches\n";
    }
    return mismatches.empty() ? 0 : 1;
}

int run_export(const GraphSource& src, const std::string& format, const std::string& set_text,
               const std::string& out_path) {
    gpkd::Graph g = src.build();
    gpkd::VertexSet s;
    if (!set_text.empty()) s = parse_vertex_set(set_text, g);
    std::ostringstream body;
    if (format == "dot") {
        body << gpkd::to_dot(g, s);
    } else if (format == "edges") {
        gpkd::write_edge_list(body, g);
    } else if (format == "csv") {
        if (set_text.empty()) throw std::invalid_argument("--format csv needs --set");
        body << join_ints(s) << "\n";
    } else {
        throw std::invalid_argument("--format must be dot, edges, or csv");
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << body.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-general d-position toolkit"};
    app.require_subcommand(1);

    bool as_json = false, as_csv = false;

    GraphSource src;
    SolveFlags flags;
    int k = 2, d = 1, kmax = 2, n = 1;
    std::string set_text, family, format = "dot", out_path;
    ConstructArgs cons;
    VerifyArgs ver;

    auto* compute = app.add_subcommand("compute", "exact optimum with witness");
    add_graph_options(compute, src);
    compute->add_option("--k", k, "geodesic vertex threshold (k >= 2)")->required();
    compute->add_option("--d", d, "geodesic length threshold (d >= 1)")->required();
    add_solve_options(compute, flags);
    compute->add_flag("--json", as_json, "JSON output");

    auto* check = app.add_subcommand("check", "test a vertex set against the predicate");
    add_graph_options(check, src);
    check->add_option("--k", k)->required();
    check->add_option("--d", d)->required();
    check->add_option("--set", set_text, "comma-separated vertices (grid families also take i.j)")
        ->required();
    check->add_flag("--json", as_json, "JSON output");

    auto* formula = app.add_subcommand("formula", "closed-form value for a graph family");
    formula->add_option("--family", family, "path | cycle | prism")->required();
    formula->add_option("--n", n, "family size parameter")->required();
    formula->add_option("--k", k)->required();
    formula->add_option("--d", d)->required();
    formula->add_flag("--json", as_json, "JSON output");

    auto* table = app.add_subcommand("table", "optimum for every d (rows) and k (columns)");
    add_graph_options(table, src);
    table->add_option("--kmax", kmax, "largest k column")->required();
    add_solve_options(table, flags);
    table->add_flag("--csv", as_csv, "CSV output (no headers)");
    table->add_flag("--json", as_json, "JSON output");

    auto* construct = app.add_subcommand("construct", "materialize an extremal vertex set");
    construct->add_option("--what", cons.what, "jset | path-blocks | grid-a | grid-b | diamond")
        ->required();
    construct->add_option("--n", cons.n, "ambient size (jset: cycle length; others: columns)");
    construct->add_option("--m", cons.m, "jset size");
    construct->add_option("--r", cons.r, "jset rotation");
    construct->add_option("--k", cons.k);
    construct->add_option("--d", cons.d);
    construct->add_option("--radius", cons.radius, "diamond radius");
    construct->add_option("--center", cons.center, "diamond center, 1-based i.j");
    construct->add_option("--rows", cons.rows);
    construct->add_option("--cols", cons.cols);
    construct->add_flag("--coords", cons.coords, "print 1-based i.j pairs instead of ids");
    construct->add_flag("--json", as_json, "JSON output");
    construct->add_flag("--csv", as_csv, "bare comma-separated line");

    auto* verify = app.add_subcommand("verify", "cross-check formulas against the solvers");
    verify->add_option("--family", ver.family, "path | cycle | prism: sweep formula vs solver");
    verify->add_flag("--random", ver.random, "random connected graphs: brute vs branch-and-bound");
    verify->add_option("--nmax", ver.nmax, "largest family parameter / vertex count");
    verify->add_option("--kmax", ver.kmax);
    verify->add_option("--dmax", ver.dmax);
    verify->add_option("--seed", ver.seed, "random generator seed");
    verify->add_option("--count", ver.count, "number of random graphs");
    add_solve_options(verify, flags);
    verify->add_flag("--json", as_json, "JSON output");

    auto* exp = app.add_subcommand("export", "write the graph as DOT, an edge list, or a vertex CSV");
    add_graph_options(exp, src);
    exp->add_option("--format", format, "dot | edges | csv");
    exp->add_option("--set", set_text, "vertices to highlight (DOT) or list (csv)");
    exp->add_option("-o,--output", out_path, "output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) return run_compute(src, k, d, flags, as_json);
        if (app.got_subcommand(check)) return run_check(src, k, d, set_text, as_json);
        if (app.got_subcommand(formula)) return run_formula(family, n, k, d, as_json);
        if (app.got_subcommand(table)) return run_table(src, kmax, flags, as_csv, as_json);
        if (app.got_subcommand(construct)) return run_construct(cons, as_json, as_csv);
        if (app.got_subcommand(verify)) return run_verify(ver, flags, as_json);
        if (app.got_subcommand(exp)) return run_export(src, format, set_text, out_path);
    } catch (const gpkd::BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << " after " << e.nodes << " nodes\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
