#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcc/construct.hpp"
#include "pcc/errors.hpp"
#include "pcc/exact.hpp"
#include "pcc/families.hpp"
#include "pcc/io.hpp"
#include "pcc/structure.hpp"
#include "pcc/verify.hpp"

namespace pcc::cli {

namespace {

struct FamilyFlags {
    std::string family;
    int n = 0;
    int m = 0;
    int t = 0;
    int a = 0;
    int b = 0;
    std::vector<int> parts;
    std::uint64_t seed = 0;

    void attach(CLI::App* app, bool family_required) {
        auto* opt = app->add_option("--family", family, "graph family");
        if (family_required) opt->required();
        app->add_option("--n", n, "vertex count / leaves / rim size / large side");
        app->add_option("--m", m, "small side (bipartite) or target edges (random_2connected)");
        app->add_option("--t", t, "hypercube dimension");
        app->add_option("--a", a, "double star: first center degree");
        app->add_option("--b", b, "double star: second center degree");
        app->add_option("--parts", parts, "multipartite part sizes")->delimiter(',');
        app->add_option("--seed", seed, "random seed");
    }

    FamilySpec spec() const {
        auto f = parse_family(family);
        if (!f) throw ParameterError("unknown family '" + family + "'");
        FamilySpec s;
        s.family = *f;
        s.n = n;
        s.m = m;
        s.t = t;
        s.a = a;
        s.b = b;
        s.parts = parts;
        s.seed = seed;
        return s;
    }
};

std::optional<std::chrono::duration<double>> seconds_or_none(double s) {
    if (s <= 0) return std::nullopt;
    return std::chrono::duration<double>(s);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text << '\n';
    } else {
        write_file(path, text);
    }
}

Graph load_graph(const std::string& path) {
    try {
        return read_graph(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

ConstructionReport color_family(const FamilySpec& spec, int ell) {
    switch (spec.family) {
        case Family::wheel: return color_wheel(spec.n, ell);
        case Family::complete_bipartite: return color_complete_bipartite(spec.m, spec.n, ell);
        case Family::complete_multipartite: return color_complete_multipartite(spec.parts, ell);
        case Family::hypercube: return color_hypercube(spec.t, ell);
        case Family::path:
        case Family::star:
        case Family::double_star:
        case Family::random_tree: return color_tree(generate(spec), ell);
        case Family::cycle:
        case Family::complete: {
            const Graph g = generate(spec);
            std::vector<Vertex> path(static_cast<std::size_t>(g.num_vertices()));
            for (Vertex v = 0; v < g.num_vertices(); ++v) path[static_cast<std::size_t>(v)] = v;
            return color_traceable(g, path, ell);
        }
        case Family::random_2connected:
            if (ell > 2) throw ParameterError("the 2-connected construction covers ell <= 2");
            return color_2connected(generate(spec));
    }
    throw ParameterError("unsupported family");
}

struct ColorArgs {
    FamilyFlags family;
    std::string input;
    std::string method;
    std::string second;
    std::vector<int> perm;
    std::string graph_out;
    std::string output;
    int ell = 2;
};

ConstructionReport color_input(const ColorArgs& args) {
    const Graph g = load_graph(args.input);
    const std::string& m = args.method;
    auto need_ell_at_most_2 = [&] {
        if (args.ell > 2) throw ParameterError("method '" + m + "' covers ell <= 2");
    };
    if (m == "traceable") {
        auto path = hamiltonian_path(g);
        if (!path) throw PreconditionError("graph has no Hamiltonian path");
        return color_traceable(g, *path, args.ell);
    }
    if (m == "tree") return color_tree(g, args.ell);
    if (m == "2connected") {
        need_ell_at_most_2();
        return color_2connected(g);
    }
    if (m == "join" || m == "cartesian") {
        need_ell_at_most_2();
        if (args.second.empty()) throw ParameterError("--second is required for method '" + m + "'");
        const Graph h = load_graph(args.second);
        return m == "join" ? color_join(g, h) : color_cartesian(g, h);
    }
    if (m == "permutation") {
        if (args.perm.empty()) throw ParameterError("--perm is required for method 'permutation'");
        auto path = hamiltonian_path(g);
        if (!path) throw PreconditionError("graph has no Hamiltonian path");
        return color_permutation_graph(g, *path, Permutation::from_one_based(args.perm), args.ell);
    }
    throw ParameterError("unknown method '" + m + "'");
}

int cmd_color(const ColorArgs& args, std::ostream& out, std::ostream& err) {
    const bool by_family = !args.family.family.empty();
    if (by_family == !args.input.empty()) throw ParameterError("give exactly one of --family or --input");
    if (!by_family && args.method.empty()) throw ParameterError("--method is required with --input");
    if (args.ell < 1) throw ParameterError("--ell must be >= 1");
    const ConstructionReport report = by_family ? color_family(args.family.spec(), args.ell) : color_input(args);

    const auto cert = verify_coloring(report.graph, report.coloring, args.ell, {.k = 1, .time_limit = std::nullopt, .keep_witnesses = false});
    emit(args.output, write_coloring(report.graph, report.coloring), out);
    if (!args.graph_out.empty()) write_file(args.graph_out, write_graph(report.graph));
    out << "theorem " << theorem_name(report.theorem) << '\n';
    out << "colors " << report.coloring.distinct_colors() << '\n';
    out << "claimed " << report.claimed_colors << '\n';
    out << "verified " << (cert.ok() ? "true" : "false") << '\n';
    if (!cert.ok()) {
        err << "constructed coloring failed verification";
        if (cert.failing_pair) err << " at pair " << cert.failing_pair->first << ' ' << cert.failing_pair->second;
        err << '\n';
        return kExitNegative;
    }
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, int ell, int k, double time_limit,
               std::ostream& out) {
    if (ell < 1) throw ParameterError("--ell must be >= 1");
    if (k < 1) throw ParameterError("--k must be >= 1");
    const Graph g = load_graph(graph_path);
    const EdgeColoring c = read_coloring(read_file(coloring_path), g);
    const auto cert = verify_coloring(g, c, ell, {.k = k, .time_limit = seconds_or_none(time_limit),
                                                  .keep_witnesses = false});
    switch (cert.status) {
        case VerifyStatus::verified: out << "verified true\n"; return kExitOk;
        case VerifyStatus::failed:
            out << "verified false\nfailing_pair " << cert.failing_pair->first << ' ' << cert.failing_pair->second
                << '\n';
            return kExitNegative;
        case VerifyStatus::inconclusive:
            out << "verified inconclusive\n";
            if (cert.timed_out_pair) {
                out << "timed_out_pair " << cert.timed_out_pair->first << ' ' << cert.timed_out_pair->second << '\n';
            }
            return kExitNegative;
    }
    return kExitNegative;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

int cmd_exact(const std::string& graph_path, int ell, int max_colors, double time_limit, int max_edges,
              const std::string& witness_path, std::ostream& out, std::ostream& err) {
    if (ell < 1) throw ParameterError("--ell must be >= 1");
    const Graph g = load_graph(graph_path);
    SearchBudget budget;
    budget.max_colors = max_colors;
    budget.time_limit = seconds_or_none(time_limit);
    budget.max_edges = max_edges;
    const ExactOutcome outcome = min_colors_exact(g, ell, budget);
    if (const auto* r = std::get_if<ExactResult>(&outcome)) {
        out << "min_colors " << r->min_colors << '\n';
        out << "colorings_examined " << r->colorings_examined << '\n';
        if (!witness_path.empty()) write_file(witness_path, write_coloring(g, r->witness));
        return kExitOk;
    }
    const auto& inc = std::get<Inconclusive>(outcome);
    out << "min_colors inconclusive\n";
    out << "exhausted_levels " << join_ints(inc.exhausted_levels) << '\n';
    out << "colorings_examined " << inc.colorings_examined << '\n';
    err << inc.reason << '\n';
    return kExitNegative;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    std::string theorem;
    std::vector<int> ells;
    int n_min = 0;
    int n_max = 0;
    int m_max = 3;
    int t_max = 4;
    std::vector<int> part_counts{3, 4};
    int max_total = 8;
    int count = 10;
    std::uint64_t seed = 1;
    int exact_edges = 14;
    double time_limit = 60;
    std::string output;
};

struct Row {
    std::string params;
    int ell = 0;
    std::function<ConstructionReport()> build;
};

void sorted_part_vectors(int t, int max_total, int min_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == t) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int p : cur) used += p;
    const int remaining = t - static_cast<int>(cur.size());
    for (int p = min_part; used + p * remaining <= max_total; ++p) {
        cur.push_back(p);
        sorted_part_vectors(t, max_total, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Row> table_rows(const TableArgs& a) {
    std::vector<Row> rows;
    auto ells = a.ells;
    const std::string& th = a.theorem;
    if (th == "bipartite") {
        if (ells.empty()) ells = {2, 3};
        const int n_max = a.n_max ? a.n_max : 10;
        for (int m = 1; m <= a.m_max; ++m) {
            for (int n = m; n <= n_max; ++n) {
                for (int ell : ells) {
                    rows.push_back({"m=" + std::to_string(m) + ";n=" + std::to_string(n), ell,
                                    [=] { return color_complete_bipartite(m, n, ell); }});
                }
            }
        }
    } else if (th == "multipartite") {
        if (ells.empty()) ells = {2};
        for (int t : a.part_counts) {
            std::vector<std::vector<int>> vectors;
            std::vector<int> cur;
            sorted_part_vectors(t, a.max_total, 1, cur, vectors);
            for (const auto& parts : vectors) {
                for (int ell : ells) {
                    std::string p = "parts=";
                    for (std::size_t i = 0; i < parts.size(); ++i) p += (i ? "," : "") + std::to_string(parts[i]);
                    rows.push_back({p, ell, [=] { return color_complete_multipartite(parts, ell); }});
                }
            }
        }
    } else if (th == "wheel") {
        if (ells.empty()) ells = {2};
        const int lo = a.n_min ? a.n_min : 3;
        const int hi = a.n_max ? a.n_max : 10;
        for (int n = lo; n <= hi; ++n) {
            for (int ell : ells) rows.push_back({"n=" + std::to_string(n), ell, [=] { return color_wheel(n, ell); }});
        }
    } else if (th == "cube") {
        if (ells.empty()) ells = {2, 3, 4, 5};
        for (int t = 1; t <= a.t_max; ++t) {
            for (int ell : ells) {
                rows.push_back({"t=" + std::to_string(t), ell, [=] { return color_hypercube(t, ell); }});
            }
        }
    } else if (th == "tree") {
        if (ells.empty()) ells = {2};
        const int lo = a.n_min ? a.n_min : 3;
        const int hi = a.n_max ? a.n_max : 10;
        for (int i = 0; i < a.count; ++i) {
            const int n = lo + i % (hi - lo + 1);
            const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
            for (int ell : ells) {
                rows.push_back({"n=" + std::to_string(n) + ";seed=" + std::to_string(seed), ell,
                                [=] { return color_tree(random_tree(n, seed), ell); }});
            }
        }
    } else {
        throw ParameterError("unknown theorem '" + th + "' (bipartite|multipartite|wheel|cube|tree)");
    }
    return rows;
}

std::string table_line(const Row& row, const TableArgs& a) {
    const ConstructionReport r = row.build();
    const auto cert = verify_coloring(r.graph, r.coloring, row.ell, {.k = 1, .time_limit = std::nullopt, .keep_witnesses = false});
    const bool exact_count = r.coloring.distinct_colors() == r.claimed_colors;

    std::string lower;
    bool lower_ok = true;
    bool inconclusive = false;
    if (r.claimed_colors <= 1) {
        lower = "1";
    } else if (r.graph.num_edges() > a.exact_edges) {
        lower = "skipped";
    } else {
        SearchBudget budget;
        budget.time_limit = seconds_or_none(a.time_limit);
        budget.max_edges = a.exact_edges;
        const auto lb = prove_lower_bound(r.graph, row.ell, r.claimed_colors - 1, budget);
        switch (lb.status) {
            case BoundStatus::proven: lower = std::to_string(r.claimed_colors); break;
            case BoundStatus::refuted:
                lower = "refuted";
                lower_ok = false;
                break;
            case BoundStatus::inconclusive:
                lower = "inconclusive";
                inconclusive = true;
                break;
        }
    }
    std::string status = "ok";
    if (!cert.ok() || !exact_count || !lower_ok) {
        status = "FAIL";
    } else if (inconclusive) {
        status = "inconclusive";
    }
    std::ostringstream line;
    line << row.params << ',' << row.ell << ',' << r.claimed_colors << ',' << (cert.ok() ? "true" : "false") << ','
         << lower << ',' << status;
    return line.str();
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    const auto rows = table_rows(a);
    std::string csv = "params,ell,claimed,verified,exact_lower_bound,status";
    bool failed = false;
    for (const Row& row : rows) {
        const std::string line = table_line(row, a);
        failed = failed || line.ends_with(",FAIL");
        csv += '\n' + line;
    }
    emit(a.output, csv, out);
    return failed ? kExitNegative : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance-ell proper-path colorings: construct, verify, search", "pcc"};
    app.require_subcommand(1);

    FamilyFlags gen_family;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "write a family graph as an edge list");
    gen_family.attach(gen, true);
    gen->add_option("-o,--output", gen_out, "output file (stdout if omitted)");

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "construct and verify a coloring");
    color_args.family.attach(color, false);
    color->add_option("--input", color_args.input, "graph file");
    color->add_option("--method", color_args.method, "traceable|tree|2connected|join|cartesian|permutation");
    color->add_option("--second", color_args.second, "second factor for join/cartesian");
    color->add_option("--perm", color_args.perm, "permutation of 1..n for the permutation graph")->delimiter(',');
    color->add_option("--graph-out", color_args.graph_out, "write the colored graph here");
    color->add_option("--ell", color_args.ell, "distance parameter")->required();
    color->add_option("-o,--output", color_args.output, "coloring file (stdout if omitted)");

    std::string verify_graph;
    std::string verify_coloring_path;
    int verify_ell = 0;
    int verify_k = 1;
    double verify_time = 0;
    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("--graph", verify_graph, "graph file")->required();
    verify->add_option("--coloring", verify_coloring_path, "coloring file")->required();
    verify->add_option("--ell", verify_ell, "distance parameter")->required();
    verify->add_option("--k", verify_k, "required number of disjoint paths");
    verify->add_option("--time-limit", verify_time, "seconds for the whole check (0 = none)");

    std::string exact_graph;
    std::string exact_witness;
    int exact_ell = 0;
    int exact_max_colors = 8;
    int exact_max_edges = 40;
    double exact_time = 60;
    auto* exact = app.add_subcommand("exact", "exhaustive minimum number of colors");
    exact->add_option("--graph", exact_graph, "graph file")->required();
    exact->add_option("--ell", exact_ell, "distance parameter")->required();
    exact->add_option("--max-colors", exact_max_colors, "largest color count to try");
    exact->add_option("--max-edges", exact_max_edges, "refuse larger graphs");
    exact->add_option("--time-limit", exact_time, "seconds (0 = none)");
    exact->add_option("--witness", exact_witness, "write the optimal coloring here");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "sweep a theorem's parameter grid as CSV");
    table->add_option("--theorem", table_args.theorem, "bipartite|multipartite|wheel|cube|tree")->required();
    table->add_option("--ells", table_args.ells, "ell values")->delimiter(',');
    table->add_option("--n-min", table_args.n_min, "smallest n (wheel, tree)");
    table->add_option("--n-max", table_args.n_max, "largest n (bipartite, wheel, tree)");
    table->add_option("--m-max", table_args.m_max, "largest small side (bipartite)");
    table->add_option("--t-max", table_args.t_max, "largest dimension (cube)");
    table->add_option("--part-counts", table_args.part_counts, "numbers of parts (multipartite)")->delimiter(',');
    table->add_option("--max-total", table_args.max_total, "largest vertex total (multipartite)");
    table->add_option("--count", table_args.count, "number of random trees");
    table->add_option("--seed", table_args.seed, "first random tree seed");
    table->add_option("--exact-edges", table_args.exact_edges, "run the exact lower bound up to this many edges");
    table->add_option("--time-limit", table_args.time_limit, "seconds per exact call (0 = none)");
    table->add_option("-o,--output", table_args.output, "CSV file (stdout if omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            emit(gen_out, write_graph(generate(gen_family.spec())), out);
            return kExitOk;
        }
        if (color->parsed()) return cmd_color(color_args, out, err);
        if (verify->parsed()) {
            return cmd_verify(verify_graph, verify_coloring_path, verify_ell, verify_k, verify_time, out);
        }
        if (exact->parsed()) {
            return cmd_exact(exact_graph, exact_ell, exact_max_colors, exact_time, exact_max_edges, exact_witness,
                             out, err);
        }
        if (table->parsed()) return cmd_table(table_args, out);
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitNegative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pcc::cli
