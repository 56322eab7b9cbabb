#include "cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "sqcolor/discharging.hpp"
#include "sqcolor/graph_io.hpp"
#include "sqcolor/testkit.hpp"
#include "sqcolor/solve8.hpp"

namespace sqcolor::cli {

namespace {

std::string girth_text(const Girth& gi) { return gi ? std::to_string(*gi) : "inf"; }

bool has_petersen_component(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        auto dist = bfs_distances(g, static_cast<Vertex>(s));
        std::vector<Vertex> comp;
        for (std::size_t v = 0; v < dist.size(); ++v)
            if (dist[v] >= 0) {
                seen[v] = 1;
                comp.push_back(static_cast<Vertex>(v));
            }
        if (comp.size() == 10 && is_petersen(induced_subgraph(g, comp))) return true;
    }
    return false;
}

/// Strongest solver whose preconditions hold, or an empty string after reporting why none does.
std::string select_solver(const Graph& g, const ListAssignment& lists, std::ostream& err) {
    if (g.max_degree() > 3) {
        err << "NotSubcubic: maximum degree = " << g.max_degree() << '\n';
        return {};
    }
    if (g.vertex_count() == 0) return "8";
    const Girth gi = girth(g);
    const Rational m = mad_exact(g);
    const std::size_t k = lists.min_size();
    err << "auto: girth = " << girth_text(gi) << ", mad = " << m << ", shortest list = " << k << '\n';
    if ((!gi || *gi >= 7) && m < Rational(18, 7) && k >= 6) return "6";
    if (m < Rational(14, 5) && k >= 7) return "7";
    if (k >= 8) {
        if (!has_petersen_component(g)) return "8";
        err << "PetersenInput: a component is the Petersen graph\n";
        return {};
    }
    err << "no solver applies: need lists of size >= 8, or >= 7 with mad < 14/5, or >= 6 with mad < 18/7 and girth >= 7\n";
    return {};
}

}  // namespace

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err) {
    LabeledGraph lg;
    ListAssignment lists;
    try {
        if (!config.input.empty() && config.input.front() == '@') {
            lg = with_default_labels(gen_named(config.input.substr(1)));
        } else {
            std::ifstream in(config.input);
            if (!in) {
                err << "cannot open '" << config.input << "'\n";
                return kBadInput;
            }
            lg = read_edge_list(in, false);
        }
        const int sources = config.lists_path.has_value() + config.uniform_k.has_value() + config.random_k.has_value();
        if (sources != 1) {
            err << "exactly one of --lists, --uniform, --random is required\n";
            return kBadInput;
        }
        const std::size_t n = lg.graph.vertex_count();
        if (config.lists_path) {
            std::ifstream in(*config.lists_path);
            if (!in) {
                err << "cannot open '" << *config.lists_path << "'\n";
                return kBadInput;
            }
            try {
                lists = read_list_assignment(in, lg);
            } catch (const ParseError& e) {
                err << *config.lists_path << ": " << e.what() << '\n';
                return kBadInput;
            }
        } else if (config.uniform_k) {
            if (*config.uniform_k < 0) {
                err << "--uniform needs k >= 0\n";
                return kBadInput;
            }
            lists = ListAssignment::uniform(n, *config.uniform_k);
        } else {
            if (*config.random_k < 0) {
                err << "--random needs k >= 0\n";
                return kBadInput;
            }
            std::mt19937_64 rng(config.seed);
            lists = random_lists(n, *config.random_k, 3 * *config.random_k, rng);
        }
    } catch (const ParseError& e) {
        err << config.input << ": " << e.what() << '\n';
        return kBadInput;
    } catch (const TestkitError& e) {
        err << e.what() << '\n';
        return kBadInput;
    } catch (const GraphError& e) {
        err << e.what() << '\n';
        return kBadInput;
    }

    const Graph& g = lg.graph;
    std::string solver = config.solver;
    if (solver == "auto") {
        solver = select_solver(g, lists, err);
        if (solver.empty()) return kPrecondition;
        err << "auto: selected solver " << solver << '\n';
    }

    Coloring coloring;
    Trace trace;
    DecomposeTrace steps;
    try {
        if (solver == "8") {
            coloring = solve8(g, lists, &trace);
        } else if (solver == "7") {
            coloring = solve7(g, lists, nullptr, &steps);
        } else if (solver == "6") {
            coloring = solve6(g, lists, nullptr, &steps);
        } else if (solver == "oracle") {
            auto found = exact_list_color(square(g), lists);
            if (!found) {
                err << "Unsat: no proper list coloring of the square exists\n";
                return kPrecondition;
            }
            coloring = std::move(*found);
        } else {
            err << "unknown solver '" << solver << "'\n";
            return kBadInput;
        }
    } catch (const SolveError& e) {
        err << e.what() << '\n';
        if (e.is_internal()) {
            err << e.trace();
            return kInternal;
        }
        return kPrecondition;
    }

    if (config.verify) {
        if (auto bad = verify_square_coloring(g, lists, coloring)) {
            err << "verification failed: " << bad->message() << '\n';
            return kInternal;
        }
        err << "verified: proper list coloring of the square\n";
    }
    write_coloring(out, lg, coloring);

    if (config.trace_path) {
        std::ofstream tf(*config.trace_path);
        if (!tf) {
            err << "cannot write '" << *config.trace_path << "'\n";
            return kBadInput;
        }
        if (solver == "8") tf << trace.render(lg.labels);
        else if (solver == "7" || solver == "6") tf << render_decompose_trace(steps, coloring, lg.labels);
    }
    return kOk;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"List coloring of squares of subcubic graphs"};
    RunConfig config;
    app.add_option("input", config.input, "Edge-list file, or @name for a built-in fixture")->required();
    app.add_option("--lists", config.lists_path, "List file with lines `label: c1 c2 ...`");
    app.add_option("--uniform", config.uniform_k, "Give every vertex the list {1..k}");
    std::vector<std::uint64_t> random;
    app.add_option("--random", random, "k seed: each list a uniform k-subset of {1..3k}")->expected(2);
    app.add_option("--solver", config.solver, "auto, 8, 7, 6 or oracle")
        ->check(CLI::IsMember({"auto", "8", "7", "6", "oracle"}));
    app.add_flag("--verify", config.verify, "Re-check the output coloring");
    app.add_option("--trace", config.trace_path, "Write the decision log to this file");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }
    if (!random.empty()) {
        config.random_k = static_cast<int>(random[0]);
        config.seed = random[1];
    }
    return run_cli(config, out, err);
}

}  // namespace sqcolor::cli
