#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgsep/mgsep.hpp"

namespace {

mgsep::MixedGraph load_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw mgsep::Error("cannot open graph file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return mgsep::parse_graph_file(text);
}

mgsep::VertexSet split_names(const std::string& list) {
    mgsep::VertexSet out;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        std::size_t first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        std::size_t last = item.find_last_not_of(" \t");
        out.insert(item.substr(first, last - first + 1));
    }
    return out;
}

std::string join(const mgsep::VertexSet& set) {
    std::string out;
    for (const std::string& v : set) {
        if (!out.empty()) out += ",";
        out += v;
    }
    return out;
}

nlohmann::json names_json(const mgsep::VertexSet& set) {
    return nlohmann::json(std::vector<std::string>(set.begin(), set.end()));
}

const char* link_token(const mgsep::WalkStep& step) {
    if (step.edge.kind == mgsep::EdgeKind::Bidirected) return "<->";
    return step.forward ? "->" : "<-";
}

nlohmann::json witness_json(const mgsep::SeparationDecision& d) {
    nlohmann::json w;
    if (d.separated) {
        const mgsep::Certificate& cert = d.certificate();
        w["kind"] = "certificate";
        w["a_star"] = names_json(cert.a_star);
        w["b_star"] = names_json(cert.b_star);
        w["v_star"] = names_json(cert.v_star);
    } else {
        const mgsep::Walk& walk = d.connecting_walk();
        w["kind"] = "walk";
        w["start"] = walk.start;
        nlohmann::json steps = nlohmann::json::array();
        for (const mgsep::WalkStep& step : walk.steps) {
            steps.push_back({{"from", step.from()}, {"link", link_token(step)}, {"to", step.to()}});
        }
        w["steps"] = std::move(steps);
    }
    return w;
}

struct QueryArgs {
    std::string graph_path;
    std::string a, b, c;
    std::string criterion = "district";
    bool json_out = false;
    bool timing = false;
    std::size_t oracle_max_edges = mgsep::kDefaultOracleMaxEdges;
};

int run_query(const QueryArgs& args) {
    mgsep::MixedGraph g = load_graph(args.graph_path);
    mgsep::SeparationQuery q{split_names(args.a), split_names(args.b), split_names(args.c)};

    auto t0 = std::chrono::steady_clock::now();
    mgsep::SeparationDecision d;
    if (args.criterion == "all") {
        d = mgsep::decide_all(g, q, args.oracle_max_edges);
    } else {
        mgsep::Criterion crit = mgsep::Criterion::District;
        if (args.criterion == "walk") crit = mgsep::Criterion::Walk;
        else if (args.criterion == "augment") crit = mgsep::Criterion::Augmentation;
        else if (args.criterion == "oracle") crit = mgsep::Criterion::Oracle;
        d = mgsep::decide(g, q, crit, args.oracle_max_edges);
    }
    auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
            .count();

    if (args.json_out) {
        nlohmann::json out;
        out["separated"] = d.separated;
        out["criterion"] = mgsep::criterion_name(d.criterion);
        out["a"] = names_json(q.a);
        out["b"] = names_json(q.b);
        out["c"] = names_json(q.c);
        out["witness"] = witness_json(d);
        if (args.timing) out["timing_micros"] = micros;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "separated: " << (d.separated ? "true" : "false") << "\n";
        std::cout << "criterion: " << mgsep::criterion_name(d.criterion) << "\n";
        if (d.separated) {
            const mgsep::Certificate& cert = d.certificate();
            std::cout << "a_star: " << join(cert.a_star) << "\n";
            std::cout << "b_star: " << join(cert.b_star) << "\n";
            std::cout << "v_star: " << join(cert.v_star) << "\n";
        } else {
            std::cout << "walk: " << mgsep::format_walk(d.connecting_walk()) << "\n";
        }
        if (args.timing) std::cout << "timing_micros: " << micros << "\n";
    }
    return d.separated ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-separation queries on mixed graphs"};
    app.require_subcommand(1);

    QueryArgs query_args;
    CLI::App* query = app.add_subcommand("query", "decide whether a is m-separated from b given c");
    query->add_option("graph", query_args.graph_path, "graph file ('-' for stdin)")->required();
    query->add_option("--a", query_args.a, "comma-separated vertex names")->required();
    query->add_option("--b", query_args.b, "comma-separated vertex names")->required();
    query->add_option("--c", query_args.c, "comma-separated vertex names (may be empty)");
    query->add_option("--criterion", query_args.criterion, "decision procedure")
        ->check(CLI::IsMember({"walk", "augment", "district", "oracle", "all"}));
    query->add_flag("--json", query_args.json_out, "emit the result as JSON");
    query->add_flag("--timing", query_args.timing, "include elapsed microseconds in the output");
    query->add_option("--oracle-max-edges", query_args.oracle_max_edges,
                      "edge cap for the exhaustive procedure");

    std::string reduce_path, reduce_a, reduce_b, reduce_c;
    CLI::App* reduce = app.add_subcommand("reduce", "emit the reduced graph for a query as DOT");
    reduce->add_option("graph", reduce_path, "graph file ('-' for stdin)")->required();
    reduce->add_option("--a", reduce_a, "comma-separated vertex names")->required();
    reduce->add_option("--b", reduce_b, "comma-separated vertex names")->required();
    reduce->add_option("--c", reduce_c, "comma-separated vertex names (may be empty)");

    std::string augment_path;
    CLI::App* augment = app.add_subcommand("augment", "emit the augmented graph as DOT");
    augment->add_option("graph", augment_path, "graph file ('-' for stdin)")->required();

    std::string dot_path;
    CLI::App* dot = app.add_subcommand("dot", "emit the mixed graph itself as DOT");
    dot->add_option("graph", dot_path, "graph file ('-' for stdin)")->required();

    mgsep::RandomGraphOptions random_opts;
    CLI::App* random = app.add_subcommand("random", "generate a seeded random graph");
    random->add_option("--n", random_opts.n, "vertex count")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    random->add_option("--p-dir", random_opts.p_directed, "directed edge probability")
        ->check(CLI::Range(0.0, 1.0));
    random->add_option("--p-bi", random_opts.p_bidirected, "bidirected edge probability")
        ->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", random_opts.seed, "generator seed");

    mgsep::SweepOptions sweep;
    bool sweep_witnesses = false;
    CLI::App* validate = app.add_subcommand("validate", "cross-criterion equivalence sweep");
    validate->add_option("--graphs", sweep.graphs, "number of graphs");
    validate->add_option("--n", sweep.n, "vertex count (upper bound when --n-min is set)");
    validate->add_option("--n-min", sweep.n_min, "cycle sizes from here up to --n");
    validate->add_option("--seed", sweep.seed, "sweep seed");
    validate->add_option("--p-dir", sweep.p_directed, "directed edge probability")
        ->check(CLI::Range(0.0, 1.0));
    validate->add_option("--p-bi", sweep.p_bidirected, "bidirected edge probability")
        ->check(CLI::Range(0.0, 1.0));
    validate->add_option("--c-samples", sweep.c_samples,
                         "conditioning sets per pair (0: every subset)");
    validate->add_option("--max-edges", sweep.max_edges, "redraw graphs denser than this (0: off)");
    validate->add_option("--oracle-max-edges", sweep.oracle_max_edges,
                         "also run the exhaustive procedure up to this edge count (0: off)");
    validate->add_flag("--witnesses", sweep_witnesses, "revalidate every witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*query) return run_query(query_args);
        if (*reduce) {
            mgsep::MixedGraph g = load_graph(reduce_path);
            mgsep::SeparationQuery q{split_names(reduce_a), split_names(reduce_b),
                                     split_names(reduce_c)};
            std::cout << mgsep::to_dot(mgsep::build_reduced_graph(g, q));
            return 0;
        }
        if (*augment) {
            std::cout << mgsep::to_dot(mgsep::augmented_graph(load_graph(augment_path)));
            return 0;
        }
        if (*dot) {
            std::cout << mgsep::to_dot(load_graph(dot_path));
            return 0;
        }
        if (*random) {
            std::cout << mgsep::serialize_graph_file(mgsep::random_graph(random_opts));
            return 0;
        }
        if (*validate) {
            sweep.check_witnesses = sweep_witnesses;
            mgsep::SweepReport report = mgsep::run_sweep(sweep);
            std::cout << "graphs_tested: " << report.graphs_tested << "\n";
            std::cout << "queries_tested: " << report.queries_tested << "\n";
            std::cout << "oracle_queries: " << report.oracle_queries << "\n";
            std::cout << "disagreements: " << report.disagreements << "\n";
            std::cout << "witness_failures: " << report.witness_failures << "\n";
            if (!report.first_failure.empty()) {
                std::cerr << "first failure:\n" << report.first_failure << "\n";
            }
            return report.clean() ? 0 : 1;
        }
    } catch (const mgsep::CriterionDisagreementError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mgsep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
