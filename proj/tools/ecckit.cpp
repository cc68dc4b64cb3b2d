// ecckit: edge clique covers for graphs with independence number two.
//
// Subcommands: classify, cover, exact, gen, verify. Exit codes: 0 success,
// 1 a verification found violations, 2 usage or input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecckit/classical.hpp"
#include "ecckit/gen.hpp"
#include "ecckit/io.hpp"
#include "ecckit/oracle.hpp"
#include "ecckit/report.hpp"
#include "ecckit/verify.hpp"
#include "ecckit/version.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int oracle_cap_from_env() {
    const char* env = std::getenv("ECCKIT_ORACLE_CAP");
    if (!env)
        return 12;
    try {
        std::size_t pos = 0;
        int cap = std::stoi(env, &pos);
        if (pos != std::string(env).size() || cap < 1)
            throw std::invalid_argument("range");
        return cap;
    } catch (const std::exception&) {
        throw ecckit::input_error("ECCKIT_ORACLE_CAP must be a positive integer");
    }
}

std::pair<int, int> parse_edge_option(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ecckit::input_error("--edge expects 'u,v'");
    try {
        int u = std::stoi(text.substr(0, comma));
        int v = std::stoi(text.substr(comma + 1));
        return {u, v};
    } catch (const std::exception&) {
        throw ecckit::input_error("--edge expects 'u,v'");
    }
}

int ceil_half(int x) { return (x + 1) / 2; }

struct CoverArgs {
    std::string path;
    std::string format = "edgelist";
    std::string method = "auto";
    std::string edge;
    bool want_oracle = false;
    bool json = false;
};

int run_cover(const CoverArgs& args) {
    using namespace ecckit;
    Graph g = load_graph(args.path, format_from_name(args.format));
    auto start = Clock::now();
    CoverReport report;

    if (args.method == "auto") {
        DispatchResult result = cover_dispatch_full(g);
        std::optional<int> oracle;
        if (args.want_oracle)
            oracle = exact_ecc(g, {oracle_cap_from_env(), 20'000'000ull}).ecc;
        report = make_cover_report(g, result, oracle, 0);
    } else {
        CliqueCover cover{g, {}};
        if (args.method == "no-dominating") {
            cover = cover_no_dominating(g);
            report.route = "NoDominatingEdge";
            report.bound = g.vertex_count();
            report.bound_name = "n";
        } else if (args.method == "diam3") {
            cover = cover_diam3(g);
            report.route = "Diam3";
            report.bound = ceil_half(g.vertex_count() + 1);
            report.bound_name = "ceil((n+1)/2)";
        } else if (args.method == "theorem1") {
            std::pair<int, int> edge;
            if (!args.edge.empty()) {
                edge = parse_edge_option(args.edge);
            } else {
                StructureReport rep = classify(g);
                if (rep.route != Route::Theorem1 || !rep.chosen_dominating_edge)
                    throw input_error("no dominating edge leaves diameter 3; pass --edge u,v");
                edge = *rep.chosen_dominating_edge;
            }
            auto [c, plan] = cover_theorem1(g, edge.first, edge.second);
            cover = std::move(c);
            report.route = "Theorem1";
            report.bound = g.vertex_count();
            report.bound_name = "n";
            report.budget_m = plan.budget_m;
            report.used_fallback = plan.used_fallback;
        } else if (args.method == "theorem8") {
            auto [c, state] = cover_theorem2(g);
            cover = std::move(c);
            report.route = "Theorem8Eligible";
            report.bound = g.vertex_count() + g.vertex_count() / 2;
            report.bound_name = "3n/2";
            report.f = compute_f(g, state.extended).f;
            report.warnings = state.warnings;
            int nonempty = 0;
            for (const Clique& cl : state.extended)
                if (!cl.empty())
                    ++nonempty;
            report.extended_cliques = nonempty;
            report.extra_cliques = static_cast<int>(state.d_prime.size());
        } else if (args.method == "fallback") {
            cover = cover_fallback(g);
            report.route = "Fallback";
            report.bound =
                g.vertex_count() + static_cast<int>(dominating_edges(g).size());
            report.bound_name = "n+dominating";
        } else {
            throw input_error("unknown cover method '" + args.method + "'");
        }
        report.n = g.vertex_count();
        report.edge_count = g.edge_count();
        report.cover_size = static_cast<int>(cover.cliques.size());
        report.valid = verify_cover(g, cover).valid;
        if (args.want_oracle)
            report.oracle_ecc = exact_ecc(g, {oracle_cap_from_env(), 20'000'000ull}).ecc;
        report.cliques = cover.cliques;
    }
    report.elapsed_ms = ms_since(start);
    std::cout << (args.json ? cover_report_json(report) + "\n" : cover_report_text(report));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge clique covers for graphs with independence number two"};
    app.require_subcommand(1);
    int exit_code = 0;

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "structural report for a graph");
    std::string cl_path, cl_format = "edgelist";
    bool cl_json = false;
    classify_cmd->add_option("path", cl_path, "graph file")->required();
    classify_cmd->add_option("--format", cl_format, "edgelist|dimacs");
    classify_cmd->add_flag("--json", cl_json, "emit JSON");
    classify_cmd->callback([&] {
        ecckit::Graph g = ecckit::load_graph(cl_path, ecckit::format_from_name(cl_format));
        ecckit::StructureReport rep = ecckit::classify(g);
        std::cout << (cl_json ? ecckit::structure_report_json(rep) + "\n"
                              : ecckit::structure_report_text(rep));
    });

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "construct and check an edge clique cover");
    CoverArgs cover_args;
    cover_cmd->add_option("path", cover_args.path, "graph file")->required();
    cover_cmd->add_option("--format", cover_args.format, "edgelist|dimacs");
    cover_cmd->add_option("--method", cover_args.method,
                          "auto|no-dominating|diam3|theorem1|theorem8|fallback");
    cover_cmd->add_option("--edge", cover_args.edge, "dominating edge 'u,v' for theorem1");
    cover_cmd->add_flag("--oracle", cover_args.want_oracle, "also compute the exact optimum");
    cover_cmd->add_flag("--json", cover_args.json, "emit JSON");
    cover_cmd->callback([&] { exit_code = run_cover(cover_args); });

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "exact minimum edge clique cover");
    std::string ex_path, ex_format = "edgelist";
    int ex_max_n = 0;
    std::uint64_t ex_budget = 20'000'000ull;
    bool ex_json = false;
    exact_cmd->add_option("path", ex_path, "graph file")->required();
    exact_cmd->add_option("--format", ex_format, "edgelist|dimacs");
    exact_cmd->add_option("--max-n", ex_max_n, "vertex cap (default 12 or ECCKIT_ORACLE_CAP)");
    exact_cmd->add_option("--budget", ex_budget, "node expansion budget");
    exact_cmd->add_flag("--json", ex_json, "emit JSON");
    exact_cmd->callback([&] {
        ecckit::Graph g = ecckit::load_graph(ex_path, ecckit::format_from_name(ex_format));
        int cap = ex_max_n > 0 ? ex_max_n : oracle_cap_from_env();
        auto start = Clock::now();
        ecckit::ExactResult result = ecckit::exact_ecc(g, {cap, ex_budget});
        std::int64_t elapsed = ms_since(start);
        std::cout << (ex_json ? ecckit::exact_report_json(result, elapsed) + "\n"
                              : ecckit::exact_report_text(result, elapsed));
    });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    std::string gen_kind = "alpha2", gen_out, gen_format = "edgelist";
    int gen_n = 8;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 0;
    bool gen_json = false;
    gen_cmd->add_option("--kind", gen_kind, "alpha2|theorem1|theorem8")->required();
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--density", gen_density, "complement edge-keep probability");
    gen_cmd->add_option("--seed", gen_seed, "64-bit seed");
    gen_cmd->add_option("-o,--output", gen_out, "write the graph here instead of stdout");
    gen_cmd->add_option("--format", gen_format, "edgelist|dimacs");
    gen_cmd->add_flag("--json", gen_json, "emit JSON");
    gen_cmd->callback([&] {
        using namespace ecckit;
        GenSpec spec{gen_n, gen_density, gen_seed, GenKind::Alpha2};
        std::optional<std::pair<int, int>> apex_edge;
        Graph g(1, {});
        if (gen_kind == "alpha2") {
            g = gen_alpha_two(spec);
        } else if (gen_kind == "theorem1") {
            spec.kind = GenKind::Theorem1;
            auto [graph, edge] = gen_theorem1_instance(spec);
            g = std::move(graph);
            apex_edge = edge;
        } else if (gen_kind == "theorem8") {
            spec.kind = GenKind::Theorem8Eligible;
            g = gen_theorem8_instance(spec);
        } else {
            throw input_error("unknown generator kind '" + gen_kind + "'");
        }
        if (gen_json) {
            nlohmann::ordered_json j;
            j["kind"] = gen_kind;
            j["n"] = g.vertex_count();
            j["seed"] = gen_seed;
            j["density"] = gen_density;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (auto [u, v] : g.edges())
                arr.push_back({u, v});
            j["edges"] = arr;
            if (apex_edge)
                j["dominating_edge"] = {apex_edge->first, apex_edge->second};
            j["version"] = kVersion;
            std::cout << j.dump() << "\n";
        }
        auto emit = [&](std::ostream& out) {
            if (apex_edge)
                out << "# dominating_edge " << apex_edge->first << " " << apex_edge->second
                    << "\n";
            write_graph(g, out, format_from_name(gen_format));
        };
        if (!gen_out.empty()) {
            std::ofstream out(gen_out);
            if (!out)
                throw input_error("cannot write '" + gen_out + "'");
            emit(out);
        } else if (!gen_json) {
            emit(std::cout);
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive conformance sweep");
    int ver_n = 6, ver_jobs = 1;
    std::string ver_checks = "bounds,oracle";
    std::string ver_dump = "ecckit-counterexample.edgelist";
    bool ver_json = false;
    verify_cmd->add_option("--enumerate", ver_n, "check all alpha-2 graphs with n <= this")
        ->required();
    verify_cmd->add_option("--checks", ver_checks, "comma list of bounds,oracle");
    verify_cmd->add_option("--jobs", ver_jobs, "worker count");
    verify_cmd->add_option("--dump", ver_dump, "counterexample output path");
    verify_cmd->add_flag("--json", ver_json, "emit JSON");
    verify_cmd->callback([&] {
        ecckit::VerifyOptions opts;
        opts.n_max = ver_n;
        opts.jobs = ver_jobs;
        opts.check_bounds = ver_checks.find("bounds") != std::string::npos;
        opts.check_oracle = ver_checks.find("oracle") != std::string::npos;
        if (!opts.check_bounds && !opts.check_oracle)
            throw ecckit::input_error("--checks must name bounds and/or oracle");
        opts.oracle_cap = oracle_cap_from_env();
        opts.dump_path = ver_dump;
        auto start = Clock::now();
        ecckit::VerifySummary summary = ecckit::run_verify(opts);
        std::int64_t elapsed = ms_since(start);
        std::cout << (ver_json ? ecckit::verify_summary_json(summary, elapsed) + "\n"
                               : ecckit::verify_summary_text(summary, elapsed));
        exit_code = summary.all_passed() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ecckit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
