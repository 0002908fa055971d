// rdtool: construct, analyze, verify, and census for rainbow disconnection.
//
// Exit codes: 0 success, 1 mathematical verification failed, 2 usage or
// input error. Outputs are byte-identical across identical invocations
// unless --timestamps is given.

#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rd/census.hpp"
#include "rd/connectivity.hpp"
#include "rd/constructions.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/error.hpp"
#include "rd/graph.hpp"
#include "rd/json_io.hpp"
#include "rd/rainbow.hpp"

namespace {

using nlohmann::json;

std::string iso_now() {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Options {
    bool timestamps = false;

    std::vector<int> even_extremal;
    std::vector<int> peel;
    std::vector<int> min_size;
    std::string out_prefix;
    std::string dot_path;

    std::string rd_graph;
    int budget = rd::kDefaultEdgeBudget;

    std::string bounds_graph;

    int factorize_n = 0;

    int census_max_n = 6;
    std::string census_format = "csv";
    std::string census_out;
    std::string cache_dir = ".rdtool-cache";
    bool no_cache = false;
    int threads = 0;

    std::string verify_graph;
    std::string verify_coloring;
    int star_hub = -1;
};

void stamp(json& j, const Options& opt) {
    if (opt.timestamps) j["generated_at"] = iso_now();
}

void emit(const json& j, const Options& opt) {
    json out = j;
    stamp(out, opt);
    std::cout << out.dump(2) << '\n';
}

int run_construct(const Options& opt) {
    const int requested = static_cast<int>(!opt.even_extremal.empty()) +
                          static_cast<int>(!opt.peel.empty()) +
                          static_cast<int>(!opt.min_size.empty());
    if (requested != 1) {
        std::cerr << "construct: give exactly one of --even-extremal, --peel, --min-size\n";
        return 2;
    }

    json summary;
    if (!opt.even_extremal.empty()) {
        const rd::ExtremalWitness w = rd::extremal_even(opt.even_extremal[0], opt.even_extremal[1]);
        json gj = rd::graph_to_json(w.graph);
        json cj = rd::coloring_to_json(w.coloring);
        stamp(gj, opt);
        stamp(cj, opt);
        rd::write_text_file(opt.out_prefix + ".graph.json", gj.dump(2) + "\n");
        rd::write_text_file(opt.out_prefix + ".coloring.json", cj.dump(2) + "\n");
        summary = json{{"graph", opt.out_prefix + ".graph.json"},
                       {"coloring", opt.out_prefix + ".coloring.json"},
                       {"edges", w.graph.edge_count()},
                       {"hub", w.hub},
                       {"size_formula_value", w.size_formula_value}};
        if (!opt.dot_path.empty())
            rd::write_text_file(opt.dot_path, rd::to_dot(w.graph, &w.coloring));
    } else if (!opt.peel.empty()) {
        const rd::PeelResult p = rd::peel_factorable(opt.peel[0], opt.peel[1]);
        json pj = rd::peel_to_json(p);
        stamp(pj, opt);
        rd::write_text_file(opt.out_prefix + ".peel.json", pj.dump(2) + "\n");
        summary = json{{"peel", opt.out_prefix + ".peel.json"},
                       {"edges", p.graph.edge_count()},
                       {"hub", p.hub},
                       {"factors", p.factorization.factors.size()},
                       {"addable_pairs", p.addable_matching.size()}};
        if (!opt.dot_path.empty()) {
            // color each factor as its own class for visualization
            std::vector<int> colors(p.graph.edges.size(), 0);
            for (size_t r = 0; r < p.factorization.factors.size(); ++r)
                for (int id : p.factorization.factors[r])
                    colors[static_cast<size_t>(id)] = static_cast<int>(r) + 1;
            const rd::EdgeColoring by_factor{static_cast<int>(p.factorization.factors.size()),
                                             std::move(colors)};
            rd::write_text_file(opt.dot_path, rd::to_dot(p.graph, &by_factor));
        }
    } else {
        const rd::Graph g = rd::min_size_rd(opt.min_size[0], opt.min_size[1]);
        json gj = rd::graph_to_json(g);
        stamp(gj, opt);
        rd::write_text_file(opt.out_prefix + ".graph.json", gj.dump(2) + "\n");
        summary = json{{"graph", opt.out_prefix + ".graph.json"}, {"edges", g.edge_count()}};
        if (!opt.dot_path.empty()) rd::write_text_file(opt.dot_path, rd::to_dot(g));
    }
    emit(summary, opt);
    return 0;
}

int run_rd(const Options& opt) {
    const rd::Graph g = rd::graph_from_json(rd::load_json_file(opt.rd_graph));
    const rd::RdReport report = rd::rd_exact(g, opt.budget);
    emit(rd::report_to_json(report), opt);
    return 0;
}

int run_bounds(const Options& opt) {
    const rd::Graph g = rd::graph_from_json(rd::load_json_file(opt.bounds_graph));
    const rd::ConnectivityProfile profile = rd::connectivity_profile(g);
    const json j{{"lambda", profile.lambda_global},
                 {"lambda_plus", profile.lambda_plus},
                 {"mader_bound", rd::mader_lambda_plus_bound(g)},
                 {"chi_prime_upper", rd::vizing_color(g).k}};
    emit(j, opt);
    return 0;
}

int run_factorize(const Options& opt) {
    const rd::Graph kn = rd::complete_graph(opt.factorize_n);
    const rd::OneFactorization f = rd::one_factorize_complete_even(opt.factorize_n);
    emit(rd::factorization_to_json(kn, f), opt);
    return 0;
}

int run_census(const Options& opt) {
    if (opt.census_max_n >= 7)
        std::cerr << "census: n=7 solves 853 graphs exactly; expect a long run on first use\n";
    rd::CensusOptions census_options;
    census_options.threads = opt.threads;
    census_options.cache_dir = opt.no_cache ? std::string{} : opt.cache_dir;

    bool ok = true;
    json all = json::array();
    std::string csv;
    for (int n = 2; n <= opt.census_max_n; ++n) {
        const rd::CensusTable table = rd::run_census(n, census_options);
        const rd::RelationReport relations = rd::verify_relations(table);
        for (const rd::CensusRow& row : table.rows) ok = ok && row.pass;
        ok = ok && relations.all_ok;
        if (opt.census_format == "json") {
            json entry = rd::census_to_json(table, /*embed_witnesses=*/true);
            entry["relations"] = rd::relations_to_json(relations);
            all.push_back(std::move(entry));
        } else {
            const std::string block = rd::census_to_csv(table);
            csv += n == 2 ? block : block.substr(block.find('\n') + 1);  // header once
        }
    }

    std::string payload;
    if (opt.census_format == "json") {
        json out = json{{"tables", all}, {"ok", ok}};
        stamp(out, opt);
        payload = out.dump(2) + "\n";
    } else {
        payload = opt.timestamps ? "# generated_at " + iso_now() + "\n" + csv : csv;
    }
    if (opt.census_out.empty())
        std::cout << payload;
    else
        rd::write_text_file(opt.census_out, payload);
    return ok ? 0 : 1;
}

int run_verify(const Options& opt) {
    const rd::Graph g = rd::graph_from_json(rd::load_json_file(opt.verify_graph));
    const rd::EdgeColoring c = rd::coloring_from_json(rd::load_json_file(opt.verify_coloring));
    const bool star = opt.star_hub >= 0;
    const bool ok = star ? rd::star_rd_check(g, c, opt.star_hub) : rd::is_rd_coloring(g, c);
    emit(json{{"check", star ? "star" : "full"}, {"ok", ok}}, opt);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"rainbow disconnection numbers: exact solver, constructions, census"};
    app.require_subcommand(1);
    app.add_flag("--timestamps", opt.timestamps, "include generation timestamps in outputs");

    CLI::App* construct = app.add_subcommand("construct", "build a witness graph (+ coloring)");
    construct->add_option("--even-extremal", opt.even_extremal, "N K: maximum-size graph with rd = K (N even)")
        ->expected(2);
    construct->add_option("--peel", opt.peel, "N K: peel K_N to a K-regular 1-factorable graph")
        ->expected(2);
    construct->add_option("--min-size", opt.min_size, "N K: minimum-size graph with rd = K")
        ->expected(2);
    construct->add_option("--out", opt.out_prefix, "output path prefix")->required();
    construct->add_option("--dot", opt.dot_path, "also write a DOT file colored by class");

    CLI::App* rd_cmd = app.add_subcommand("rd", "exact rainbow disconnection number of a graph");
    rd_cmd->add_option("graph", opt.rd_graph, "graph JSON file")->required();
    rd_cmd->add_option("--budget", opt.budget, "edge budget for the exact search");

    CLI::App* bounds = app.add_subcommand("bounds", "connectivity and coloring bounds, no search");
    bounds->add_option("graph", opt.bounds_graph, "graph JSON file")->required();

    CLI::App* factorize = app.add_subcommand("factorize", "circle-method 1-factorization of K_N");
    factorize->add_option("n", opt.factorize_n, "even order N")->required();

    CLI::App* census = app.add_subcommand("census", "exhaustive t/s census vs formulas");
    census->add_option("--max-n", opt.census_max_n, "largest order to census (<= 7)");
    census->add_option("--format", opt.census_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--out", opt.census_out, "write to file instead of stdout");
    census->add_option("--cache-dir", opt.cache_dir, "census cache directory");
    census->add_flag("--no-cache", opt.no_cache, "disable the census cache");
    census->add_option("--threads", opt.threads, "worker threads (0 = auto)");

    CLI::App* verify = app.add_subcommand("verify", "check a rainbow disconnection coloring");
    verify->add_option("graph", opt.verify_graph, "graph JSON file")->required();
    verify->add_option("coloring", opt.verify_coloring, "coloring JSON file")->required();
    verify->add_option("--star-hub", opt.star_hub, "verify via the star shortcut around this hub");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; any usage error is 2
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (rd_cmd->parsed()) return run_rd(opt);
        if (bounds->parsed()) return run_bounds(opt);
        if (factorize->parsed()) return run_factorize(opt);
        if (census->parsed()) return run_census(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const rd::error& err) {
        std::cerr << "error [" << rd::errc_name(err.code()) << "]: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}
