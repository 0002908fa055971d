#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <string>
#include <vector>

#include "rd/census.hpp"
#include "rd/constructions.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/json_io.hpp"
#include "rd/rainbow.hpp"

using nlohmann::json;
using rd::EdgeColoring;
using rd::Graph;

namespace fs = std::filesystem;

namespace {

Graph cycle5() { return rd::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

}  // namespace

TEST_CASE("graph json round trip") {
    const Graph g = cycle5();
    const json j = rd::graph_to_json(g);
    CHECK(j.at("n") == 5);
    CHECK(j.at("edges").size() == 5);
    CHECK(rd::graph_from_json(j) == g);
}

TEST_CASE("graph json reader canonicalizes edge order and orientation") {
    const json j{{"n", 3}, {"edges", json::array({json::array({2, 1}), json::array({0, 2})})}};
    const Graph g = rd::graph_from_json(j);
    CHECK(g.edges == std::vector<rd::VertexPair>{{0, 2}, {1, 2}});
}

TEST_CASE("graph json reader rejects malformed documents") {
    CHECK_THROWS_WITH_AS(rd::graph_from_json(json::array()), "invalid input: graph document must be a JSON object",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::graph_from_json(json{{"edges", json::array()}}),
                         "invalid input: missing field \"n\"", std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::graph_from_json(json{{"n", "three"}, {"edges", json::array()}}),
                         "invalid input: field \"n\" must be an integer", std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::graph_from_json(json{{"n", 3}}), "invalid input: missing field \"edges\"",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::graph_from_json(json{{"n", 3}, {"edges", 7}}),
                         "invalid input: field \"edges\" must be an array", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        rd::graph_from_json(json{{"n", 3}, {"edges", json::array({json::array({0, 1, 2})})}}),
        "invalid input: edges[0] must be a pair of integers", std::runtime_error);

    // semantic validation routes through the graph builder
    CHECK_THROWS_AS(rd::graph_from_json(json{{"n", 3}, {"edges", json::array({json::array({0, 3})})}}),
                    rd::error);
    CHECK_THROWS_AS(rd::graph_from_json(
                        json{{"n", 3}, {"edges", json::array({json::array({0, 1}), json::array({1, 0})})}}),
                    rd::error);
}

TEST_CASE("coloring json round trip and validation") {
    const EdgeColoring c{3, {1, 2, 3, 3, 2}};
    const json j = rd::coloring_to_json(c);
    CHECK(rd::coloring_from_json(j) == c);

    CHECK_THROWS_WITH_AS(rd::coloring_from_json(json{{"colors", json::array()}}),
                         "invalid input: missing field \"k\"", std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::coloring_from_json(json{{"k", 2}}), "invalid input: missing field \"colors\"",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::coloring_from_json(json{{"k", 2}, {"colors", json::array({0})}}),
                         "invalid input: colors[0] = 0 outside 1..2", std::runtime_error);
    CHECK_THROWS_WITH_AS(rd::coloring_from_json(json{{"k", 2}, {"colors", json::array({3})}}),
                         "invalid input: colors[0] = 3 outside 1..2", std::runtime_error);
    CHECK_THROWS_AS(rd::coloring_from_json(json{{"k", -1}, {"colors", json::array()}}),
                    std::runtime_error);
}

TEST_CASE("report json carries bounds, and nulls when rd is undecided") {
    const auto solved = rd::rd_exact(rd::complete_graph(4));
    const json js = rd::report_to_json(solved);
    CHECK(js.at("lambda") == 3);
    CHECK(js.at("lambda_plus") == 3);
    CHECK(js.at("rd") == 3);
    CHECK(js.at("method") == "sandwich-collapse");
    CHECK(js.at("coloring").at("k") == 3);
    CHECK(js.at("coloring").at("colors").size() == 6);

    const auto bounded = rd::rd_exact(cycle5(), 2);
    const json jb = rd::report_to_json(bounded);
    CHECK(jb.at("rd").is_null());
    CHECK(jb.at("coloring").is_null());
    CHECK(jb.at("method") == "budget-exceeded");
    CHECK(jb.at("lambda") == 2);
}

TEST_CASE("factorization json lists factors as vertex pairs") {
    const Graph k4 = rd::complete_graph(4);
    const auto fac = rd::one_factorize_complete_even(4);
    const json j = rd::factorization_to_json(k4, fac);
    CHECK(j.at("n") == 4);
    REQUIRE(j.at("factors").size() == 3);
    for (const json& factor : j.at("factors")) {
        REQUIRE(factor.size() == 2);
        for (const json& e : factor) {
            REQUIRE(e.size() == 2);
            CHECK(k4.has_edge(e[0].get<int>(), e[1].get<int>()));
        }
    }
}

TEST_CASE("peel json exposes the construction pieces") {
    const auto p = rd::peel_factorable(6, 3);
    const json j = rd::peel_to_json(p);
    CHECK(rd::graph_from_json(j.at("graph")) == p.graph);
    CHECK(j.at("hub") == p.hub);
    CHECK(j.at("factorization").at("factors").size() == 3);
    CHECK(j.at("addable_matching").size() == 1);
    CHECK(j.at("pair_labels").size() == 3);
}

TEST_CASE("census json rows carry thresholds and optional witnesses") {
    const auto table = rd::run_census(4);

    const json plain = rd::census_to_json(table, false);
    CHECK(plain.at("n") == 4);
    CHECK(plain.at("graph_count") == 6);
    REQUIRE(plain.at("rows").size() == 3);
    for (const json& row : plain.at("rows")) {
        CHECK(row.contains("g"));
        CHECK(row.contains("f"));
        CHECK(row.at("status") == "PASS");
        CHECK_FALSE(row.contains("t_witness"));
    }

    const json rich = rd::census_to_json(table, true);
    for (const json& row : rich.at("rows")) {
        const Graph tw = rd::graph_from_json(row.at("t_witness"));
        const Graph sw = rd::graph_from_json(row.at("s_witness"));
        CHECK(tw.edge_count() == row.at("t_observed").get<int>());
        CHECK(sw.edge_count() == row.at("s_observed").get<int>());
    }
}

TEST_CASE("census csv golden output for order 4") {
    const std::string expected =
        "n,k,t_formula,t_observed,s_formula,s_observed,g,f,status\n"
        "4,1,3,3,3,3,3,2,PASS\n"
        "4,2,4,4,4,4,4,4,PASS\n"
        "4,3,5,5,6,6,5,5,PASS\n";
    CHECK(rd::census_to_csv(rd::run_census(4)) == expected);
}

TEST_CASE("relations json mirrors the report") {
    const auto report = rd::verify_relations(rd::run_census(4));
    const json j = rd::relations_to_json(report);
    CHECK(j.at("all_ok") == true);
    CHECK(j.at("checks").size() == report.checks.size());
    CHECK(j.at("checks")[0].contains("relation"));
    CHECK(j.at("checks")[0].contains("status"));
}

TEST_CASE("dot export") {
    const Graph k3 = rd::complete_graph(3);
    const std::string bare = rd::to_dot(k3);
    CHECK(bare.find("graph rd {") != std::string::npos);
    CHECK(bare.find("0 -- 1;") != std::string::npos);
    CHECK(bare.find("label") == std::string::npos);

    const EdgeColoring c{2, {1, 1, 2}};
    const std::string tinted = rd::to_dot(k3, &c);
    CHECK(tinted.find("0 -- 1 [label=\"1\", color=\"#1b9e77\"];") != std::string::npos);
    CHECK(tinted.find("1 -- 2 [label=\"2\", color=\"#d95f02\"];") != std::string::npos);
}

TEST_CASE("json file io") {
    const fs::path dir = fs::temp_directory_path() / ("rd-json-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const fs::path good = dir / "graph.json";
    rd::write_text_file(good.string(), rd::graph_to_json(cycle5()).dump(2) + "\n");
    CHECK(rd::graph_from_json(rd::load_json_file(good.string())) == cycle5());

    const fs::path bad = dir / "broken.json";
    rd::write_text_file(bad.string(), "{ nope");
    CHECK_THROWS_AS(rd::load_json_file(bad.string()), std::runtime_error);
    try {
        rd::load_json_file(bad.string());
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
    }

    CHECK_THROWS_AS(rd::load_json_file((dir / "absent.json").string()), std::runtime_error);

    fs::remove_all(dir);
}
