#ifndef RD_JSON_IO_HPP
#define RD_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "rd/census.hpp"
#include "rd/constructions.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/rainbow.hpp"

namespace rd {

// Canonical interchange formats. Writers emit the canonical form (sorted
// keys, sorted edges); readers accept any edge order and revalidate through
// build_graph, so every written file round-trips bit-exactly.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RdReport& r);

// Factors listed as vertex pairs, resolved against g's edge order.
nlohmann::json factorization_to_json(const Graph& g, const OneFactorization& f);

nlohmann::json peel_to_json(const PeelResult& p);

// With embed_witnesses, each row carries its witness graphs decoded from
// the canonical codes.
nlohmann::json census_to_json(const CensusTable& t, bool embed_witnesses);
nlohmann::json relations_to_json(const RelationReport& r);
std::string census_to_csv(const CensusTable& t);

// Graphviz export; with a coloring, edges are labeled and tinted by class.
std::string to_dot(const Graph& g, const EdgeColoring* c = nullptr);

// Throws with a byte-position diagnostic on malformed input.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rd

#endif
