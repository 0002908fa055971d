#include "rd/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rd {

namespace {

using nlohmann::json;

// Distinct edge tints for DOT export, cycled when a coloring has more
// classes than the palette.
constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#1f78b4",
                                    "#b2182b", "#542788", "#00441b", "#67001f"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

[[noreturn]] void fail_field(const std::string& what) {
    throw std::runtime_error("invalid input: " + what);
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field)) fail_field(std::string("missing field \"") + field + "\"");
    const json& value = j.at(field);
    if (!value.is_number_integer()) fail_field(std::string("field \"") + field + "\" must be an integer");
    return value.get<int>();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) fail_field("graph document must be a JSON object");
    const int n = require_int(j, "n");
    if (!j.contains("edges")) fail_field("missing field \"edges\"");
    const json& edges = j.at("edges");
    if (!edges.is_array()) fail_field("field \"edges\" must be an array");
    std::vector<VertexPair> list;
    list.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail_field("edges[" + std::to_string(i) + "] must be a pair of integers");
        list.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(n, list);  // range/loop/duplicate validation
}

json coloring_to_json(const EdgeColoring& c) {
    return json{{"k", c.k}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const json& j) {
    if (!j.is_object()) fail_field("coloring document must be a JSON object");
    const int k = require_int(j, "k");
    if (k < 0) fail_field("field \"k\" must be non-negative");
    if (!j.contains("colors")) fail_field("missing field \"colors\"");
    const json& colors = j.at("colors");
    if (!colors.is_array()) fail_field("field \"colors\" must be an array");
    EdgeColoring c;
    c.k = k;
    c.colors.reserve(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) {
        if (!colors[i].is_number_integer())
            fail_field("colors[" + std::to_string(i) + "] must be an integer");
        const int value = colors[i].get<int>();
        if (value < 1 || value > k)
            fail_field("colors[" + std::to_string(i) + "] = " + std::to_string(value) +
                       " outside 1.." + std::to_string(k));
        c.colors.push_back(value);
    }
    return c;
}

json report_to_json(const RdReport& r) {
    json j{{"lambda", r.lambda},
           {"lambda_plus", r.lambda_plus},
           {"mader_bound", r.mader_bound},
           {"chi_prime_upper", r.chi_prime_upper},
           {"method", r.method}};
    j["rd"] = r.rd ? json(*r.rd) : json(nullptr);
    j["coloring"] = r.coloring ? coloring_to_json(*r.coloring) : json(nullptr);
    return j;
}

json factorization_to_json(const Graph& g, const OneFactorization& f) {
    json factors = json::array();
    for (const auto& factor : f.factors) {
        json edges = json::array();
        for (int id : factor) {
            const auto& [a, b] = g.edges[static_cast<size_t>(id)];
            edges.push_back(json::array({a, b}));
        }
        factors.push_back(std::move(edges));
    }
    return json{{"n", g.n}, {"factors", factors}};
}

json peel_to_json(const PeelResult& p) {
    json matching = json::array();
    for (const auto& [a, b] : p.addable_matching) matching.push_back(json::array({a, b}));
    json labels = json::array();
    for (const auto& [a, b] : p.pair_labels) labels.push_back(json::array({a, b}));
    return json{{"graph", graph_to_json(p.graph)},
                {"factorization", factorization_to_json(p.graph, p.factorization)},
                {"hub", p.hub},
                {"addable_matching", matching},
                {"pair_labels", labels}};
}

json census_to_json(const CensusTable& t, bool embed_witnesses) {
    json rows = json::array();
    for (const CensusRow& row : t.rows) {
        const EgValues formulas = eg_formulas(t.n, row.k);
        json entry{{"k", row.k},
                   {"t_formula", row.t_formula},
                   {"t_observed", row.t_observed},
                   {"s_formula", row.s_formula},
                   {"s_observed", row.s_observed},
                   {"g", formulas.g},
                   {"f", formulas.f},
                   {"status", row.pass ? "PASS" : "FAIL"},
                   {"t_witness_code", row.t_witness_code},
                   {"s_witness_code", row.s_witness_code}};
        if (embed_witnesses) {
            entry["t_witness"] = graph_to_json(graph_from_code(t.n, row.t_witness_code));
            entry["s_witness"] = graph_to_json(graph_from_code(t.n, row.s_witness_code));
        }
        rows.push_back(std::move(entry));
    }
    return json{{"n", t.n}, {"graph_count", t.graph_count}, {"rows", rows}};
}

json relations_to_json(const RelationReport& r) {
    json checks = json::array();
    for (const RelationCheck& check : r.checks)
        checks.push_back({{"relation", check.relation}, {"k", check.k}, {"status", check.status}});
    return json{{"all_ok", r.all_ok}, {"checks", checks}};
}

std::string census_to_csv(const CensusTable& t) {
    std::ostringstream out;
    out << "n,k,t_formula,t_observed,s_formula,s_observed,g,f,status\n";
    for (const CensusRow& row : t.rows) {
        const EgValues formulas = eg_formulas(t.n, row.k);
        out << t.n << ',' << row.k << ',' << row.t_formula << ',' << row.t_observed << ','
            << row.s_formula << ',' << row.s_observed << ',' << formulas.g << ',' << formulas.f
            << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

std::string to_dot(const Graph& g, const EdgeColoring* c) {
    std::ostringstream out;
    out << "graph rd {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [a, b] = g.edges[e];
        out << "  " << a << " -- " << b;
        if (c != nullptr && e < c->colors.size()) {
            const int color = c->colors[e];
            out << " [label=\"" << color << "\", color=\""
                << kPalette[static_cast<size_t>(color - 1) % kPaletteSize] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace rd
