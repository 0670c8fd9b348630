#pragma once

#include "fiberlab/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fiberlab {

// Edge-list text: a line "n <count>", then one "i j" pair per line, 1-indexed.
// Blank lines and text after '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// {"n": int, "edges": [[i, j], ...]} with 1-indexed endpoints; "labels" is
// written only when the labels differ from v1..vn.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Reads either format, deciding by the first non-space character.
Graph parse_graph(std::string_view text);

}  // namespace fiberlab
