#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "epg/graph.hpp"

namespace epg {

/// "n m" header, then one "u v" line per edge (u < v, lexicographic).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Undirected DOT with element names as labels.
std::string to_dot(const Graph& g, const std::string& name = "G");
Graph parse_dot(std::string_view text);

/// {"n": .., "labels": [..], "edges": [[u, v], ..]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

}  // namespace epg
