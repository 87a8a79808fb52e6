#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rcorona/graph.hpp"

namespace rcorona::io {

enum class GraphFormat { EdgeList, Json };

/// Edge-list text: "n m" followed by m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Chooses the format from the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string serialize(const Graph& g, GraphFormat format);

}  // namespace rcorona::io
