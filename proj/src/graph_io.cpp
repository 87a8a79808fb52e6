#include "rcorona/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "rcorona/error.hpp"

namespace rcorona::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw GraphError(GraphErrorKind::Parse, what); }

}  // namespace

Graph parse_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) parse_error("edge list: expected header \"n m\" with non-negative values");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) parse_error("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(k));
    if (u < 0 || v < 0) parse_error("edge list: negative vertex index on edge " + std::to_string(k));
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  std::string rest;
  if (in >> rest) parse_error("edge list: trailing content after " + std::to_string(m) + " edges");
  return Graph::build(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    parse_error("graph JSON: expected an object with \"n\" and \"edges\"");
  const auto& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) parse_error("graph JSON: \"n\" must be a non-negative integer");
  const auto& je = j.at("edges");
  if (!je.is_array()) parse_error("graph JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& pair : je) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer() ||
        pair[0].get<long long>() < 0 || pair[1].get<long long>() < 0)
      parse_error("graph JSON: each edge must be a pair of non-negative integers");
    edges.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
  }
  return Graph::build(jn.get<std::size_t>(), edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      parse_error(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Json ? graph_to_json(g).dump() + "\n" : to_edge_list(g);
}

}  // namespace rcorona::io
