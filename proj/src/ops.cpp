#include "rcorona/ops.hpp"

#include "rcorona/error.hpp"

namespace rcorona {

std::size_t CoronaLayout::total() const noexcept {
  std::size_t t = old_vertices.size() + new_vertices.size();
  for (const auto& r : g1_copies) t += r.size();
  for (const auto& r : g2_copies) t += r.size();
  return t;
}

Corona r_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Edge> edges(g.edges());
  edges.reserve(3 * m);
  for (std::size_t j = 0; j < m; ++j) {
    edges.push_back({g.edges()[j].u, n + j});
    edges.push_back({g.edges()[j].v, n + j});
  }
  Corona out;
  out.graph = Graph::build(n + m, edges);
  out.layout.old_vertices = {0, n};
  out.layout.new_vertices = {n, n + m};
  return out;
}

namespace {

// Appends a copy of `h` at `offset`, every vertex of which is joined to `center`.
void attach_copy(std::vector<Edge>& edges, const Graph& h, std::size_t offset, std::size_t center) {
  for (const auto& e : h.edges()) edges.push_back({offset + e.u, offset + e.v});
  for (std::size_t k = 0; k < h.vertex_count(); ++k) edges.push_back({center, offset + k});
}

}  // namespace

Corona double_corona(const Graph& g, const Graph& g1, const Graph& g2, bool allow_disconnected) {
  if (g.is_null()) throw HypothesisError("corona base graph G must not be the null graph");
  if (!allow_disconnected && !is_connected(g)) throw HypothesisError("corona base graph G must be connected");

  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();

  Corona base = r_graph(g);
  std::vector<Edge> edges(base.graph.edges());
  edges.reserve(3 * m + n * (g1.edge_count() + n1) + m * (g2.edge_count() + n2));

  CoronaLayout layout = base.layout;
  std::size_t offset = n + m;
  for (std::size_t i = 0; i < n; ++i, offset += n1) {
    layout.g1_copies.push_back({offset, offset + n1});
    attach_copy(edges, g1, offset, i);
  }
  for (std::size_t j = 0; j < m; ++j, offset += n2) {
    layout.g2_copies.push_back({offset, offset + n2});
    attach_copy(edges, g2, offset, n + j);
  }
  if (n1 == 0) layout.g1_copies.clear();
  if (n2 == 0) layout.g2_copies.clear();
  return {Graph::build(offset, edges), std::move(layout)};
}

Corona r_vertex_corona(const Graph& g, const Graph& g1, bool allow_disconnected) {
  return double_corona(g, g1, Graph{}, allow_disconnected);
}

Corona r_edge_corona(const Graph& g, const Graph& g2, bool allow_disconnected) {
  return double_corona(g, Graph{}, g2, allow_disconnected);
}

nlohmann::json layout_to_json(const CoronaLayout& layout) {
  auto range = [](const IndexRange& r) { return nlohmann::json::array({r.begin, r.end}); };
  auto ranges = [&](const std::vector<IndexRange>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(range(r));
    return a;
  };
  return {{"old", range(layout.old_vertices)},
          {"new", range(layout.new_vertices)},
          {"g1_copies", ranges(layout.g1_copies)},
          {"g2_copies", ranges(layout.g2_copies)},
          {"total", layout.total()}};
}

}  // namespace rcorona
