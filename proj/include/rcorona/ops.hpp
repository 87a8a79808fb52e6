#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcorona/graph.hpp"

namespace rcorona {

/// Half-open interval [begin, end) of vertex indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end - begin; }
  bool contains(std::size_t v) const noexcept { return begin <= v && v < end; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Vertex blocks of a corona output, in order: old vertices, new (edge)
/// vertices, the n copies of G1, the m copies of G2.
struct CoronaLayout {
  IndexRange old_vertices;
  IndexRange new_vertices;
  std::vector<IndexRange> g1_copies;
  std::vector<IndexRange> g2_copies;

  std::size_t total() const noexcept;
};

struct Corona {
  Graph graph;
  CoronaLayout layout;
};

enum class CoronaKind { Double, Vertex, Edge };

/// G plus vertex n+j adjacent to both ends of edge j. Defined for every graph.
Corona r_graph(const Graph& g);

/// One copy of R(G), copy i of G1 joined to old vertex i, copy j of G2 joined
/// to new vertex j. G must be connected and non-null unless `allow_disconnected`
/// (which still rejects the null graph). Throws HypothesisError.
Corona double_corona(const Graph& g, const Graph& g1, const Graph& g2, bool allow_disconnected = false);
Corona r_vertex_corona(const Graph& g, const Graph& g1, bool allow_disconnected = false);
Corona r_edge_corona(const Graph& g, const Graph& g2, bool allow_disconnected = false);

nlohmann::json layout_to_json(const CoronaLayout& layout);

}  // namespace rcorona
