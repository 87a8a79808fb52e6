#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rcorona/matrix.hpp"

namespace rcorona {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v in the order they were supplied; that order is
/// the canonical edge numbering used by incidence matrices and R-graph new
/// vertices. The default-constructed value is the null graph (n = 0).
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes: endpoints must be < n, no self-loops, and no
  /// edge may appear twice (in either orientation). Throws GraphError.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool is_null() const noexcept { return n_ == 0; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const std::size_t> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> regular_degree;

  bool is_regular() const noexcept { return regular_degree.has_value(); }
};

IntMatrix adjacency_matrix_int(const Graph& g);
DenseMatrix adjacency_matrix(const Graph& g);
/// n x m vertex-edge incidence matrix, columns in canonical edge order.
IntMatrix incidence_matrix_int(const Graph& g);
DenseMatrix incidence_matrix(const Graph& g);
IntMatrix degree_matrix_int(const Graph& g);

/// Regular degree is reported for the null graph as absent and for any other
/// graph iff all degrees agree.
DegreeProfile degree_profile(const Graph& g);

/// Throws InputError for the null graph.
bool is_connected(const Graph& g);

/// Component count via union-find; 0 for the null graph.
std::size_t component_count(const Graph& g);

/// Regular degree or InputError naming `what`.
std::size_t require_regular(const Graph& g, const char* what);

}  // namespace rcorona
