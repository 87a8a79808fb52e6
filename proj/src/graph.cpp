#include "rcorona/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "rcorona/error.hpp"

namespace rcorona {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError(GraphErrorKind::EndpointOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                               std::to_string(e.v) + ") has an endpoint outside 0.." +
                                                               std::to_string(n == 0 ? 0 : n - 1));
    if (e.u == e.v) throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    g.edges_.push_back({key.first, key.second});
  }
  return g;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw InputError("relabeling: permutation size differs from vertex count");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  return build(n_, out);
}

IntMatrix adjacency_matrix_int(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

DenseMatrix adjacency_matrix(const Graph& g) { return adjacency_matrix_int(g).cast<double>(); }

IntMatrix incidence_matrix_int(const Graph& g) {
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    m(g.edges()[j].u, j) = 1;
    m(g.edges()[j].v, j) = 1;
  }
  return m;
}

DenseMatrix incidence_matrix(const Graph& g) { return incidence_matrix_int(g).cast<double>(); }

IntMatrix degree_matrix_int(const Graph& g) {
  const auto profile = degree_profile(g);
  IntMatrix d(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) d(i, i) = static_cast<long long>(profile.degrees[i]);
  return d;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++p.degrees[e.u];
    ++p.degrees[e.v];
  }
  if (!p.degrees.empty() &&
      std::all_of(p.degrees.begin(), p.degrees.end(), [&](std::size_t d) { return d == p.degrees.front(); }))
    p.regular_degree = p.degrees.front();
  return p;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::size_t components = g.vertex_count();
  for (const auto& e : g.edges()) {
    const auto a = find_root(parent, e.u);
    const auto b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.is_null()) throw InputError("connectivity is undefined for the null graph");
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

std::size_t require_regular(const Graph& g, const char* what) {
  const auto p = degree_profile(g);
  if (!p.regular_degree) throw InputError(std::string(what) + " is not regular");
  return *p.regular_degree;
}

}  // namespace rcorona
