#include "rcorona/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rcorona/error.hpp"

namespace rcorona::gen {

namespace {

[[noreturn]] void bad(const std::string& what) { throw GraphError(GraphErrorKind::InvalidParameters, what); }

constexpr std::array<Edge, 48> kShrikhandeEdges{{
    {0, 1},   {0, 3},   {0, 4},   {0, 5},   {0, 12},  {0, 15},  {1, 2},   {1, 5},   {1, 6},   {1, 12},
    {1, 13},  {2, 3},   {2, 6},   {2, 7},   {2, 13},  {2, 14},  {3, 4},   {3, 7},   {3, 14},  {3, 15},
    {4, 5},   {4, 7},   {4, 8},   {4, 9},   {5, 6},   {5, 9},   {5, 10},  {6, 7},   {6, 10},  {6, 11},
    {7, 8},   {7, 11},  {8, 9},   {8, 11},  {8, 12},  {8, 13},  {9, 10},  {9, 13},  {9, 14},  {10, 11},
    {10, 14}, {10, 15}, {11, 12}, {11, 15}, {12, 13}, {12, 15}, {13, 14}, {14, 15},
}};

constexpr std::array<Edge, 48> kRook4x4Edges{{
    {0, 1},  {0, 2},   {0, 3},   {0, 4},   {0, 8},   {0, 12},  {1, 2},   {1, 3},   {1, 5},   {1, 9},
    {1, 13}, {2, 3},   {2, 6},   {2, 10},  {2, 14},  {3, 7},   {3, 11},  {3, 15},  {4, 5},   {4, 6},
    {4, 7},  {4, 8},   {4, 12},  {5, 6},   {5, 7},   {5, 9},   {5, 13},  {6, 7},   {6, 10},  {6, 14},
    {7, 11}, {7, 15},  {8, 9},   {8, 10},  {8, 11},  {8, 12},  {9, 10},  {9, 11},  {9, 13},  {10, 11},
    {10, 14}, {11, 15}, {12, 13}, {12, 14}, {12, 15}, {13, 14}, {13, 15}, {14, 15},
}};

std::size_t to_size(long long v, const char* what) {
  if (v < 0) bad(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void expect_params(std::string_view family, std::span<const long long> params, std::size_t count) {
  if (params.size() != count)
    bad(std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
        std::to_string(params.size()));
}

}  // namespace

Graph null_graph() { return {}; }

Graph complete(std::size_t n) {
  if (n < 1) bad("complete(n) requires n >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::build(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) bad("cycle(n) requires n >= 3");
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  e.push_back({0, n - 1});
  return Graph::build(n, e);
}

Graph path(std::size_t n) {
  if (n < 1) bad("path(n) requires n >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return Graph::build(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) bad("complete_bipartite(a,b) requires a, b >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::build(a + b, e);
}

Graph circulant(std::size_t n, std::span<const std::size_t> connections) {
  if (n < 1) bad("circulant(n, S) requires n >= 1");
  std::vector<std::size_t> s(connections.begin(), connections.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad("circulant connection set has repeated entries");
  std::vector<Edge> e;
  for (auto step : s) {
    if (step < 1 || 2 * step > n) bad("circulant connection " + std::to_string(step) + " outside 1..n/2");
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t v = (u + step) % n;
      // step == n/2 reaches each antipodal pair twice
      if (2 * step == n && v < u) continue;
      e.push_back({u, v});
    }
  }
  return Graph::build(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});          // outer 5-cycle
    e.push_back({i, i + 5});                // spokes
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph::build(10, e);
}

Graph hypercube(std::size_t d) {
  if (d > 16) bad("hypercube(d) limited to d <= 16");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) e.push_back({u, v});
    }
  return Graph::build(n, e);
}

Graph shrikhande() { return Graph::build(16, kShrikhandeEdges); }

Graph rook4x4() { return Graph::build(16, kRook4x4Edges); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges());
  const std::size_t shift = a.vertex_count();
  for (const auto& edge : b.edges()) e.push_back({edge.u + shift, edge.v + shift});
  return Graph::build(a.vertex_count() + b.vertex_count(), e);
}

Graph generate(std::string_view family, std::span<const long long> params) {
  if (family == "null") {
    expect_params(family, params, 0);
    return null_graph();
  }
  if (family == "complete") {
    expect_params(family, params, 1);
    return complete(to_size(params[0], "n"));
  }
  if (family == "cycle") {
    expect_params(family, params, 1);
    return cycle(to_size(params[0], "n"));
  }
  if (family == "path") {
    expect_params(family, params, 1);
    return path(to_size(params[0], "n"));
  }
  if (family == "complete_bipartite") {
    expect_params(family, params, 2);
    return complete_bipartite(to_size(params[0], "a"), to_size(params[1], "b"));
  }
  if (family == "circulant") {
    if (params.empty()) bad("circulant takes n followed by its connection set");
    std::vector<std::size_t> s;
    for (std::size_t k = 1; k < params.size(); ++k) s.push_back(to_size(params[k], "connection"));
    return circulant(to_size(params[0], "n"), s);
  }
  if (family == "petersen") {
    expect_params(family, params, 0);
    return petersen();
  }
  if (family == "hypercube") {
    expect_params(family, params, 1);
    return hypercube(to_size(params[0], "d"));
  }
  if (family == "shrikhande") {
    expect_params(family, params, 0);
    return shrikhande();
  }
  if (family == "rook4x4") {
    expect_params(family, params, 0);
    return rook4x4();
  }
  bad("unknown graph family '" + std::string(family) + "'");
}

std::vector<std::string> family_names() {
  return {"complete", "cycle",      "path",       "complete_bipartite", "circulant",
          "petersen", "hypercube", "shrikhande", "rook4x4",            "null"};
}

}  // namespace rcorona::gen
