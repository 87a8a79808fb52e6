#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcorona/graph.hpp"

namespace rcorona::gen {

// All generators throw GraphError(InvalidParameters) on degenerate parameters.

Graph null_graph();
Graph complete(std::size_t n);                   // n >= 1
Graph cycle(std::size_t n);                      // n >= 3
Graph path(std::size_t n);                       // n >= 1; path(2) is P2
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Vertex i adjacent to i +- s (mod n) for each s in `connections`, 1 <= s <= n/2.
Graph circulant(std::size_t n, std::span<const std::size_t> connections);
Graph petersen();
Graph hypercube(std::size_t d);
/// Shrikhande graph: srg(16,6,2,2), Cayley graph of Z4 x Z4.
Graph shrikhande();
/// 4x4 rook's graph K4 x K4: srg(16,6,2,2), cospectral with but not isomorphic to shrikhande().
Graph rook4x4();

/// Vertices of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Dispatch by family name: complete, cycle, path, complete_bipartite, circulant
/// (n followed by the connection set), petersen, hypercube, shrikhande, rook4x4, null.
Graph generate(std::string_view family, std::span<const long long> params);

std::vector<std::string> family_names();

}  // namespace rcorona::gen
