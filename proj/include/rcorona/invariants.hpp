#pragma once

#include <string>

#include "rcorona/graph.hpp"

namespace rcorona {

__extension__ using WideInt = __int128;

std::string to_string(WideInt v);

/// Exact count via Bareiss elimination on a reduced Laplacian. Returns 0 for
/// disconnected input, 1 for K1. Throws NumericError on 128-bit overflow.
WideInt spanning_trees_matrix_tree(const Graph& g);

/// (prod d_i / sum d_i) * prod_{i>=2} lambda_i over the normalized Laplacian
/// spectrum. 0 for disconnected input; requires no isolated vertices.
double spanning_trees_spectral(const Graph& g);

/// 2m * sum_{i>=2} 1/lambda_i. Throws HypothesisError for disconnected input.
double degree_kirchhoff(const Graph& g);

}  // namespace rcorona
