#pragma once

#include "rcorona/graph.hpp"
#include "rcorona/matrix.hpp"

namespace rcorona {

/// I - D^{-1/2} A D^{-1/2}. Throws InputError if some vertex has degree 0.
DenseMatrix normalized_laplacian(const Graph& g);

/// I - A/r for an r-regular graph with r >= 1. Agrees entrywise with
/// normalized_laplacian(g) on regular input; kept as its own path for that check.
DenseMatrix nl_regular(const Graph& g);

/// D - A.
IntMatrix combinatorial_laplacian(const Graph& g);

}  // namespace rcorona
