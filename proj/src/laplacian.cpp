#include "rcorona/laplacian.hpp"

#include <cmath>
#include <string>

#include "rcorona/error.hpp"

namespace rcorona {

DenseMatrix normalized_laplacian(const Graph& g) {
  const auto profile = degree_profile(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    if (profile.degrees[i] == 0)
      throw InputError("normalized Laplacian undefined for degree-0 vertex (vertex " + std::to_string(i) + ")");
  auto l = DenseMatrix::identity(n);
  for (const auto& e : g.edges()) {
    const double w = -1.0 / std::sqrt(static_cast<double>(profile.degrees[e.u]) *
                                      static_cast<double>(profile.degrees[e.v]));
    l(e.u, e.v) = w;
    l(e.v, e.u) = w;
  }
  return l;
}

DenseMatrix nl_regular(const Graph& g) {
  const auto profile = degree_profile(g);
  if (!profile.regular_degree) throw InputError("nl_regular: graph is not regular");
  if (*profile.regular_degree == 0) throw InputError("nl_regular: requires degree r >= 1");
  const double r = static_cast<double>(*profile.regular_degree);
  const auto a = adjacency_matrix(g);
  auto l = DenseMatrix::identity(g.vertex_count());
  const double scale = 1.0 / r;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      if (a(i, j) != 0.0) l(i, j) -= a(i, j) * scale;
  return l;
}

IntMatrix combinatorial_laplacian(const Graph& g) {
  auto l = degree_matrix_int(g);
  for (const auto& e : g.edges()) {
    l(e.u, e.v) = -1;
    l(e.v, e.u) = -1;
  }
  return l;
}

}  // namespace rcorona
