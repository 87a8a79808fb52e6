#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcorona/graph.hpp"
#include "rcorona/matrix.hpp"
#include "rcorona/polynomial.hpp"
#include "rcorona/spectrum.hpp"

namespace rcorona {

/// Scalars that determine every closed-form factor: G has n vertices, m edges
/// and is r-regular; G1 (n1, r1) and G2 (n2, r2) likewise. A null G1 is n1 = 0.
struct CoronaParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t n1 = 0;
  std::size_t r1 = 0;
  std::size_t n2 = 0;
  std::size_t r2 = 0;

  /// Vertex count of the corona these parameters describe.
  std::size_t total() const noexcept { return n + m + n * n1 + m * n2; }

  /// Structural invariants only (m = nr/2, r >= 1, ri < ni). Throws HypothesisError.
  void validate() const;

  /// Reads the parameters off the graphs and checks the closed-form hypotheses:
  /// G connected and regular with m >= n, G1 and G2 regular (or null).
  static CoronaParams from_graphs(const Graph& g, const Graph& g1, const Graph& g2);

  friend bool operator==(const CoronaParams&, const CoronaParams&) = default;
};

/// 1^T (xI - L(Gi) o B)^{-1} 1 for an ri-regular graph on ni vertices, which
/// collapses to ni / (x - 1/(ri+1)). Throws PoleError at x = 1/(ri+1).
double coronal_chi(std::size_t n_i, std::size_t r_i, double x);

struct HadamardForms {
  DenseMatrix entrywise;  // L(G1) o B, B = aJ + (1-a)I, a = r1/(r1+1)
  DenseMatrix scaled;     // (I + r1 L(G1)) / (r1+1)
  double max_difference = 0.0;
};

/// Both sides of the Hadamard identity for a regular G1 with r1 >= 1.
HadamardForms hadamard_form_check(const Graph& g1);

namespace detail {
template <class T>
T num(std::size_t v) {
  return T(static_cast<long long>(v));
}
// x*ri + x - 1
template <class T>
Polynomial<T> shifted(std::size_t ri) {
  return Polynomial<T>::linear(T(-1), num<T>(ri + 1));
}
// (x - 1)(2 + n2)(x r2 + x - 1) - n2
template <class T>
Polynomial<T> edge_factor(const CoronaParams& p) {
  return num<T>(p.n2 + 2) * (Polynomial<T>::linear(T(-1), T(1)) * shifted<T>(p.r2)) -
         Polynomial<T>::constant(num<T>(p.n2));
}
}  // namespace detail

/// Per-eigenvalue quartic of the double corona:
///   [(x-1)(2+n2)(x r2+x-1) - n2] [(x-1)(2r+n1)(x r1+x-1) + r(1-mu)(x r1+x-1) - n1]
///     + r(mu-2)(x r1+x-1)(x r2+x-1)
/// Requires n1 >= 1 and n2 >= 1.
template <class T>
Polynomial<T> mu_quartic(const CoronaParams& p, T mu) {
  using detail::num;
  const auto x_minus_1 = Polynomial<T>::linear(T(-1), T(1));
  const auto s1 = detail::shifted<T>(p.r1);
  const auto s2 = detail::shifted<T>(p.r2);
  const T r = num<T>(p.r);
  const auto vertex_factor = num<T>(2 * p.r + p.n1) * (x_minus_1 * s1) + (r * (T(1) - mu)) * s1 -
                             Polynomial<T>::constant(num<T>(p.n1));
  return detail::edge_factor<T>(p) * vertex_factor + (r * (mu - T(2))) * (s1 * s2);
}

/// (x-1)(2+n2)(x r2+x-1) - n2, contributing with multiplicity m - n. Requires n2 >= 1.
template <class T>
Polynomial<T> excess_quadratic(const CoronaParams& p) {
  return detail::edge_factor<T>(p);
}

/// Per-eigenvalue cubic of the R-vertex corona (G2 null):
///   2(x-1)[(x-1)(2r+n1)(x r1+x-1) - n1 + r(1-mu)(x r1+x-1)] + r(mu-2)(x r1+x-1)
template <class T>
Polynomial<T> vertex_corona_cubic(const CoronaParams& p, T mu) {
  using detail::num;
  const auto x_minus_1 = Polynomial<T>::linear(T(-1), T(1));
  const auto s1 = detail::shifted<T>(p.r1);
  const T r = num<T>(p.r);
  const auto inner = num<T>(2 * p.r + p.n1) * (x_minus_1 * s1) - Polynomial<T>::constant(num<T>(p.n1)) +
                     (r * (T(1) - mu)) * s1;
  return T(2) * (x_minus_1 * inner) + (r * (mu - T(2))) * s1;
}

/// Per-eigenvalue cubic of the R-edge corona (G1 null):
///   (2x-1-mu)[(x-1)(2+n2)(x r2+x-1) - n2] + (mu-2)(x r2+x-1)
template <class T>
Polynomial<T> edge_corona_cubic(const CoronaParams& p, T mu) {
  const auto lead = Polynomial<T>::linear(T(-1) - mu, T(2));
  return lead * detail::edge_factor<T>(p) + (mu - T(2)) * detail::shifted<T>(p.r2);
}

/// (1 + ri * eta) / (ri + 1): image of a non-principal eigenvalue of a joined copy.
double fixed_family_eta(double eta, std::size_t r_i);

enum class ClosedFormRoute { DoubleCorona, VertexCorona, EdgeCorona };

struct FixedFamily {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::string label;
};

struct RootFamily {
  RealPolynomial polynomial;
  std::size_t multiplicity = 0;
  std::string label;
};

/// Corona spectrum as labeled families: fixed eigenvalues from G1/G2, the
/// roots of one polynomial per eigenvalue mu of G, and the m - n excess factor.
struct ClosedFormSpectrum {
  CoronaParams params;
  ClosedFormRoute route = ClosedFormRoute::DoubleCorona;
  std::vector<FixedFamily> fixed;
  std::vector<RootFamily> roots;
  std::optional<RootFamily> excess;

  /// Fixed multiplicities plus degree times multiplicity of every polynomial family.
  std::size_t total_multiplicity() const;
};

/// Input spectra are computed numerically and grouped at `group_tol` before
/// the per-eigenvalue polynomials are formed.
ClosedFormSpectrum theorem23_spectrum(const Graph& g, const Graph& g1, const Graph& g2,
                                      double group_tol = kDefaultTolerance);
ClosedFormSpectrum cor24_spectrum(const Graph& g, const Graph& g1, double group_tol = kDefaultTolerance);
ClosedFormSpectrum cor25_spectrum(const Graph& g, const Graph& g2, double group_tol = kDefaultTolerance);

/// Routes to the double, vertex or edge corona formula by which of G1, G2 is
/// null. Both null is refused: the formulas do not cover the bare R-graph.
ClosedFormSpectrum closed_form_spectrum(const Graph& g, const Graph& g1, const Graph& g2,
                                        double group_tol = kDefaultTolerance);

Spectrum flatten(const ClosedFormSpectrum& cfs);

nlohmann::json closed_form_to_json(const ClosedFormSpectrum& cfs);

}  // namespace rcorona
