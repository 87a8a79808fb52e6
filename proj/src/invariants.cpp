#include "rcorona/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rcorona/eigensolver.hpp"
#include "rcorona/error.hpp"
#include "rcorona/laplacian.hpp"

namespace rcorona {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free Gaussian elimination; every intermediate is a minor of the input.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

WideInt narrow(const BigInt& v) {
  static const BigInt limit = (BigInt(1) << 127) - 1;
  if (v > limit || v < -limit) throw NumericError("spanning tree count overflows 128-bit arithmetic");
  const BigInt magnitude = abs(v);
  const auto low = static_cast<std::uint64_t>(magnitude & BigInt(~std::uint64_t{0}));
  const auto high = static_cast<std::uint64_t>(magnitude >> 64);
  const WideInt w = (static_cast<WideInt>(high) << 64) | static_cast<WideInt>(low);
  return v < 0 ? -w : w;
}

Spectrum spectrum_of(const Graph& g) { return numeric_spectrum(normalized_laplacian(g)); }

}  // namespace

std::string to_string(WideInt v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

WideInt spanning_trees_matrix_tree(const Graph& g) {
  if (g.is_null()) throw InputError("spanning tree count is undefined for the null graph");
  if (!is_connected(g)) return 0;
  const auto l = combinatorial_laplacian(g);
  const std::size_t n = g.vertex_count() - 1;
  std::vector<std::vector<BigInt>> reduced(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced[i][j] = l(i, j);
  return narrow(bareiss_determinant(std::move(reduced)));
}

double spanning_trees_spectral(const Graph& g) {
  if (g.vertex_count() < 2) throw InputError("spectral spanning tree count needs at least two vertices");
  const auto spectrum = spectrum_of(g);  // throws on isolated vertices
  if (!is_connected(g)) return 0.0;
  const auto profile = degree_profile(g);
  double log_count = 0.0;
  double degree_sum = 0.0;
  for (auto d : profile.degrees) {
    log_count += std::log(static_cast<double>(d));
    degree_sum += static_cast<double>(d);
  }
  log_count -= std::log(degree_sum);
  for (std::size_t i = 1; i < spectrum.size(); ++i) log_count += std::log(spectrum[i]);
  return std::exp(log_count);
}

double degree_kirchhoff(const Graph& g) {
  if (g.is_null() || !is_connected(g)) throw HypothesisError("degree-Kirchhoff index requires a connected graph");
  const auto spectrum = spectrum_of(g);
  double s = 0.0;
  for (std::size_t i = 1; i < spectrum.size(); ++i) s += 1.0 / spectrum[i];
  return 2.0 * static_cast<double>(g.edge_count()) * s;
}

}  // namespace rcorona
