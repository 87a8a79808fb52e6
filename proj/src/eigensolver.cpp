#include "rcorona/eigensolver.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rcorona/error.hpp"

namespace rcorona {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

// Zeroes a(p,q) by a plane rotation applied from both sides.
void rotate(DenseMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a(k, p) = new_kp;
    a(p, k) = new_kp;
    a(k, q) = new_kq;
    a(q, k) = new_kq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

Spectrum numeric_spectrum(const DenseMatrix& m, const JacobiOptions& options) {
  if (!m.is_square()) throw InputError("numeric_spectrum: matrix is not square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > options.symmetry_tolerance)
        throw InputError("numeric_spectrum: matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
  if (n == 0) return Spectrum({}, "numeric");

  DenseMatrix a = m;
  // exact symmetrization so rotations see one value per pair
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }

  const double threshold = options.relative_threshold * frobenius_norm(a);
  std::size_t sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ == options.max_sweeps)
      throw NumericError("numeric_spectrum: Jacobi iteration did not converge in " +
                         std::to_string(options.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, p, q);
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return Spectrum(std::move(values), "numeric");
}

}  // namespace rcorona
