#pragma once

#include <cstddef>

#include "rcorona/matrix.hpp"
#include "rcorona/spectrum.hpp"

namespace rcorona {

struct JacobiOptions {
  /// Converged once the off-diagonal Frobenius norm drops below this times the
  /// Frobenius norm of the input.
  double relative_threshold = 1e-12;
  std::size_t max_sweeps = 100;
  /// Entrywise symmetry check on input.
  double symmetry_tolerance = 1e-12;
};

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Throws InputError for non-square or non-symmetric input and NumericError if
/// the sweep cap is reached.
Spectrum numeric_spectrum(const DenseMatrix& m, const JacobiOptions& options = {});

}  // namespace rcorona
