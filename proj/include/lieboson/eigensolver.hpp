#pragma once

#include <vector>

#include "lieboson/fock.hpp"

namespace lieboson {

struct JacobiOptions {
  double hermitian_tolerance = 1e-10;
  /// Convergence when the off-diagonal Frobenius norm falls below this
  /// times max(1, Frobenius norm of the input).
  double tolerance = 1e-10;
  int max_sweeps = 100;
};

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations. Throws NotHermitian or NotConverged.
std::vector<double> diagonalize(ComplexMatrix m, const JacobiOptions& options = {});

}  // namespace lieboson
