#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <vector>

#include "lieboson/boson_ops.hpp"

namespace lieboson {

/// Dense complex matrix, row-major.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> data;

  explicit ComplexMatrix(std::size_t size = 0) : n(size), data(size * size) {}
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

/// Occupation-number states with fixed total boson number, in lexicographic
/// order of the occupation vectors (first mode varies slowest, largest first).
class FockBasis {
 public:
  FockBasis(std::vector<Mode> modes, int total);

  const std::vector<Mode>& modes() const { return modes_; }
  int total() const { return total_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<int>& state(std::size_t i) const { return states_[i]; }
  /// Index of an occupation vector, or size() when absent.
  std::size_t index(const std::vector<int>& occupations) const;

 private:
  std::vector<Mode> modes_;
  int total_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

/// Matrix of a number-conserving operator on the sector, built column by
/// column with a|n> = sqrt(n)|n-1>, a'|n> = sqrt(n+1)|n+1>.
/// Throws NotNumberConserving, or DomainError for modes outside the basis.
ComplexMatrix fock_matrix_serial(const OperatorPoly& op, const FockBasis& basis);
/// Same matrix, columns distributed over OpenMP threads.
ComplexMatrix fock_matrix_parallel(const OperatorPoly& op, const FockBasis& basis);

/// max |m_ij - conj(m_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

/// "rows cols" header, then one row per line of "re im" pairs.
void write_matrix(std::ostream& os, const ComplexMatrix& m);

}  // namespace lieboson
