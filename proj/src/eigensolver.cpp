#include "lieboson/eigensolver.hpp"

#include <algorithm>
#include <cmath>

#include "lieboson/errors.hpp"

namespace lieboson {

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data) s += std::norm(x);
  return std::sqrt(s);
}

/// Zeroes m(p,q) with U = diag(1, conj(e)) * [[c, -s], [s, c]] on the (p, q) plane.
void rotate(ComplexMatrix& m, std::size_t p, std::size_t q) {
  const double r = std::abs(m(p, q));
  if (r == 0.0) return;
  const std::complex<double> e = m(p, q) / r;
  const double a = m(p, p).real(), b = m(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * r, a - b);
  const double c = std::cos(theta), s = std::sin(theta);
  const std::complex<double> ce = std::conj(e);
  for (std::size_t k = 0; k < m.n; ++k) {
    const auto kp = m(k, p), kq = m(k, q);
    m(k, p) = c * kp + s * ce * kq;
    m(k, q) = -s * kp + c * ce * kq;
  }
  for (std::size_t k = 0; k < m.n; ++k) {
    const auto pk = m(p, k), qk = m(q, k);
    m(p, k) = c * pk + s * e * qk;
    m(q, k) = -s * pk + c * e * qk;
  }
  m(p, q) = m(q, p) = 0.0;
  m(p, p) = m(p, p).real();
  m(q, q) = m(q, q).real();
}

}  // namespace

std::vector<double> diagonalize(ComplexMatrix m, const JacobiOptions& options) {
  const double defect = hermiticity_defect(m);
  if (defect > options.hermitian_tolerance)
    throw NotHermitian("max |m_ij - conj(m_ji)| = " + std::to_string(defect));
  const double target = options.tolerance * std::max(1.0, frobenius(m));
  int sweeps = 0;
  while (off_diagonal_norm(m) >= target) {
    if (sweeps++ == options.max_sweeps)
      throw NotConverged("off-diagonal norm " + std::to_string(off_diagonal_norm(m)) + " after " +
                         std::to_string(options.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < m.n; ++p)
      for (std::size_t q = p + 1; q < m.n; ++q) rotate(m, p, q);
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < m.n; ++i) out.push_back(m(i, i).real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lieboson
