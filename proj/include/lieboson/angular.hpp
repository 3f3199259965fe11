#pragma once

#include <vector>

#include "lieboson/boson_ops.hpp"
#include "lieboson/exact_scalar.hpp"
#include "lieboson/half_int.hpp"

namespace lieboson {

/// <j1 m1 j2 m2 | j m> in the Condon-Shortley convention, exact.
/// Throws DomainError when some m - j is not an integer or |m| > j.
RadicalScalar clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

/// Rank-k spherical tensor operator: components[i] is T^k_q with q = -k + i.
class SphericalTensorOp {
 public:
  SphericalTensorOp(HalfInt rank, std::vector<OperatorPoly> components);

  HalfInt rank() const { return rank_; }
  const std::vector<OperatorPoly>& components() const { return components_; }
  const OperatorPoly& component(HalfInt q) const;
  std::size_t size() const { return components_.size(); }

  /// Creation operators a^dag_mu of a species, as a rank-l tensor.
  static SphericalTensorOp creators(const BosonSpecies& species);
  /// Covariant annihilators a~_mu of a species, as a rank-l tensor.
  static SphericalTensorOp tilde_annihilators(const BosonSpecies& species);

 private:
  HalfInt rank_;
  std::vector<OperatorPoly> components_;
};

/// [T x U]^k_q = sum <kT qT kU qU | k q> T_qT U_qU (T factor on the left).
/// Throws TriangleError when k is outside |kT-kU|..kT+kU or has the wrong parity.
SphericalTensorOp couple(const SphericalTensorOp& t, const SphericalTensorOp& u, HalfInt k);

}  // namespace lieboson
