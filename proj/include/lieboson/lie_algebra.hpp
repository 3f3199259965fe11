#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieboson/boson_ops.hpp"
#include "lieboson/exact_scalar.hpp"
#include "lieboson/linalg.hpp"

namespace lieboson {

using Vec = std::vector<RadicalScalar>;
/// Subspace of a Lie algebra, as coordinate vectors in its basis.
using SubBasis = std::vector<Vec>;

struct NamedElement {
  std::string name;
  OperatorPoly op;
};

/// Echelon basis of a span of operator polynomials, remembering how each
/// echelon row combines the input vectors. Used for membership and
/// coordinate queries.
class PolySpan {
 public:
  PolySpan() = default;
  explicit PolySpan(const std::vector<OperatorPoly>& vectors);

  /// Appends a vector; returns false (and ignores it) when already in the span.
  bool add(const OperatorPoly& v);

  std::size_t input_count() const { return inputs_; }
  std::size_t rank() const { return rows_.size(); }
  /// Input indices that were linearly dependent on earlier inputs.
  const std::vector<std::size_t>& dependent_inputs() const { return dependent_; }

  /// Coordinates over the inputs (dependent inputs get zero); nullopt outside the span.
  std::optional<Vec> coordinates(const OperatorPoly& x) const;
  OperatorPoly residual(const OperatorPoly& x) const;
  bool contains(const OperatorPoly& x) const { return residual(x).is_zero(); }

 private:
  struct Row {
    OperatorPoly vector;
    Monomial pivot;
    Vec transform;
  };
  std::vector<Row> rows_;
  std::vector<std::size_t> dependent_;
  std::size_t inputs_ = 0;
};

enum class Exec { serial, parallel };

/// Finite-dimensional Lie algebra presented by a basis of operator polynomials.
class LieAlgebra {
 public:
  /// Verifies closure of the pairwise brackets and derives the structure
  /// constants. Throws LinearlyDependent or NotClosed.
  static LieAlgebra from_generators(std::vector<NamedElement> basis, Exec exec = Exec::parallel);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<NamedElement>& basis() const { return basis_; }
  const NamedElement& element(std::size_t i) const { return basis_.at(i); }

  /// c^k_{ij} with [x_i, x_j] = sum_k c^k_{ij} x_k.
  const RadicalScalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return brackets_[i * dimension() + j][k];
  }
  const Vec& bracket_coordinates(std::size_t i, std::size_t j) const { return brackets_[i * dimension() + j]; }

  std::optional<Vec> coordinates(const OperatorPoly& x) const { return span_.coordinates(x); }
  bool contains(const OperatorPoly& x) const { return span_.contains(x); }
  OperatorPoly to_operator(const Vec& coords) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// ad(x) as a matrix acting on coordinate columns: entry (k, j) is the x_k part of [x, x_j].
  Matrix<RadicalScalar> ad(const Vec& x) const;
  const Matrix<RadicalScalar>& killing() const { return killing_; }
  RadicalScalar killing_form(const Vec& x, const Vec& y) const;

  Vec unit(std::size_t i) const;
  Vec zero() const { return Vec(dimension()); }
  /// "g1+g4", "g1-sqrt(3)*g16", ...
  std::string describe(const Vec& coords) const;

 private:
  std::vector<NamedElement> basis_;
  PolySpan span_;
  std::vector<Vec> brackets_;  // row-major d x d
  Matrix<RadicalScalar> killing_;
};

/// Bracket table computed one pair at a time; reference for the OpenMP kernel.
std::vector<Vec> bracket_table_serial(const std::vector<NamedElement>& basis, const PolySpan& span);
std::vector<Vec> bracket_table_parallel(const std::vector<NamedElement>& basis, const PolySpan& span);

/// Kernel of the adjoint map.
SubBasis center(const LieAlgebra& l);
/// [S, S] for a subspace S (whole algebra when S is omitted).
SubBasis derived_algebra(const LieAlgebra& l, const SubBasis& sub);
SubBasis derived_algebra(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l, const SubBasis& sub);
/// Cartan's criterion: {x : kappa(x, [L,L]) = 0}; verified solvable.
SubBasis radical(const LieAlgebra& l);

struct LeviDecomposition {
  SubBasis radical;
  SubBasis levi;
  /// Rows: radical vectors then Levi vectors; invertible, so g = r (+) s.
  Matrix<RadicalScalar> witness;
};

/// Levi decomposition for reductive algebras (radical equals center).
/// Throws NotReductive otherwise.
LeviDecomposition levi_decomposition(const LieAlgebra& l);

struct SubalgebraCheck {
  bool ok = false;
  std::string witness;
};

/// Whether the candidates lie in span(L) and close under the bracket.
SubalgebraCheck is_subalgebra(const std::vector<OperatorPoly>& candidate, const LieAlgebra& l);

/// Smallest subalgebra containing the given vectors.
SubBasis generate_subalgebra(const LieAlgebra& l, const SubBasis& generators);

/// Reduced echelon basis of the span.
SubBasis span_basis(const SubBasis& vectors, std::size_t dim);
bool same_span(const SubBasis& a, const SubBasis& b, std::size_t dim);
bool span_contains(const SubBasis& outer, const SubBasis& inner, std::size_t dim);
/// Rescales each vector so its last nonzero coordinate is 1.
SubBasis normalize_last_one(SubBasis vectors);
/// Gram matrix of the Killing form restricted to the subspace.
Matrix<RadicalScalar> restricted_killing(const LieAlgebra& l, const SubBasis& sub);

std::vector<NamedElement> named_elements(const LieAlgebra& l, const SubBasis& sub);

}  // namespace lieboson
