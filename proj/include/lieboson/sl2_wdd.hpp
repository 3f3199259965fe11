#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lieboson/boson_ops.hpp"
#include "lieboson/linalg.hpp"

namespace lieboson {

/// x, y, h with [h,x]=2x, [h,y]=-2y, [x,y]=h, all exact.
struct Sl2Triple {
  std::string name;
  OperatorPoly x;
  OperatorPoly y;
  OperatorPoly h;
};

/// Throws NotSl2 naming the failing relation and its residual.
Sl2Triple verify_triple(const OperatorPoly& x, const OperatorPoly& y, const OperatorPoly& h,
                        std::string name = "");

struct WeightedDynkinDiagram {
  std::vector<int> labels;

  /// "[2 0 2]"
  std::string to_string() const;
  /// "202"
  std::string compact() const;
  nlohmann::json to_json() const { return labels; }
  auto operator<=>(const WeightedDynkinDiagram&) const = default;
};

/// Matrix of a bilinear operator on the one-boson states in the given mode order:
/// a^dag_i a_j maps to the matrix unit e_ij. Throws NotBilinear.
Matrix<RadicalScalar> defining_matrix(const OperatorPoly& e, const std::vector<Mode>& modes);

/// Characteristic polynomial coefficients c_0..c_n (c_n = 1), exact.
std::vector<RadicalScalar> characteristic_polynomial(const Matrix<RadicalScalar>& m);

/// Integer eigenvalues with multiplicity, descending. Roots come from divisors
/// of the constant term with deflation. Throws NonIntegerSpectrum.
std::vector<long> integer_spectrum(const Matrix<RadicalScalar>& m);

/// Labels from the descending h-spectrum on the defining representation.
WeightedDynkinDiagram wdd(const Sl2Triple& t, const std::vector<Mode>& modes);
WeightedDynkinDiagram wdd_from_spectrum(std::vector<long> spectrum);

/// WDD of the class whose nilpotent has Jordan type lambda.
WeightedDynkinDiagram partition_to_wdd(const std::vector<int>& partition);
/// Partitions of n, each descending, in lexicographically increasing order.
std::vector<std::vector<int>> partitions(int n);

/// All WDDs of sl2 classes in sl(n), found by scanning label space {0,1,2}^(n-1)
/// and keeping diagrams whose h-spectrum splits into sl2 strings.
/// Ordered by label sum, then lexicographically.
std::vector<WeightedDynkinDiagram> enumerate_classes(int n);

}  // namespace lieboson
