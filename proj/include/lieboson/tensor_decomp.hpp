#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieboson/boson_ops.hpp"
#include "lieboson/half_int.hpp"
#include "lieboson/lie_algebra.hpp"
#include "lieboson/sl2_wdd.hpp"

namespace lieboson {

/// An angular-momentum-like A1 subalgebra: [J0, J+-] = +-J+-, [J+, J-] = 2 J0.
struct JSet {
  std::string name;
  OperatorPoly j0;
  OperatorPoly jplus;
  OperatorPoly jminus;
  std::optional<WeightedDynkinDiagram> wdd;

  Sl2Triple triple() const;
};

/// Checks the three relations exactly; throws NotSl2.
JSet make_jset(std::string name, OperatorPoly j0, OperatorPoly jplus, OperatorPoly jminus);
/// J-set from an sl2 triple: J0 = h/2, J+ = x, J- = y.
JSet jset_from_triple(std::string name, const Sl2Triple& t);

/// Rank-k multiplet; components[i] is T^k_q with q = -k + i.
struct TensorMultiplet {
  HalfInt rank;
  std::vector<OperatorPoly> components;
  std::string label;

  const OperatorPoly& component(HalfInt q) const {
    return components.at(static_cast<std::size_t>((q + rank).as_int()));
  }
  bool is_spinor() const { return !rank.is_integer(); }
};

/// Highest-weight decomposition of ad(J) on L. Multiplets come in order of
/// ascending rank; inside a degenerate block the highest-weight vectors are the
/// reduced echelon basis in generator coordinates (fewest generators first).
/// Throws NotDiagonalizable, or DomainError when J is not inside L.
std::vector<TensorMultiplet> decompose_adjoint(const LieAlgebra& l, const JSet& j);

/// Ranks from decompose_adjoint, ascending.
std::vector<HalfInt> rank_signature(const LieAlgebra& l, const JSet& j);

struct TensorCheck {
  bool ok = true;
  std::vector<std::string> residuals;
};

/// Both Racah relations for every component, exact:
///   [J0, T_q] = q T_q,  [J+-, T_q] = sqrt((k -+ q)(k +- q + 1)) T_{q+-1}.
TensorCheck verify_tensor(const TensorMultiplet& t, const JSet& j);

/// sum over ranks of (2k+1).
std::size_t total_components(const std::vector<TensorMultiplet>& multiplets);

/// "0,0,1/2,1/2,1"
std::string signature_string(const std::vector<HalfInt>& ranks);

}  // namespace lieboson
