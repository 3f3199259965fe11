#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lieboson/boson_ops.hpp"
#include "lieboson/lie_algebra.hpp"
#include "lieboson/tensor_decomp.hpp"

namespace lieboson {

/// J0^2 + (J+ J- + J- J+)/2, eigenvalues j(j+1).
OperatorPoly casimir(const JSet& j);

struct KillingCasimir {
  OperatorPoly op;
  /// c with op = c * casimir(J) when a J-set spanning the subalgebra is given.
  std::optional<RadicalScalar> scale_to_jset;
};

/// sum_ij (kappa^-1)_ij x_i x_j over a basis of the subalgebra, with kappa the
/// subalgebra's own Killing form. Throws DegenerateForm when kappa is singular
/// (including the empty subalgebra).
KillingCasimir killing_casimir(const LieAlgebra& host, const SubBasis& sub, const JSet* jset = nullptr);

/// Whether op commutes with every element of the list, exactly.
bool commutes_with_all(const OperatorPoly& op, const std::vector<OperatorPoly>& elements);

/// c with a = c * b, when such a scalar exists.
std::optional<RadicalScalar> proportionality(const OperatorPoly& a, const OperatorPoly& b);

enum class CasimirAlgebra { so6, so5, so4, so3 };

struct CasimirFormula {
  CasimirAlgebra algebra;

  std::string name() const;
  /// N(N+4), t(t+3), u(u+2), w(w+1).
  long eigenvalue(long label) const;
};

struct AmncLabels {
  long N = 0, t = 0, u = 0, w = 0;

  bool valid() const { return 0 <= w && w <= u && u <= t && t <= N; }
  auto operator<=>(const AmncLabels&) const = default;
};

struct HamiltonianSpec {
  mpq_class alpha = 0, beta = 0, gamma = 0, delta = 0;

  HamiltonianSpec operator+(const HamiltonianSpec& o) const {
    return {alpha + o.alpha, beta + o.beta, gamma + o.gamma, delta + o.delta};
  }
};

/// alpha N(N+4) + beta t(t+3) + gamma u(u+2) + delta w(w+1). Throws DomainError on invalid labels.
mpq_class energy(const HamiltonianSpec& h, const AmncLabels& labels);

/// t = 0..N, u = 0..t, w = 0..u in lexicographic order.
std::vector<AmncLabels> enumerate_labels(long n);

struct Level {
  AmncLabels labels;
  mpq_class energy;
};

std::vector<Level> spectrum(const HamiltonianSpec& h, long n);

/// Two ways of counting the states at fixed N that the branching produces.
struct StateCount {
  long labels = 0;
  /// sum over labels of (2w+1).
  long weighted = 0;
  /// C(N+3, 3): symmetric N-boson states of u(4).
  long fock_dimension = 0;
};

StateCount count_states(long n);

}  // namespace lieboson
