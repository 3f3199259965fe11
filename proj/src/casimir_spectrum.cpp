#include "lieboson/casimir_spectrum.hpp"

#include "lieboson/errors.hpp"
#include "lieboson/linalg.hpp"

namespace lieboson {

OperatorPoly casimir(const JSet& j) {
  return j.j0 * j.j0 + (j.jplus * j.jminus + j.jminus * j.jplus) * RadicalScalar::rational(1, 2);
}

bool commutes_with_all(const OperatorPoly& op, const std::vector<OperatorPoly>& elements) {
  for (const auto& x : elements)
    if (!commutator(op, x).is_zero()) return false;
  return true;
}

std::optional<RadicalScalar> proportionality(const OperatorPoly& a, const OperatorPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<RadicalScalar>(RadicalScalar(0)) : std::nullopt;
  const auto& [mono, coeff] = *b.terms().begin();
  const RadicalScalar c = a.coefficient(mono) * coeff.inverse();
  if (a - b * c != OperatorPoly()) return std::nullopt;
  return c;
}

KillingCasimir killing_casimir(const LieAlgebra& host, const SubBasis& sub, const JSet* jset) {
  if (sub.empty()) throw DegenerateForm("empty subalgebra");
  const LieAlgebra own = LieAlgebra::from_generators(named_elements(host, sub), Exec::serial);
  const auto& kappa = own.killing();
  if (rank(kappa) != own.dimension())
    throw DegenerateForm("Killing form of the subalgebra has rank " + std::to_string(rank(kappa)) + " < " +
                         std::to_string(own.dimension()));
  const Matrix<RadicalScalar> inv = inverse(kappa);
  KillingCasimir out;
  for (std::size_t i = 0; i < own.dimension(); ++i)
    for (std::size_t j = 0; j < own.dimension(); ++j)
      if (!inv(i, j).is_zero()) out.op += (own.element(i).op * own.element(j).op) * inv(i, j);
  if (jset) out.scale_to_jset = proportionality(out.op, casimir(*jset));
  return out;
}

std::string CasimirFormula::name() const {
  switch (algebra) {
    case CasimirAlgebra::so6: return "so(6)";
    case CasimirAlgebra::so5: return "so(5)";
    case CasimirAlgebra::so4: return "so(4)";
    case CasimirAlgebra::so3: return "so(3)";
  }
  return "?";
}

long CasimirFormula::eigenvalue(long x) const {
  switch (algebra) {
    case CasimirAlgebra::so6: return x * (x + 4);
    case CasimirAlgebra::so5: return x * (x + 3);
    case CasimirAlgebra::so4: return x * (x + 2);
    case CasimirAlgebra::so3: return x * (x + 1);
  }
  return 0;
}

mpq_class energy(const HamiltonianSpec& h, const AmncLabels& l) {
  if (!l.valid())
    throw DomainError("labels must satisfy 0 <= w <= u <= t <= N; got (" + std::to_string(l.N) + "," +
                      std::to_string(l.t) + "," + std::to_string(l.u) + "," + std::to_string(l.w) + ")");
  mpq_class e = h.alpha * CasimirFormula{CasimirAlgebra::so6}.eigenvalue(l.N) +
                h.beta * CasimirFormula{CasimirAlgebra::so5}.eigenvalue(l.t) +
                h.gamma * CasimirFormula{CasimirAlgebra::so4}.eigenvalue(l.u) +
                h.delta * CasimirFormula{CasimirAlgebra::so3}.eigenvalue(l.w);
  e.canonicalize();
  return e;
}

std::vector<AmncLabels> enumerate_labels(long n) {
  if (n < 0) throw DomainError("N must be non-negative");
  std::vector<AmncLabels> out;
  for (long t = 0; t <= n; ++t)
    for (long u = 0; u <= t; ++u)
      for (long w = 0; w <= u; ++w) out.push_back({n, t, u, w});
  return out;
}

std::vector<Level> spectrum(const HamiltonianSpec& h, long n) {
  std::vector<Level> out;
  for (const auto& l : enumerate_labels(n)) out.push_back({l, energy(h, l)});
  return out;
}

StateCount count_states(long n) {
  StateCount c;
  for (const auto& l : enumerate_labels(n)) {
    ++c.labels;
    c.weighted += 2 * l.w + 1;
  }
  c.fock_dimension = (n + 1) * (n + 2) * (n + 3) / 6;
  return c;
}

}  // namespace lieboson
