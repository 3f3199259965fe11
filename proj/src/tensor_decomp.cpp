#include "lieboson/tensor_decomp.hpp"

#include <algorithm>

#include "lieboson/errors.hpp"
#include "lieboson/linalg.hpp"

namespace lieboson {

namespace {

RadicalScalar half_value(HalfInt h) { return RadicalScalar::rational(h.twice(), 2); }

/// sqrt((k - q)(k + q + 1)) for the raising step, as an exact scalar.
RadicalScalar ladder(HalfInt k, HalfInt q, bool raising) {
  const HalfInt a = raising ? k - q : k + q;
  const HalfInt b = raising ? k + q + HalfInt(1) : k - q + HalfInt(1);
  return sqrt_int(static_cast<long>(a.twice()) * b.twice() / 4);
}

Vec require_coords(const LieAlgebra& l, const OperatorPoly& x, const std::string& what) {
  auto c = l.coordinates(x);
  if (!c) throw DomainError(what + " is not an element of the algebra");
  return *c;
}

std::size_t support(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const RadicalScalar& x) { return !x.is_zero(); }));
}

std::size_t first_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

}  // namespace

Sl2Triple JSet::triple() const { return {name, jplus, jminus, j0 * RadicalScalar(2)}; }

JSet make_jset(std::string name, OperatorPoly j0, OperatorPoly jplus, OperatorPoly jminus) {
  const OperatorPoly r1 = commutator(j0, jplus) - jplus;
  if (!r1.is_zero()) throw NotSl2(name + ": [J0,J+] != J+; residual " + r1.to_string());
  const OperatorPoly r2 = commutator(j0, jminus) + jminus;
  if (!r2.is_zero()) throw NotSl2(name + ": [J0,J-] != -J-; residual " + r2.to_string());
  const OperatorPoly r3 = commutator(jplus, jminus) - j0 * RadicalScalar(2);
  if (!r3.is_zero()) throw NotSl2(name + ": [J+,J-] != 2 J0; residual " + r3.to_string());
  return {std::move(name), std::move(j0), std::move(jplus), std::move(jminus), std::nullopt};
}

JSet jset_from_triple(std::string name, const Sl2Triple& t) {
  return make_jset(std::move(name), t.h * RadicalScalar::rational(1, 2), t.x, t.y);
}

std::vector<TensorMultiplet> decompose_adjoint(const LieAlgebra& l, const JSet& j) {
  const std::size_t d = l.dimension();
  const Matrix<RadicalScalar> a0 = l.ad(require_coords(l, j.j0, "J0"));
  const Matrix<RadicalScalar> ap = l.ad(require_coords(l, j.jplus, "J+"));
  const Matrix<RadicalScalar> am = l.ad(require_coords(l, j.jminus, "J-"));

  // Weight spaces of ad(J0) over half-integers in [-d, d].
  std::vector<std::pair<HalfInt, SubBasis>> weights;
  std::size_t found = 0;
  for (int tq = 2 * static_cast<int>(d); tq >= -2 * static_cast<int>(d); --tq) {
    Matrix<RadicalScalar> shifted = a0;
    const RadicalScalar q = RadicalScalar::rational(tq, 2);
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= q;
    SubBasis space = nullspace(shifted);
    if (space.empty()) continue;
    found += space.size();
    weights.emplace_back(HalfInt::from_twice(tq), std::move(space));
  }
  if (found != d)
    throw NotDiagonalizable(j.name + ": weight spaces of ad(J0) span " + std::to_string(found) + " of " +
                            std::to_string(d) + " dimensions");

  std::vector<TensorMultiplet> out;
  for (const auto& [k, space] : weights) {
    if (k.twice() < 0) continue;
    // Highest-weight vectors: kernel of ad(J+) restricted to this weight space.
    Matrix<RadicalScalar> restricted(d, space.size());
    for (std::size_t c = 0; c < space.size(); ++c) {
      const Vec image = ap.apply(space[c]);
      for (std::size_t r = 0; r < d; ++r) restricted(r, c) = image[r];
    }
    SubBasis highest;
    for (const auto& coeffs : nullspace(restricted)) {
      Vec v(d);
      for (std::size_t c = 0; c < space.size(); ++c)
        for (std::size_t r = 0; r < d; ++r)
          if (!coeffs[c].is_zero() && !space[c][r].is_zero()) v[r] += coeffs[c] * space[c][r];
      highest.push_back(std::move(v));
    }
    highest = span_basis(highest, d);
    std::stable_sort(highest.begin(), highest.end(), [](const Vec& a, const Vec& b) {
      if (support(a) != support(b)) return support(a) < support(b);
      return first_index(a) < first_index(b);
    });

    for (const auto& hw : highest) {
      std::vector<Vec> string{hw};
      for (HalfInt q = k; q > -k; q -= HalfInt(1)) {
        const RadicalScalar inv = ladder(k, q, false).inverse();
        Vec next = am.apply(string.back());
        for (auto& x : next) x *= inv;
        string.push_back(std::move(next));
      }
      std::reverse(string.begin(), string.end());
      TensorMultiplet t;
      t.rank = k;
      for (const auto& v : string) t.components.push_back(l.to_operator(v));
      out.push_back(std::move(t));
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const TensorMultiplet& a, const TensorMultiplet& b) { return a.rank < b.rank; });
  if (total_components(out) != d)
    throw NotDiagonalizable(j.name + ": multiplets cover " + std::to_string(total_components(out)) + " of " +
                            std::to_string(d) + " dimensions");
  // Components must be a basis of L.
  SubBasis all;
  for (const auto& t : out)
    for (const auto& c : t.components) all.push_back(*l.coordinates(c));
  if (span_basis(all, d).size() != d) throw VerificationFailure(j.name + ": multiplets are not independent");

  std::size_t index = 0;
  for (auto& t : out) t.label = "T" + std::to_string(++index);
  return out;
}

std::vector<HalfInt> rank_signature(const LieAlgebra& l, const JSet& j) {
  std::vector<HalfInt> ranks;
  for (const auto& t : decompose_adjoint(l, j)) ranks.push_back(t.rank);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

TensorCheck verify_tensor(const TensorMultiplet& t, const JSet& j) {
  TensorCheck out;
  const HalfInt k = t.rank;
  if (t.components.size() != static_cast<std::size_t>(k.twice() + 1)) {
    out.ok = false;
    out.residuals.push_back("component count " + std::to_string(t.components.size()) + " does not match rank " +
                            k.to_string());
    return out;
  }
  auto fail = [&](const std::string& relation, HalfInt q, const OperatorPoly& r) {
    out.ok = false;
    out.residuals.push_back(relation + " at q=" + q.to_string() + ": " + r.to_string());
  };
  for (HalfInt q = -k; q <= k; q += HalfInt(1)) {
    const OperatorPoly& tq = t.component(q);
    const OperatorPoly r0 = commutator(j.j0, tq) - tq * half_value(q);
    if (!r0.is_zero()) fail("[J0,T]", q, r0);

    OperatorPoly up = commutator(j.jplus, tq);
    if (q < k) up -= t.component(q + HalfInt(1)) * ladder(k, q, true);
    if (!up.is_zero()) fail("[J+,T]", q, up);

    OperatorPoly down = commutator(j.jminus, tq);
    if (q > -k) down -= t.component(q - HalfInt(1)) * ladder(k, q, false);
    if (!down.is_zero()) fail("[J-,T]", q, down);
  }
  return out;
}

std::size_t total_components(const std::vector<TensorMultiplet>& multiplets) {
  std::size_t n = 0;
  for (const auto& t : multiplets) n += t.components.size();
  return n;
}

std::string signature_string(const std::vector<HalfInt>& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + ranks[i].to_string();
  return s;
}

}  // namespace lieboson
