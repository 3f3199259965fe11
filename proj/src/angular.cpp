#include "lieboson/angular.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "lieboson/errors.hpp"

namespace lieboson {

namespace {

constexpr int kCachedTwiceJ = 8;  // j <= 4

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void check_pair(HalfInt j, HalfInt m) {
  if (j.twice() < 0) throw DomainError("negative angular momentum " + j.to_string());
  if (!same_parity(j, m)) throw DomainError("m - j not an integer: j=" + j.to_string() + " m=" + m.to_string());
  if (m > j || m < -j) throw DomainError("|m| > j: j=" + j.to_string() + " m=" + m.to_string());
}

RadicalScalar racah(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  auto i = [](HalfInt h) { return h.as_int(); };
  const int a = i(j1 + j2 - j);
  const int b = i(j1 - j2 + j);
  const int c = i(-j1 + j2 + j);
  const int d = i(j1 + j2 + j) + 1;

  mpq_class under = mpq_class(j.twice() + 1) * mpq_class(factorial(a) * factorial(b) * factorial(c), factorial(d));
  under *= factorial(i(j + m)) * factorial(i(j - m)) * factorial(i(j1 - m1)) * factorial(i(j1 + m1)) *
           factorial(i(j2 - m2)) * factorial(i(j2 + m2));
  under.canonicalize();

  mpq_class sum = 0;
  for (int k = 0; k <= a; ++k) {
    const std::array<int, 6> args{k, a - k, i(j1 - m1) - k, i(j2 + m2) - k, i(j - j2 + m1) + k, i(j - j1 - m2) + k};
    bool ok = true;
    mpz_class den = 1;
    for (int v : args) {
      if (v < 0) { ok = false; break; }
      den *= factorial(v);
    }
    if (!ok) continue;
    mpq_class term(1, den);
    term.canonicalize();
    sum += (k % 2 == 0) ? term : mpq_class(-term);
  }
  return RadicalScalar(sum) * RadicalScalar::sqrt(under);
}

using CacheKey = std::array<int, 6>;

std::shared_mutex cache_mutex;
std::map<CacheKey, RadicalScalar>& cache() {
  static std::map<CacheKey, RadicalScalar> table;
  return table;
}

}  // namespace

RadicalScalar clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(j, m);
  if (m1 + m2 != m) return {};
  if (!same_parity(j1 + j2, j)) return {};
  if (j > j1 + j2) return {};
  if (j < j1 - j2 || j < j2 - j1) return {};

  const bool cacheable = j1.twice() <= kCachedTwiceJ && j2.twice() <= kCachedTwiceJ && j.twice() <= kCachedTwiceJ;
  if (!cacheable) return racah(j1, m1, j2, m2, j, m);

  const CacheKey key{j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice()};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  RadicalScalar value = racah(j1, m1, j2, m2, j, m);
  std::unique_lock lock(cache_mutex);
  cache().emplace(key, value);
  return value;
}

SphericalTensorOp::SphericalTensorOp(HalfInt rank, std::vector<OperatorPoly> components)
    : rank_(rank), components_(std::move(components)) {
  if (rank.twice() < 0) throw DomainError("negative tensor rank");
  if (components_.size() != static_cast<std::size_t>(rank.twice() + 1))
    throw DomainError("rank " + rank.to_string() + " tensor needs " + std::to_string(rank.twice() + 1) +
                      " components, got " + std::to_string(components_.size()));
}

const OperatorPoly& SphericalTensorOp::component(HalfInt q) const {
  if (!same_parity(q, rank_) || q < -rank_ || q > rank_)
    throw DomainError("component " + q.to_string() + " outside rank " + rank_.to_string());
  return components_[static_cast<std::size_t>((q + rank_).as_int())];
}

SphericalTensorOp SphericalTensorOp::creators(const BosonSpecies& species) {
  std::vector<OperatorPoly> comps;
  for (HalfInt mu : species.components()) comps.push_back(OperatorPoly::creation({species.name, mu}));
  return {species.rank, std::move(comps)};
}

SphericalTensorOp SphericalTensorOp::tilde_annihilators(const BosonSpecies& species) {
  std::vector<OperatorPoly> comps;
  for (HalfInt mu : species.components()) comps.push_back(OperatorPoly::from_factor(tilde(species, mu)));
  return {species.rank, std::move(comps)};
}

SphericalTensorOp couple(const SphericalTensorOp& t, const SphericalTensorOp& u, HalfInt k) {
  const HalfInt kt = t.rank();
  const HalfInt ku = u.rank();
  const HalfInt low = kt > ku ? kt - ku : ku - kt;
  if (k < low || k > kt + ku || !same_parity(k, kt + ku))
    throw TriangleError("cannot couple ranks " + kt.to_string() + " and " + ku.to_string() + " to " + k.to_string());

  std::vector<OperatorPoly> comps;
  for (HalfInt q = -k; q <= k; q += HalfInt(1)) {
    OperatorPoly sum;
    for (HalfInt qt = -kt; qt <= kt; qt += HalfInt(1)) {
      const HalfInt qu = q - qt;
      if (qu < -ku || qu > ku) continue;
      const RadicalScalar cg = clebsch_gordan(kt, qt, ku, qu, k, q);
      if (cg.is_zero()) continue;
      sum += (t.component(qt) * u.component(qu)) * cg;
    }
    comps.push_back(std::move(sum));
  }
  return {k, std::move(comps)};
}

}  // namespace lieboson
