#include <cmath>

#include "support.hpp"

#include "lieboson/angular.hpp"
#include "lieboson/errors.hpp"

using namespace lieboson;

namespace {

double fact(int n) { return std::tgamma(n + 1.0); }

/// Racah's closed formula in floating point: the independent oracle.
double cg_oracle(double j1, double m1, double j2, double m2, double j, double m) {
  if (std::abs(m1 + m2 - m) > 1e-9) return 0.0;
  if (j < std::abs(j1 - j2) - 1e-9 || j > j1 + j2 + 1e-9) return 0.0;
  auto ri = [](double x) { return static_cast<int>(std::lround(x)); };
  const double pre = std::sqrt((2 * j + 1) * fact(ri(j1 + j2 - j)) * fact(ri(j1 - j2 + j)) * fact(ri(-j1 + j2 + j)) /
                               fact(ri(j1 + j2 + j + 1))) *
                     std::sqrt(fact(ri(j1 + m1)) * fact(ri(j1 - m1)) * fact(ri(j2 + m2)) * fact(ri(j2 - m2)) *
                               fact(ri(j + m)) * fact(ri(j - m)));
  double sum = 0.0;
  for (int k = 0; k <= 40; ++k) {
    const int d[] = {ri(j1 + j2 - j) - k, ri(j1 - m1) - k, ri(j2 + m2) - k, ri(j - j2 + m1) + k, ri(j - j1 - m2) + k};
    if (std::any_of(std::begin(d), std::end(d), [](int x) { return x < 0; })) continue;
    double den = fact(k);
    for (int x : d) den *= fact(x);
    sum += (k % 2 ? -1.0 : 1.0) / den;
  }
  return pre * sum;
}

}  // namespace

TEST_CASE("Clebsch-Gordan against Racah's formula") {
  int checked = 0;
  for (int t1 = 0; t1 <= 4; ++t1)
    for (int t2 = 0; t2 <= 4; ++t2)
      for (int t = std::abs(t1 - t2); t <= t1 + t2; t += 2)
        for (int m1 = -t1; m1 <= t1; m1 += 2)
          for (int m2 = -t2; m2 <= t2; m2 += 2) {
            const int m = m1 + m2;
            if (std::abs(m) > t) continue;
            const auto v = clebsch_gordan(half(t1), half(m1), half(t2), half(m2), half(t), half(m));
            CHECK(std::abs(v.to_complex().real() - cg_oracle(t1 / 2.0, m1 / 2.0, t2 / 2.0, m2 / 2.0, t / 2.0, m / 2.0)) <
                  1e-12);
            CHECK(v.to_complex().imag() == 0.0);
            ++checked;
          }
  CHECK(checked > 300);
}

TEST_CASE("Clebsch-Gordan orthogonality, exact") {
  for (int t1 = 0; t1 <= 3; ++t1)
    for (int t2 = 0; t2 <= 3; ++t2)
      for (int t = std::abs(t1 - t2); t <= t1 + t2; t += 2)
        for (int tp = std::abs(t1 - t2); tp <= t1 + t2; tp += 2)
          for (int m = -std::min(t, tp); m <= std::min(t, tp); m += 2) {
            RadicalScalar sum;
            for (int m1 = -t1; m1 <= t1; m1 += 2) {
              const int m2 = m - m1;
              if (std::abs(m2) > t2 || (m2 - t2) % 2) continue;
              sum += clebsch_gordan(half(t1), half(m1), half(t2), half(m2), half(t), half(m)) *
                     clebsch_gordan(half(t1), half(m1), half(t2), half(m2), half(tp), half(m));
            }
            CHECK(sum == RadicalScalar(t == tp ? 1 : 0));
          }
}

TEST_CASE("Clebsch-Gordan special values") {
  CHECK(clebsch_gordan(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(-1), HalfInt(0), HalfInt(0)) ==
        RadicalScalar::sqrt(mpq_class(1, 3)));
  CHECK(clebsch_gordan(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)) ==
        -RadicalScalar::sqrt(mpq_class(1, 3)));
  CHECK(clebsch_gordan(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(0)).is_zero());
  CHECK_THROWS_AS(clebsch_gordan(HalfInt(1), half(1), HalfInt(1), HalfInt(0), HalfInt(1), half(1)), DomainError);
}

TEST_CASE("coupling creators with tilde annihilators") {
  const BosonSpecies p{"p", HalfInt(1)};
  const auto cr = SphericalTensorOp::creators(p), an = SphericalTensorOp::tilde_annihilators(p);
  const auto n = couple(cr, an, HalfInt(0));
  OperatorPoly number;
  for (auto mu : p.components()) number += bilinear({"p", mu}, {"p", mu});
  CHECK(n.component(HalfInt(0)) == number * RadicalScalar::sqrt(mpq_class(1, 3)));
  CHECK(couple(cr, an, HalfInt(1)).size() == 3u);
  CHECK_THROWS_AS(couple(cr, an, HalfInt(3)), TriangleError);
}
