#include <cmath>
#include <map>

#include "support.hpp"

#include "lieboson/casimir_spectrum.hpp"
#include "lieboson/eigensolver.hpp"
#include "lieboson/errors.hpp"
#include "lieboson/fock.hpp"

using namespace lieboson;
using lieboson::test::model;

namespace {

OperatorPoly number(const Model& m) {
  OperatorPoly n;
  for (const auto& mode : m.spec.fock_modes) n += bilinear(mode, mode);
  return n;
}

std::map<long, int> grouped(const std::vector<double>& values) {
  std::map<long, int> out;
  for (double v : values) ++out[std::lround(v * 4)];
  return out;
}

}  // namespace

TEST_CASE("Fock basis layout") {
  const FockBasis b(model("u4").spec.fock_modes, 3);
  CHECK(b.size() == 20u);
  CHECK(b.state(0) == std::vector<int>{3, 0, 0, 0});
  CHECK(b.index(b.state(7)) == 7u);
  CHECK_THROWS_AS(FockBasis(model("u4").spec.fock_modes, -1), DomainError);
}

TEST_CASE("number operator is N times identity") {
  const auto& m = model("u4");
  for (int n = 0; n <= 4; ++n) {
    const FockBasis b(m.spec.fock_modes, n);
    const auto mat = fock_matrix_serial(number(m), b);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) CHECK(std::abs(mat(i, j) - std::complex<double>(i == j ? n : 0, 0)) < 1e-12);
  }
}

TEST_CASE("serial and parallel matrices agree") {
  const auto& m = model("u4");
  const FockBasis b(m.spec.fock_modes, 5);
  for (const char* j : {"L", "W", "T"}) {
    const auto op = casimir(m.jset(j));
    CHECK(fock_matrix_serial(op, b).data == fock_matrix_parallel(op, b).data);
  }
}

TEST_CASE("vibron branching of L^2 in u(3)") {
  const auto& m = model("u3");
  const auto l2 = casimir(m.jset("L"));
  for (int n = 0; n <= 6; ++n) {
    const FockBasis b(m.spec.fock_modes, n);
    const auto mat = fock_matrix_parallel(l2, b);
    CHECK(hermiticity_defect(mat) < 1e-12);
    std::map<long, int> expected;
    for (int l = n; l >= 0; l -= 2) expected[4L * l * (l + 1)] = 2 * l + 1;
    CHECK(grouped(diagonalize(mat)) == expected);
  }
}

TEST_CASE("W^2 in u(4) has w(w+1) eigenvalues") {
  const auto& m = model("u4");
  const auto w2 = casimir(m.jset("W"));
  const auto one = diagonalize(fock_matrix_parallel(w2, FockBasis(m.spec.fock_modes, 1)));
  REQUIRE(one.size() == 4u);
  CHECK(std::abs(one[0]) < 1e-8);
  CHECK(std::abs(one[1]) < 1e-8);
  CHECK(std::abs(one[2] - 0.75) < 1e-8);
  CHECK(std::abs(one[3] - 0.75) < 1e-8);
  for (int n = 2; n <= 6; ++n)
    for (double v : diagonalize(fock_matrix_parallel(w2, FockBasis(m.spec.fock_modes, n)))) {
      const double w = (std::sqrt(1 + 4 * v) - 1) / 2;
      CHECK(std::abs(2 * w - std::round(2 * w)) < 1e-8);
    }
}

TEST_CASE("number-violating operators are rejected") {
  const auto& m = model("u4");
  const auto x = OperatorPoly::creation(m.spec.fock_modes[0]);
  CHECK_THROWS_AS(fock_matrix_serial(x, FockBasis(m.spec.fock_modes, 1)), NotNumberConserving);
}

TEST_CASE("Jacobi eigensolver") {
  ComplexMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
  CHECK(diagonalize(id) == std::vector<double>{1, 1, 1});

  ComplexMatrix h(2);
  h(0, 0) = 2.0;
  h(1, 1) = 2.0;
  h(0, 1) = {0.0, 1.0};
  h(1, 0) = {0.0, -1.0};
  const auto e = diagonalize(h);
  CHECK(std::abs(e[0] - 1.0) < 1e-12);
  CHECK(std::abs(e[1] - 3.0) < 1e-12);

  ComplexMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(diagonalize(bad), NotHermitian);

  ComplexMatrix r(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::complex<double>(1.0 / (1 + i + j), i == j ? 0.0 : (i < j ? 0.3 : -0.3));
  double trace = 0.0;
  for (double v : diagonalize(r)) trace += v;
  CHECK(std::abs(trace - (1.0 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7)) < 1e-10);
}
